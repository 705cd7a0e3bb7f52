//! Serializable verification reports and their CSV summary rows.

use std::collections::BTreeMap;
use std::io::Write;

use catermin_core::verify::{Outcome, Violation, Witness};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ViolationRecord {
    /// The instance the violation belongs to, e.g. the reduced sequence.
    pub instance: String,
    pub check: String,
    pub extremal: Vec<usize>,
    pub rival: Vec<usize>,
    pub detail: String,
}

impl ViolationRecord {
    pub fn new(instance: &str, v: &Violation) -> Self {
        ViolationRecord {
            instance: instance.to_string(),
            check: v.check.as_str().to_string(),
            extremal: v.extremal.clone(),
            rival: v.rival.clone(),
            detail: v.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SampleRecord {
    pub x: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct WitnessRecord {
    pub instance: String,
    pub spine: Vec<usize>,
    pub matching_poly: Vec<String>,
    pub hosoya: String,
    pub energy: f64,
    pub energy_error_bound: f64,
    pub samples: Vec<SampleRecord>,
}

impl WitnessRecord {
    pub fn new(instance: &str, w: &Witness) -> Self {
        WitnessRecord {
            instance: instance.to_string(),
            spine: w.caterpillar.spine().to_vec(),
            matching_poly: w.matching_poly.to_decimal_strings(),
            hosoya: w.hosoya.to_string(),
            energy: w.energy.value,
            energy_error_bound: w.energy.error_bound,
            samples: w
                .samples
                .iter()
                .map(|(x, v)| SampleRecord {
                    x: x.to_string(),
                    value: v.to_string(),
                })
                .collect(),
        }
    }
}

/// One instance of a sweep: its label and outcome summary.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct InstanceSummary {
    pub instance: String,
    pub universe_size: u64,
    pub counterexamples: usize,
    pub inconclusive: usize,
    pub coefficient_dominance_failures: u64,
    pub witness_spine: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameters: BTreeMap<String, Value>,
    pub universe_size: u64,
    pub elapsed_ms: u64,
    pub success: bool,
    pub counterexamples: Vec<ViolationRecord>,
    pub inconclusive: Vec<ViolationRecord>,
    /// The extremal caterpillar of a single-instance claim, or of the largest
    /// instance of a sweep.
    pub witness: Option<WitnessRecord>,
    pub instances: Vec<InstanceSummary>,
    pub observations: BTreeMap<String, Value>,
}

impl VerificationReport {
    pub fn new(claim_id: &str, parameters: BTreeMap<String, Value>) -> Self {
        VerificationReport {
            claim_id: claim_id.to_string(),
            parameters,
            universe_size: 0,
            elapsed_ms: 0,
            success: true,
            counterexamples: Vec::new(),
            inconclusive: Vec::new(),
            witness: None,
            instances: Vec::new(),
            observations: BTreeMap::new(),
        }
    }

    /// Appends one instance. Call in canonical instance order.
    pub fn absorb(&mut self, instance: &str, outcome: &Outcome) {
        let universe = u64::try_from(outcome.universe_size).unwrap_or(u64::MAX);
        self.universe_size = self.universe_size.saturating_add(universe);
        self.counterexamples
            .extend(outcome.counterexamples.iter().map(|v| ViolationRecord::new(instance, v)));
        self.inconclusive
            .extend(outcome.inconclusive.iter().map(|v| ViolationRecord::new(instance, v)));
        let largest = self.instances.iter().map(|i| i.universe_size).max().unwrap_or(0);
        if let Some(w) = &outcome.witness {
            if self.witness.is_none() || universe > largest {
                self.witness = Some(WitnessRecord::new(instance, w));
            }
        }
        self.instances.push(InstanceSummary {
            instance: instance.to_string(),
            universe_size: universe,
            counterexamples: outcome.counterexamples.len(),
            inconclusive: outcome.inconclusive.len(),
            coefficient_dominance_failures: u64::try_from(outcome.coefficient_dominance_failures).unwrap_or(u64::MAX),
            witness_spine: outcome.witness.as_ref().map(|w| w.caterpillar.spine().to_vec()),
        });
        self.success = self.counterexamples.is_empty() && self.inconclusive.is_empty();
    }

    pub fn observe(&mut self, key: &str, value: impl Into<Value>) {
        self.observations.insert(key.to_string(), value.into());
    }

    /// 0 on success, 1 with counterexamples, 4 with only inconclusive comparisons.
    pub fn exit_code(&self) -> i32 {
        if !self.counterexamples.is_empty() {
            1
        } else if !self.inconclusive.is_empty() {
            4
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// One CSV row per instance.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record([
            "claim_id",
            "instance",
            "universe_size",
            "counterexamples",
            "inconclusive",
            "coefficient_dominance_failures",
            "witness_spine",
        ])?;
        for i in &self.instances {
            let spine = i
                .witness_spine
                .as_ref()
                .map(|s| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            writer.write_record([
                self.claim_id.as_str(),
                i.instance.as_str(),
                &i.universe_size.to_string(),
                &i.counterexamples.to_string(),
                &i.inconclusive.to_string(),
                &i.coefficient_dominance_failures.to_string(),
                &spine,
            ])?;
        }
        writer.flush()?;
        Ok(())
    }
}
