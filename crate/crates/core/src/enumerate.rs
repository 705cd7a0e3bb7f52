//! Exhaustive enumeration of caterpillar universes and small degree sequences,
//! and brute-force minimisers over them.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;

use crate::energy::{energy_from_matching_poly, EnergyValue};
use crate::graph::{Caterpillar, DegreeSequence, ReducedDegreeSequence};
use crate::matching::caterpillar_matching_poly;
use crate::{Error, Rational, Result};

/// Default limit on the number of caterpillars a brute-force scan may visit.
pub const UNIVERSE_GUARD: u128 = 10_000_000;

/// Rearranges `word` into the next lexicographically larger permutation.
/// Returns `false` (leaving `word` sorted ascending) after the last one.
fn next_permutation(word: &mut [usize]) -> bool {
    let Some(i) = word.windows(2).rposition(|w| w[0] < w[1]) else {
        word.reverse();
        return false;
    };
    let j = word.iter().rposition(|&x| x > word[i]).expect("a larger entry exists past the pivot");
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

/// Every caterpillar with reduced degree sequence `r`, each isomorphism class
/// once, as the lexicographically smaller of its two spine words. Output is in
/// increasing lexicographic order of that word.
#[derive(Clone, Debug)]
pub struct Caterpillars {
    word: Vec<usize>,
    done: bool,
}

impl Iterator for Caterpillars {
    type Item = Caterpillar;

    fn next(&mut self) -> Option<Caterpillar> {
        while !self.done {
            let current = self.word.clone();
            self.done = !next_permutation(&mut self.word);
            if current.iter().le(current.iter().rev()) {
                return Some(Caterpillar::from_spine(&current).expect("reduced entries form a valid spine"));
            }
        }
        None
    }
}

pub fn enumerate_caterpillars(r: &ReducedDegreeSequence) -> Caterpillars {
    let mut word = r.degrees().to_vec();
    word.sort_unstable();
    Caterpillars { word, done: false }
}

fn multiplicities(values: &[usize]) -> Vec<usize> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut counts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let j = sorted[i..].iter().take_while(|&&v| v == sorted[i]).count();
        counts.push(j);
        i += j;
    }
    counts
}

fn multinomial(counts: &[usize]) -> u128 {
    let mut result: u128 = 1;
    let mut total = 0u128;
    for &c in counts {
        for k in 1..=c as u128 {
            total += 1;
            // result * total / k stays integral at every step.
            result = result * total / k;
        }
    }
    result
}

/// `|ℂ_D| = (P + Q) / 2` with `P` the number of distinct spine words and `Q`
/// the number of palindromic ones.
pub fn caterpillar_count(r: &ReducedDegreeSequence) -> u128 {
    let counts = multiplicities(r.degrees());
    let p = multinomial(&counts);
    let odd = counts.iter().filter(|&&c| c % 2 == 1).count();
    let q = if odd <= 1 {
        let halves: Vec<usize> = counts.iter().map(|c| c / 2).collect();
        multinomial(&halves)
    } else {
        0
    };
    (p + q) / 2
}

/// All non-increasing sequences of length `len` with entries in `[2, max_entry]`,
/// in lexicographic order.
pub fn reduced_sequences_of_len(len: usize, max_entry: usize) -> Vec<ReducedDegreeSequence> {
    if max_entry < 2 || len == 0 {
        return Vec::new();
    }
    // Non-decreasing words in lexicographic order, reversed into sequences.
    let mut word = alloc::vec![2usize; len];
    let mut level = Vec::new();
    loop {
        let mut seq = word.clone();
        seq.reverse();
        level.push(seq);
        let Some(i) = word.iter().rposition(|&v| v < max_entry) else { break };
        let v = word[i] + 1;
        for w in &mut word[i..] {
            *w = v;
        }
    }
    level.sort_unstable();
    level
        .into_iter()
        .map(|d| ReducedDegreeSequence::new(d).expect("entries are at least 2"))
        .collect()
}

/// Number of sequences [`reduced_sequences_of_len`] yields: `C(len + e - 1, len)`
/// with `e = max_entry - 1` admissible values. Saturates at `u128::MAX`.
pub fn reduced_sequence_count(len: usize, max_entry: usize) -> u128 {
    if max_entry < 2 || len == 0 {
        return 0;
    }
    let values = (max_entry - 1) as u128;
    let mut count: u128 = 1;
    for k in 1..=len as u128 {
        count = match count.checked_mul(values - 1 + k) {
            Some(c) => c / k,
            None => return u128::MAX,
        };
    }
    count
}

/// All non-increasing sequences with entries in `[2, max_entry]` and lengths
/// `1..=max_len`, ordered by length and then lexicographically.
pub fn enumerate_reduced_sequences(max_len: usize, max_entry: usize) -> Vec<ReducedDegreeSequence> {
    (1..=max_len).flat_map(|len| reduced_sequences_of_len(len, max_entry)).collect()
}

/// Degree sequences of trees on `n` vertices with every degree at most
/// `max_degree` and a non-empty reduced form, in decreasing lexicographic order.
pub fn tree_degree_sequences(n: usize, max_degree: usize) -> Vec<DegreeSequence> {
    fn extend(prefix: &mut Vec<usize>, remaining_slots: usize, remaining_sum: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        if remaining_slots == 0 {
            if remaining_sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // Every later slot needs at least 1 and at most the current entry.
        if remaining_sum < remaining_slots {
            return;
        }
        let top = cap.min(remaining_sum - (remaining_slots - 1));
        for v in (1..=top).rev() {
            if v * remaining_slots < remaining_sum {
                break;
            }
            prefix.push(v);
            extend(prefix, remaining_slots - 1, remaining_sum - v, v, out);
            prefix.pop();
        }
    }
    if n < 3 || max_degree < 2 {
        return Vec::new();
    }
    let mut raw = Vec::new();
    extend(&mut Vec::with_capacity(n), n, 2 * (n - 1), max_degree, &mut raw);
    raw.into_iter()
        .map(|d| DegreeSequence::new(d).expect("entries are positive"))
        .collect()
}

/// Every caterpillar on `n` vertices with maximum degree at most `max_degree`,
/// grouped by reduced sequence.
pub fn caterpillars_on(n: usize, max_degree: usize) -> Vec<Caterpillar> {
    tree_degree_sequences(n, max_degree)
        .iter()
        .filter_map(|d| d.reduce().ok())
        .flat_map(|r| enumerate_caterpillars(&r).collect::<Vec<_>>())
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Objective {
    Hosoya,
    Energy,
    /// `M(G, x)` at an exact positive rational.
    MatchingAt(Rational),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ObjectiveValue {
    Hosoya(BigUint),
    Energy(EnergyValue),
    MatchingAt(Rational),
}

impl ObjectiveValue {
    fn of(c: &Caterpillar, objective: &Objective) -> ObjectiveValue {
        let p = caterpillar_matching_poly(c);
        match objective {
            Objective::Hosoya => ObjectiveValue::Hosoya(p.sum()),
            Objective::Energy => ObjectiveValue::Energy(energy_from_matching_poly(&p)),
            Objective::MatchingAt(x) => ObjectiveValue::MatchingAt(p.eval(x)),
        }
    }

    fn less_than(&self, other: &ObjectiveValue) -> bool {
        match (self, other) {
            (ObjectiveValue::Hosoya(a), ObjectiveValue::Hosoya(b)) => a < b,
            (ObjectiveValue::MatchingAt(a), ObjectiveValue::MatchingAt(b)) => a < b,
            (ObjectiveValue::Energy(a), ObjectiveValue::Energy(b)) => {
                a.value.partial_cmp(&b.value) == Some(Ordering::Less)
            }
            _ => false,
        }
    }
}

/// Global minimiser of `objective` over `ℂ_D`; ties go to the
/// lexicographically smallest canonical spine word.
pub fn brute_min(r: &ReducedDegreeSequence, objective: &Objective) -> Result<(Caterpillar, ObjectiveValue)> {
    brute_min_with_guard(r, objective, UNIVERSE_GUARD)
}

pub fn brute_min_with_guard(
    r: &ReducedDegreeSequence,
    objective: &Objective,
    guard: u128,
) -> Result<(Caterpillar, ObjectiveValue)> {
    let size = caterpillar_count(r);
    if size > guard {
        return Err(Error::TooLarge(format!("{size} caterpillars exceed the limit of {guard}")));
    }
    let mut best: Option<(Caterpillar, ObjectiveValue)> = None;
    for c in enumerate_caterpillars(r) {
        let value = ObjectiveValue::of(&c, objective);
        if best.as_ref().is_none_or(|(_, b)| value.less_than(b)) {
            best = Some((c, value));
        }
    }
    best.ok_or(Error::EmptySequence)
}
