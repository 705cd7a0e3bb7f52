use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use catermin::format::{self, FormatError};
use catermin::report::VerificationReport;
use catermin::sweep;
use catermin_core::energy::{energy_coulson, energy_eigen, energy_from_roots, EnergyValue, DEFAULT_QUADRATURE_STEPS};
use catermin_core::enumerate::{caterpillar_count, enumerate_caterpillars};
use catermin_core::extremal::{build_halves, build_s};
use catermin_core::majorization::majorization_chain;
use catermin_core::matching::{caterpillar_matching_poly, matching_poly};
use catermin_core::{Error, Rational, ReducedDegreeSequence, Tree};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

const DEFAULT_X: &str = "1/4,1/2,1,2,4";

#[derive(Parser)]
#[command(name = "catermin", version, about = "Matching polynomials, Hosoya indices and energies of caterpillars")]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; JSON by default, CSV for `plotdata`.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Worker threads for verification sweeps (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Roots,
    Coulson,
    Eigen,
    All,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TreeInput {
    /// Caterpillar spine as total degrees, e.g. `4,2,3`.
    #[arg(long)]
    spine: Option<String>,
    /// Edge list file: one `u v` pair per line, 0-based labels.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SequenceInput {
    /// Reduced degree sequence (entries >= 2).
    #[arg(long)]
    reduced: Option<String>,
    /// Full degree sequence including the 1s of the leaves.
    #[arg(long)]
    full: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of the matching polynomial, lowest degree first.
    Mpoly(TreeInput),
    /// Hosoya index Z = M(T, 1).
    Hosoya(TreeInput),
    /// Graph energy.
    Energy {
        #[command(flatten)]
        input: TreeInput,
        #[arg(long, value_enum, default_value_t = Method::Roots)]
        method: Method,
    },
    /// The extremal caterpillar S(D).
    Extremal(SequenceInput),
    /// Every caterpillar with the given degree sequence, up to reversal.
    Enumerate(SequenceInput),
    /// Exhaustive verification sweeps.
    Verify {
        #[command(subcommand)]
        claim: Claim,
    },
    /// CSV samples of M(H, x) for every caterpillar H with the given sequence.
    Plotdata {
        #[command(flatten)]
        input: SequenceInput,
        #[arg(long, default_value = "0")]
        x_min: String,
        #[arg(long, default_value = "1")]
        x_max: String,
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u32).range(1..))]
        points: u32,
    },
    /// Unit-transfer chain from Y up to D, where Y is majorized by D.
    Chain {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
}

#[derive(Subcommand)]
enum Claim {
    /// S(D) minimises M(·, x), Z and En over all caterpillars with sequence D.
    Min {
        /// Check a single reduced sequence instead of a sweep.
        #[arg(long, conflicts_with_all = ["max_len", "max_entry"])]
        reduced: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, default_value_t = 5)]
        max_entry: usize,
        #[arg(long, default_value = DEFAULT_X)]
        x: String,
    },
    /// Y majorized by D implies S(D) is below S(Y), for all tree sequences on n vertices.
    Majorization {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value = DEFAULT_X)]
        x: String,
    },
    /// Minimiser among caterpillars of order n and diameter m.
    Diameter {
        #[arg(long)]
        n: usize,
        /// Defaults to every admissible diameter.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value = DEFAULT_X)]
        x: String,
    },
    /// Minimiser among caterpillars of order n and maximum degree at most d.
    Maxdeg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value = DEFAULT_X)]
        x: String,
    },
    /// Matching polynomials of random trees against brute force.
    Oracle {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// An exit code and the message printed on standard error.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

fn core_code(e: &Error) -> u8 {
    match e {
        Error::EmptyResult | Error::InvalidDiameter { .. } => 3,
        _ => 2,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: core_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        let code = match &e {
            FormatError::Invalid(inner) => core_code(inner),
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Output {
    path: Option<PathBuf>,
    format: OutputFormat,
}

impl Output {
    fn write(&self, text: &str) -> Result<(), Failure> {
        match &self.path {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(text.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
            }
        }
    }

    /// Objects are pretty-printed; bare arrays stay on one line.
    fn json(&self, value: &Value) -> Result<(), Failure> {
        let text = if value.is_object() {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        };
        self.write(&(text.expect("values serialize") + "\n"))
    }

    /// Writes `rows` as CSV, or as a JSON array of objects keyed by `header`.
    fn table(&self, header: &[&str], rows: &[Vec<String>]) -> Result<(), Failure> {
        match self.format {
            OutputFormat::Csv => {
                let emit = || -> Result<Vec<u8>, Box<dyn std::error::Error>> {
                    let mut writer = csv::Writer::from_writer(Vec::new());
                    writer.write_record(header)?;
                    for row in rows {
                        writer.write_record(row)?;
                    }
                    Ok(writer.into_inner()?)
                };
                let bytes = emit().map_err(|e| Failure::usage(e.to_string()))?;
                self.write(&String::from_utf8(bytes).expect("csv output is utf-8"))
            }
            OutputFormat::Json => {
                let objects: Vec<Value> = rows
                    .iter()
                    .map(|row| Value::Object(header.iter().map(|h| h.to_string()).zip(row.iter().map(|c| json!(c))).collect()))
                    .collect();
                self.json(&Value::from(objects))
            }
        }
    }

    fn report(&self, report: &VerificationReport) -> Result<u8, Failure> {
        match self.format {
            OutputFormat::Json => self.write(&report.to_json())?,
            OutputFormat::Csv => {
                let mut bytes = Vec::new();
                report.write_csv(&mut bytes).map_err(|e| Failure::usage(e.to_string()))?;
                self.write(&String::from_utf8(bytes).expect("csv output is utf-8"))?;
            }
        }
        eprintln!(
            "{}: universe {}, {} counterexample(s), {} inconclusive, {} ms",
            report.claim_id,
            report.universe_size,
            report.counterexamples.len(),
            report.inconclusive.len(),
            report.elapsed_ms
        );
        Ok(report.exit_code() as u8)
    }
}

fn read_tree(input: &TreeInput) -> Result<Tree, Failure> {
    match (&input.spine, &input.edges) {
        (Some(spine), _) => Ok(format::parse_spine(spine)?.to_tree()),
        (None, Some(path)) => Ok(format::read_edge_list(path)?),
        (None, None) => Err(Failure::usage("one of --spine or --edges is required")),
    }
}

fn read_sequence(input: &SequenceInput) -> Result<ReducedDegreeSequence, Failure> {
    match (&input.reduced, &input.full) {
        (Some(text), _) => Ok(format::parse_reduced(text)?),
        (None, Some(text)) => {
            let full = format::parse_full(text)?;
            if !full.is_tree_realizable() {
                return Err(Failure {
                    code: 3,
                    message: format!(
                        "{full} is not the degree sequence of a tree: {} entries must sum to {}",
                        full.len(),
                        2 * full.len().saturating_sub(1)
                    ),
                });
            }
            Ok(full.reduce()?)
        }
        (None, None) => Err(Failure::usage("one of --reduced or --full is required")),
    }
}

fn energy_json(e: &EnergyValue) -> Value {
    json!({ "value": e.value, "method": e.method.as_str(), "error_bound": e.error_bound })
}

fn universe_guard(r: &ReducedDegreeSequence) -> Result<(), Failure> {
    let limit = sweep::limits_from_env().max_universe;
    let size = caterpillar_count(r);
    if size > limit {
        return Err(Failure::usage(format!("{size} caterpillars exceed the limit of {limit}")));
    }
    Ok(())
}

fn jobs(cli_jobs: Option<u32>) -> usize {
    cli_jobs
        .map(|j| j as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let out = Output {
        path: cli.out.clone(),
        format: cli.format.unwrap_or(OutputFormat::Json),
    };
    let jobs = jobs(cli.jobs);
    match &cli.command {
        Command::Mpoly(input) => {
            let p = matching_poly(&read_tree(input)?);
            match out.format {
                OutputFormat::Json => out.json(&format::poly_json(&p))?,
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = p
                        .to_decimal_strings()
                        .into_iter()
                        .enumerate()
                        .map(|(k, c)| vec![k.to_string(), c])
                        .collect();
                    out.table(&["k", "coefficient"], &rows)?;
                }
            }
        }
        Command::Hosoya(input) => {
            let z = matching_poly(&read_tree(input)?).sum();
            match out.format {
                OutputFormat::Json => out.json(&json!(z.to_string()))?,
                OutputFormat::Csv => out.table(&["hosoya"], &[vec![z.to_string()]])?,
            }
        }
        Command::Energy { input, method } => {
            let t = read_tree(input)?;
            let values = match method {
                Method::Roots => vec![energy_from_roots(&t)],
                Method::Coulson => vec![energy_coulson(&t, DEFAULT_QUADRATURE_STEPS)?],
                Method::Eigen => vec![energy_eigen(&t)?],
                Method::All => vec![
                    energy_from_roots(&t),
                    energy_coulson(&t, DEFAULT_QUADRATURE_STEPS)?,
                    energy_eigen(&t)?,
                ],
            };
            match out.format {
                OutputFormat::Json if values.len() == 1 => out.json(&energy_json(&values[0]))?,
                OutputFormat::Json => out.json(&Value::from(values.iter().map(energy_json).collect::<Vec<_>>()))?,
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = values
                        .iter()
                        .map(|e| vec![e.method.as_str().to_string(), e.value.to_string(), e.error_bound.to_string()])
                        .collect();
                    out.table(&["method", "value", "error_bound"], &rows)?;
                }
            }
        }
        Command::Extremal(input) => {
            let r = read_sequence(input)?;
            let s = build_s(&r)?;
            let (left, right) = build_halves(&r)?;
            let p = caterpillar_matching_poly(&s);
            let energy = energy_from_roots(&s.to_tree());
            match out.format {
                OutputFormat::Json => out.json(&json!({
                    "spine": s.spine(),
                    "n": r.len(),
                    "vertices": s.vertex_count(),
                    "halves": { "left": left.spine_degrees, "right": right.spine_degrees },
                    "matching_poly": format::poly_json(&p),
                    "hosoya": p.sum().to_string(),
                    "energy": energy_json(&energy),
                }))?,
                OutputFormat::Csv => {
                    let spine = s.spine().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                    out.table(
                        &["spine", "n", "vertices", "hosoya", "energy"],
                        &[vec![
                            spine,
                            r.len().to_string(),
                            s.vertex_count().to_string(),
                            p.sum().to_string(),
                            energy.value.to_string(),
                        ]],
                    )?;
                }
            }
        }
        Command::Enumerate(input) => {
            let r = read_sequence(input)?;
            universe_guard(&r)?;
            let spines: Vec<Vec<usize>> = enumerate_caterpillars(&r).map(|c| c.spine().to_vec()).collect();
            match out.format {
                OutputFormat::Json => out.json(&json!(spines))?,
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = spines
                        .iter()
                        .map(|s| vec![s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")])
                        .collect();
                    out.table(&["spine"], &rows)?;
                }
            }
        }
        Command::Verify { claim } => return verify(claim, &out, jobs),
        Command::Plotdata {
            input,
            x_min,
            x_max,
            points,
        } => {
            let r = read_sequence(input)?;
            let lo = format::parse_rational(x_min)?;
            let hi = format::parse_rational(x_max)?;
            if lo < Rational::zero() || hi < lo {
                return Err(Failure::usage(format!("need 0 <= x-min <= x-max, got {lo} and {hi}")));
            }
            universe_guard(&r)?;
            let xs: Vec<Rational> = if *points == 1 {
                vec![hi]
            } else {
                let step = (&hi - &lo) / Rational::from_integer(BigInt::from(points - 1));
                (0..*points)
                    .map(|i| &lo + &step * Rational::from_integer(BigInt::from(i)))
                    .collect()
            };
            let mut rows = Vec::new();
            for c in enumerate_caterpillars(&r) {
                let p = caterpillar_matching_poly(&c);
                let spine = c.spine().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                for x in &xs {
                    let m = p.eval(x);
                    rows.push(vec![spine.clone(), x.to_string(), m.to_string(), format::rational_decimal(&m, 12)]);
                }
            }
            let plot = Output {
                path: out.path.clone(),
                format: cli.format.unwrap_or(OutputFormat::Csv),
            };
            plot.table(&["spine", "x", "m_exact", "m_decimal"], &rows)?;
        }
        Command::Chain { from, to } => {
            let y = format::parse_full(from)?;
            let d = format::parse_full(to)?;
            let chain = majorization_chain(&y, &d)?;
            match out.format {
                OutputFormat::Json => {
                    let steps: Vec<&[usize]> = chain.iter().map(|s| s.degrees()).collect();
                    out.json(&json!(steps))?
                }
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = chain
                        .iter()
                        .enumerate()
                        .map(|(i, s)| vec![i.to_string(), s.to_string()])
                        .collect();
                    out.table(&["step", "sequence"], &rows)?;
                }
            }
        }
    }
    Ok(0)
}

fn verify(claim: &Claim, out: &Output, jobs: usize) -> Result<u8, Failure> {
    let limits = sweep::limits_from_env();
    let report = match claim {
        Claim::Min {
            reduced,
            max_len,
            max_entry,
            x,
        } => {
            let xs = format::parse_x_list(x)?;
            match reduced {
                Some(text) => sweep::verify_min_single(&format::parse_reduced(text)?, &xs, &limits)?,
                None => sweep::sweep_min(*max_len, *max_entry, &xs, &limits, jobs)?,
            }
        }
        Claim::Majorization {
            n,
            n_min,
            max_degree,
            x,
        } => {
            let xs = format::parse_x_list(x)?;
            sweep::sweep_majorization(*n_min, *n, *max_degree, &xs, &limits, jobs)?
        }
        Claim::Diameter { n, m, x } => {
            let xs = format::parse_x_list(x)?;
            let pairs: Vec<(usize, usize)> = match m {
                Some(m) => vec![(*n, *m)],
                None => (3..*n).map(|m| (*n, m)).collect(),
            };
            if pairs.is_empty() {
                return Err(Failure {
                    code: 3,
                    message: format!("no admissible diameter for {n} vertices"),
                });
            }
            sweep::sweep_diameter(&pairs, &xs, jobs)?
        }
        Claim::Maxdeg { n, max_degree, x } => {
            let xs = format::parse_x_list(x)?;
            sweep::sweep_maxdeg(&[(*n, *max_degree)], &xs, jobs)?
        }
        Claim::Oracle {
            samples,
            max_vertices,
            seed,
        } => {
            if *max_vertices > limits.max_vertices {
                return Err(Failure::usage(format!(
                    "brute force is limited to {} vertices",
                    limits.max_vertices
                )));
            }
            sweep::oracle_check(*samples, *max_vertices, *seed, jobs)?
        }
    };
    out.report(&report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
