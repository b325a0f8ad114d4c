//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 usage or
//! precondition error. `--format json` always prints one JSON document
//! carrying `schema_version`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bitstring::{decode, encode, BitString};
use crate::discretisation::{
    coarsen, complementarity_conflict, niven_admissible, uncertainty_check, Direction, DiscretisedQubit,
};
use crate::error::Error;
use crate::gravity::{scenario_report, PhysicalConstants, Scenario};
use crate::rational::{parse_decimal, parse_rational};
use crate::saturation::{saturation_experiment, to_csv};
use crate::signed_perm::{self_similar_split, verify_quaternion, verify_spin_identities};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the default constants file.
pub const CONSTANTS_ENV: &str = "DISCRETE_HILBERT_CONSTANTS";

/// Significant digits in printed physical quantities.
const REPORT_DIGITS: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "discrete-hilbert", version, about = "Discretised qubit Hilbert space toolkit")]
pub struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Significant digits for the gravity arithmetic (at least 50).
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// File of `key = value` physical constants.
    #[arg(long, global = true, env = CONSTANTS_ENV)]
    constants: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Discretisation scale and qubit capacity of a mass in superposition.
    Capacity {
        /// Mass in kg.
        #[arg(long)]
        mass: String,
        /// Superposition separation in m.
        #[arg(long)]
        sep: String,
        /// Number of qubit masses acting together.
        #[arg(long, default_value_t = 1)]
        qubits: u64,
        /// Mass radius in m, replacing the Schrödinger–Newton radius.
        #[arg(long)]
        radius: Option<String>,
    },
    /// Bit string of the state (m, n, L).
    Encode {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long = "L")]
        l: u64,
    },
    /// State (m, n, L) of a bit string over {+,-}.
    Decode {
        #[arg(long, allow_hyphen_values = true)]
        bits: String,
    },
    /// Checks the quaternion, spin and self-similar-split identities.
    PauliVerify {
        #[arg(long = "L")]
        l: usize,
    },
    /// Fidelity of nested encodings as the qubit count grows.
    Saturate {
        #[arg(long = "L")]
        l: u64,
        /// Qubit range `a..b` (inclusive) or a single count.
        #[arg(long = "n", default_value = "1..8")]
        n: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Whether a rational cosine belongs to a rational angle.
    Niven {
        /// Cosine as `p/q` or a decimal.
        #[arg(long = "cos", allow_hyphen_values = true)]
        cos: String,
    },
    /// Samples directions and checks σ′σ″ ≥ |μ|.
    Uncertainty {
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
    /// Coarsens (m, n, L) onto the grid of granularity `--to`.
    Reduce {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long = "L")]
        l: u64,
        #[arg(long)]
        to: u64,
    },
}

/// Outcome of a command: what to print and the exit code.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

/// A usage or precondition failure, exit code 2.
#[derive(Debug)]
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn json_doc(command: &str, mut body: Value) -> String {
    let obj = body.as_object_mut().expect("object body");
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("command".into(), json!(command));
    serde_json::to_string_pretty(&body).expect("serialisable") + "\n"
}

fn load_constants(cli: &Cli) -> Result<PhysicalConstants, Usage> {
    let mut c = match &cli.constants {
        Some(path) => PhysicalConstants::from_file(path)?,
        None => PhysicalConstants::codata(),
    };
    if let Some(p) = cli.precision {
        c = c.with_precision(p)?;
    }
    Ok(c)
}

fn parse_range(text: &str) -> Result<(u32, u32), Usage> {
    let bad = || Usage(format!("invalid qubit range {text:?}; expected a..b"));
    let parse = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    match text.split_once("..") {
        Some((a, b)) => Ok((parse(a)?, parse(b.trim_start_matches('='))?)),
        None => {
            let n = parse(text)?;
            Ok((n, n))
        }
    }
}

fn qubit_json(q: &DiscretisedQubit) -> Value {
    json!({ "m": q.m(), "n": q.n(), "L": q.granularity() })
}

fn execute(cli: &Cli) -> Result<Output, Usage> {
    let fmt = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Capacity { mass, sep, qubits, radius } => {
            let c = load_constants(cli)?;
            let mut scenario = Scenario::new(parse_decimal(mass)?, parse_decimal(sep)?, *qubits)?;
            if let Some(r) = radius {
                scenario = scenario.with_radius(parse_decimal(r)?)?;
            }
            let report = scenario_report(&scenario, &c)?;
            Ok(Output::ok(match fmt(Format::Json) {
                Format::Json => serde_json::to_string_pretty(&report.to_json(REPORT_DIGITS)).expect("json") + "\n",
                Format::Text | Format::Csv => report.to_text(REPORT_DIGITS) + "\n",
            }))
        }
        Command::Encode { m, n, l } => {
            let q = DiscretisedQubit::new(*m, *n, *l)?;
            let s = encode(&q)?;
            Ok(Output::ok(match fmt(Format::Text) {
                Format::Json => json_doc("encode", json!({ "state": qubit_json(&q), "bits": s.to_string() })),
                _ => format!("{s}\n"),
            }))
        }
        Command::Decode { bits } => {
            let s: BitString = bits.parse()?;
            let json = fmt(Format::Text) == Format::Json;
            match decode(&s) {
                Ok(d) => Ok(Output::ok(if json {
                    json_doc("decode", json!({ "status": if d.degenerate { "degenerate" } else { "ok" }, "state": qubit_json(&d.qubit) }))
                } else if d.degenerate {
                    format!("{} (degenerate: phase undefined)\n", d.qubit)
                } else {
                    format!("{}\n", d.qubit)
                })),
                // Reported on stdout like any other outcome, but still a precondition failure.
                Err(Error::NotCodeword) => Ok(Output {
                    text: if json {
                        json_doc("decode", json!({ "status": "not_codeword", "L": s.len(), "ones": s.ones() }))
                    } else {
                        format!("not a codeword (L={} ones={})\n", s.len(), s.ones())
                    },
                    code: 2,
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::PauliVerify { l } => {
            let quaternion = verify_quaternion(*l)?;
            let spin = verify_spin_identities(*l)?;
            let split = if l % 8 == 0 { Some(self_similar_split(*l)?) } else { None };
            let pass = quaternion && spin.holds() && split.as_ref().is_none_or(|s| s.exact);
            let text = match fmt(Format::Text) {
                Format::Json => json_doc(
                    "pauli-verify",
                    json!({ "L": l, "quaternion": quaternion, "spin": spin.checks, "split": split, "pass": pass }),
                ),
                _ => {
                    let verdict = |b: bool| if b { "pass" } else { "FAIL" };
                    let mut lines = vec![format!("L = {l}"), format!("quaternion I²=J²=K²=IJK=−1: {}", verdict(quaternion))];
                    for c in &spin.checks {
                        let ok = if c.name == "y" { c.mod_xi } else { c.exact && c.mod_xi };
                        let frame = if c.exact { "exact" } else { "mod ξ" };
                        lines.push(format!("spin {}: {} ({frame})", c.name, verdict(ok)));
                    }
                    lines.push(match &split {
                        Some(s) => format!("self-similar split: {}", verdict(s.exact)),
                        None => "self-similar split: skipped (needs 8 | L)".into(),
                    });
                    lines.push(if pass { "all pass".into() } else { "FAILED".into() });
                    lines.join("\n") + "\n"
                }
            };
            Ok(Output { text, code: if pass { 0 } else { 1 } })
        }
        Command::Saturate { l, n, samples } => {
            let (lo, hi) = parse_range(n)?;
            let rows = saturation_experiment(*l, lo, hi, *samples, cli.seed)?;
            Ok(Output::ok(match fmt(Format::Csv) {
                Format::Csv => to_csv(&rows),
                Format::Json => json_doc(
                    "saturate",
                    json!({ "L": l, "n_min": lo, "n_max": hi, "samples": samples, "seed": cli.seed, "rows": rows }),
                ),
                Format::Text => {
                    let mut out = format!("{:>3} {:>16} {:>16} {:>8}\n", "N", "median", "p10", "min_seg");
                    for r in &rows {
                        out += &format!(
                            "{:>3} {:>16.12} {:>16.12} {:>8}\n",
                            r.n, r.median_fidelity, r.p10_fidelity, r.min_segment_len
                        );
                    }
                    out
                }
            }))
        }
        Command::Niven { cos } => {
            let c = parse_rational(cos)?;
            let admissible = niven_admissible(&c)?;
            Ok(Output::ok(match fmt(Format::Text) {
                Format::Json => json_doc("niven", json!({ "cos": c.to_string(), "admissible": admissible })),
                _ => format!("{c}: {}\n", if admissible { "admissible" } else { "not admissible" }),
            }))
        }
        Command::Uncertainty { samples } => {
            if *samples == 0 {
                return Err(Usage("samples must be positive".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let mut satisfied = 0usize;
            let mut worst = f64::INFINITY;
            for _ in 0..*samples {
                let check = uncertainty_check(&Direction::sample(&mut rng));
                satisfied += usize::from(check.ok);
                worst = worst.min(check.lhs - check.rhs);
            }
            let poles: Vec<_> = [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)]
                .iter()
                .map(|&(x, y, z)| uncertainty_check(&Direction::new(x, y, z).expect("unit")))
                .collect();
            let poles_tight = poles.iter().all(|p| (p.lhs - p.rhs).abs() <= 1e-12);
            let pass = satisfied == *samples && poles_tight;
            let text = match fmt(Format::Text) {
                Format::Json => json_doc(
                    "uncertainty",
                    json!({ "samples": samples, "seed": cli.seed, "satisfied": satisfied, "min_margin": worst, "poles_tight": poles_tight, "pass": pass }),
                ),
                _ => format!(
                    "{satisfied}/{samples} satisfied (min margin {worst:.3e}); pole equality {}\n",
                    if poles_tight { "holds" } else { "FAILS" }
                ),
            };
            Ok(Output { text, code: if pass { 0 } else { 1 } })
        }
        Command::Reduce { m, n, l, to } => {
            let q = DiscretisedQubit::new(*m, *n, *l)?;
            let r = coarsen(&q, *to)?;
            Ok(Output::ok(match fmt(Format::Text) {
                Format::Json => json_doc(
                    "reduce",
                    json!({ "from": qubit_json(&q), "to": qubit_json(&r), "complementarity_conflict": complementarity_conflict(&r) }),
                ),
                _ => format!("{r}\n"),
            }))
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { 0 } else { 2 };
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
