use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kronecker_hall::fq::point_census;
use kronecker_hall::hall::parse_double;
use kronecker_hall::kronrep::{enumerate_iso_classes, hall_number, DimVec, IsoClass};
use kronecker_hall::report::{run_suite, suite_names, Config};
use kronecker_hall::stability::{default_stability, hn_semistable, StabilityFunction};
use kronecker_hall::uv::{ev_q, map_g, parse_term, GTable, LoopVariant, RewriteBounds, Rewriter, Strategy};
use kronecker_hall::Error;
use serde_json::json;

#[derive(Parser)]
#[command(name = "khall", version, about = "Exact Hall algebra computations for the Kronecker quiver")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite.
    Verify {
        suite: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_dim)]
        max_dim: Option<DimVec>,
        #[arg(long)]
        max_deg: Option<u32>,
        #[arg(long)]
        max_total: Option<u32>,
        #[arg(long)]
        max_word_len: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Evaluate a Hall expression such as `[P1]*[I0]`, `one(1,1)`,
    /// `L(0)+ * L(0)-`, a Drinfeld-Jimbo or loop term, or `G(term)`.
    Compute {
        expr: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 40)]
        max_word_len: usize,
    },
    /// Tabulate closed points, isomorphism classes or a Hall number.
    Census {
        #[command(subcommand)]
        kind: CensusKind,
    },
    /// The sum of semistable classes of a dimension vector.
    Hn {
        #[arg(long, value_parser = parse_dim)]
        alpha: DimVec,
        #[arg(long, value_parser = parse_ints::<4>)]
        stability: Option<[i64; 4]>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum CensusKind {
    Points {
        #[arg(long, default_value_t = 3)]
        max_deg: usize,
        #[command(flatten)]
        common: Common,
    },
    Isoclasses {
        #[arg(long, value_parser = parse_dim)]
        dim: DimVec,
        #[command(flatten)]
        common: Common,
    },
    Hallnum {
        #[arg(long = "Z")]
        z: String,
        #[arg(long = "X")]
        x: String,
        #[arg(long = "Y")]
        y: String,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_ints<const N: usize>(s: &str) -> Result<[i64; N], String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| format!("expected {N} comma-separated integers"))
}

fn parse_dim(s: &str) -> Result<DimVec, String> {
    let [a, b] = parse_ints::<2>(s)?;
    match (u32::try_from(a), u32::try_from(b)) {
        (Ok(a), Ok(b)) => Ok(DimVec::new(a, b)),
        _ => Err("dimensions must be nonnegative".into()),
    }
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BOUND: u8 = 3;

fn error_exit(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(match e {
        Error::TooLarge { .. } => EXIT_BOUND,
        Error::Parse { .. } | Error::BadPrime(_) | Error::Invalid(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    })
}

fn emit(format: Format, value: serde_json::Value, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
        Format::Text => println!("{text}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => error_exit(&e),
    }
}

fn check_q(q: u32) -> kronecker_hall::Result<()> {
    kronecker_hall::fq::check_prime(q)
}

fn run(cmd: Cmd) -> kronecker_hall::Result<ExitCode> {
    match cmd {
        Cmd::Verify { suite, common, max_dim, max_deg, max_total, max_word_len, seed } => {
            if !suite_names().contains(&suite.as_str()) {
                eprintln!("error: unknown suite {suite}; expected one of {}", suite_names().join(", "));
                return Ok(ExitCode::from(EXIT_USAGE));
            }
            let mut cfg = Config::new(common.q);
            cfg.max_dim = max_dim.unwrap_or(cfg.max_dim);
            cfg.max_deg = max_deg.unwrap_or(cfg.max_deg);
            cfg.max_total = max_total.unwrap_or(cfg.max_total);
            cfg.max_word_len = max_word_len.unwrap_or(cfg.max_word_len);
            cfg.seed = seed.unwrap_or(cfg.seed);
            let report = run_suite(&suite, &cfg)?;
            emit(common.format, serde_json::to_value(&report).expect("json"), report.to_string());
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
        }
        Cmd::Compute { expr, common, max_word_len } => {
            check_q(common.q)?;
            compute(&expr, common, max_word_len)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Census { kind } => {
            match kind {
                CensusKind::Points { max_deg, common } => {
                    check_q(common.q)?;
                    let v: Vec<usize> = (1..=max_deg).map(|d| point_census(d, common.q)).collect();
                    emit(common.format, json!(v), format!("{v:?}"));
                }
                CensusKind::Isoclasses { dim, common } => {
                    check_q(common.q)?;
                    let n = enumerate_iso_classes(dim, common.q).len();
                    emit(common.format, json!(n), n.to_string());
                }
                CensusKind::Hallnum { z, x, y, common } => {
                    let q = common.q;
                    check_q(q)?;
                    let (z, x, y) = (IsoClass::parse(&z, q)?, IsoClass::parse(&x, q)?, IsoClass::parse(&y, q)?);
                    let n = hall_number(&z, &x, &y, q)?;
                    emit(common.format, json!(n), n.to_string());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hn { alpha, stability, common } => {
            check_q(common.q)?;
            let z = match stability {
                Some([a1, a2, b1, b2]) => StabilityFunction::new((a1, a2), (b1, b2))?,
                None => default_stability(),
            };
            let e = hn_semistable(alpha, &z, common.q)?;
            emit(common.format, serde_json::to_value(&e).expect("json"), e.to_string());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn compute(expr: &str, common: Common, max_word_len: usize) -> kronecker_hall::Result<()> {
    let q = common.q;
    let trimmed = expr.trim();
    if let Some(inner) = trimmed.strip_prefix("G(").and_then(|s| s.strip_suffix(')')) {
        let t = parse_term(inner).map_err(|e| shift_pos(e, 2))?;
        let mut rw = Rewriter::new(
            LoopVariant::Corrected,
            Strategy::Leftmost,
            RewriteBounds { max_len: max_word_len, max_index: 30 },
        );
        let nf = rw.normal_form(&map_g(&t, GTable::Corrected)?)?;
        emit(common.format, json!({ "loop_normal_form": nf.to_string() }), nf.to_string());
        return Ok(());
    }
    let e = match parse_double(trimmed, q) {
        Ok(e) => e,
        Err(e @ Error::Parse { .. }) => match parse_term(trimmed) {
            Ok(t) => ev_q(&t, q)?,
            Err(term_err) => return Err(further(e, term_err)),
        },
        Err(e) => return Err(e),
    };
    emit(common.format, serde_json::to_value(&e).expect("json"), e.to_string());
    Ok(())
}

fn shift_pos(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

/// Of two parse errors, the one that got further into the input.
fn further(a: Error, b: Error) -> Error {
    match (&a, &b) {
        (Error::Parse { pos: pa, .. }, Error::Parse { pos: pb, .. }) if pb > pa => b,
        (Error::Parse { .. }, _) => a,
        _ => b,
    }
}
