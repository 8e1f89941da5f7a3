//! Verification suites and their reports.

mod suites;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kronrep::DimVec;

pub use suites::SUITES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The identity as printed fails, and the corrected form holds.
    KnownDeviation,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    #[serde(rename = "paper_ref")]
    pub reference: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl Check {
    pub fn exact(id: impl Into<String>, reference: &str, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            reference: reference.into(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            detail: detail.into(),
        }
    }

    /// A check with a printed and a corrected form.
    pub fn corrected(id: impl Into<String>, reference: &str, printed: bool, corrected: bool, detail: impl Into<String>) -> Self {
        let verdict = match (printed, corrected) {
            (true, _) => Verdict::Pass,
            (false, true) => Verdict::KnownDeviation,
            (false, false) => Verdict::Fail,
        };
        let detail = format!("printed {}, corrected {}; {}", ok_word(printed), ok_word(corrected), detail.into());
        Self { id: id.into(), reference: reference.into(), verdict, detail }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

fn ok_word(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub q: u32,
    pub max_dim: DimVec,
    /// Degree bound for torsion generators, series and `m + n + 1` in
    /// the preinjective–preprojective commutator.
    pub max_deg: u32,
    /// Bound on `|alpha|` for the stability checks.
    pub max_total: u32,
    pub max_word_len: usize,
    pub seed: u64,
}

impl Config {
    pub fn new(q: u32) -> Self {
        Self {
            q,
            max_dim: DimVec::new(3, 3),
            max_deg: 3,
            max_total: 5,
            max_word_len: 40,
            seed: 7,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if ![2, 3, 5, 7].contains(&self.q) {
            return Err(Error::BadPrime(self.q));
        }
        if self.max_deg == 0 || self.max_total == 0 || self.max_word_len == 0 || self.max_dim.is_zero() {
            return Err(Error::Invalid("bounds must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub known_deviations: usize,
    pub failed: usize,
    /// Wall time; left out of JSON so reports compare equal across runs.
    #[serde(skip)]
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: Config,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (q = {})", self.suite, self.config.q)?;
        for c in &self.checks {
            let v = match c.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::KnownDeviation => "DEVIATION",
            };
            writeln!(f, "  {v:<9} {}  [{}] {}", c.id, c.reference, c.detail)?;
        }
        let s = &self.summary;
        write!(
            f,
            "{} checks: {} pass, {} known deviations, {} fail ({} ms)",
            s.total, s.passed, s.known_deviations, s.failed, s.millis
        )
    }
}

pub(crate) type Job = Box<dyn Fn(&Config) -> Result<Vec<Check>> + Send + Sync>;

pub fn suite_names() -> Vec<&'static str> {
    let mut v: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
    v.push("all");
    v
}

/// Runs a suite. Unknown names are an `Invalid` error; exhausted bounds
/// surface as `TooLarge`.
pub fn run_suite(name: &str, cfg: &Config) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let jobs: Vec<Job> = if name == "all" {
        SUITES.iter().flat_map(|(_, build)| build()).collect()
    } else {
        let (_, build) = SUITES
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {name}")))?;
        build()
    };
    let results: Vec<Result<Vec<Check>>> = jobs.par_iter().map(|j| j(cfg)).collect();
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    let mut summary = Summary { total: checks.len(), ..Default::default() };
    for c in &checks {
        match c.verdict {
            Verdict::Pass => summary.passed += 1,
            Verdict::KnownDeviation => summary.known_deviations += 1,
            Verdict::Fail => summary.failed += 1,
        }
    }
    summary.millis = start.elapsed().as_millis();
    Ok(Report { suite: name.into(), config: cfg.clone(), checks, summary })
}
