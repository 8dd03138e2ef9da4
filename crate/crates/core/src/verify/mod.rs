//! Brute-force oracles, the registry of identity checks and the verification report.
//!
//! Checks are data: each [`CheckDef`] names an identity, the formula it anchors to,
//! the scalar modes it supports and a run function. The CLI and the test suites both
//! go through [`run_suite`].

mod acc;
mod algebra;
mod charts;
pub mod oracle;

use std::collections::BTreeSet;

use rayon::prelude::*;
use regex::Regex;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::random::derive_seed;

pub use acc::Measure;
pub use oracle::{oracle_dd_star_p, oracle_pq_curvature};

/// Default suite seed.
pub const DEFAULT_SEED: u64 = 20240601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Float,
    Rational,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Float => "float",
            Mode::Rational => "rational",
        }
    }
}

/// Which scalar modes a suite run requests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModeSelection {
    Float,
    #[default]
    Rational,
    Both,
}

impl ModeSelection {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "float" => Ok(ModeSelection::Float),
            "rational" => Ok(ModeSelection::Rational),
            "both" => Ok(ModeSelection::Both),
            other => Err(Error::Config(format!(
                "unknown mode `{other}` (float|rational|both)"
            ))),
        }
    }

    fn modes_for(self, supported: &[Mode]) -> Vec<Mode> {
        let wanted: &[Mode] = match self {
            ModeSelection::Float => &[Mode::Float],
            ModeSelection::Rational => &[Mode::Rational],
            ModeSelection::Both => &[Mode::Float, Mode::Rational],
        };
        let hit: Vec<Mode> = wanted
            .iter()
            .copied()
            .filter(|m| supported.contains(m))
            .collect();
        if hit.is_empty() {
            vec![supported[0]]
        } else {
            hit
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Asserted,
    /// Documents a discrepancy; never fails the suite.
    Reported,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

/// Context handed to a check's run function.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub seed: u64,
    pub mode: Mode,
}

pub type RunFn = fn(&Ctx) -> Result<Measure>;

/// A registered identity.
#[derive(Clone, Copy)]
pub struct CheckDef {
    pub id: &'static str,
    pub description: &'static str,
    /// The formula or statement the check reproduces.
    pub anchor: &'static str,
    pub modes: &'static [Mode],
    pub kind: Kind,
    /// Tolerance in float mode; rational mode demands an exact zero.
    pub tolerance: f64,
    pub run: RunFn,
}

impl std::fmt::Debug for CheckDef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckDef").field("id", &self.id).finish()
    }
}

pub(crate) const EXACT: &[Mode] = &[Mode::Rational, Mode::Float];
pub(crate) const FLOAT: &[Mode] = &[Mode::Float];

/// The full registry, in report order.
pub fn registry() -> Vec<CheckDef> {
    let mut all = algebra::checks();
    all.extend(charts::checks());
    all
}

/// One executed check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    pub description: String,
    pub anchor: String,
    pub mode: Mode,
    pub inputs: Value,
    /// `null` in JSON when the check errored.
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub reported: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub seed: u64,
    pub modes: Vec<Mode>,
    pub dimensions: Vec<usize>,
    pub filter: Option<String>,
    pub crate_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: u32,
    pub checks: Vec<IdentityCheck>,
    pub summary: Summary,
    pub environment: Environment,
}

impl VerificationReport {
    /// `true` iff no asserted check failed.
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub seed: Option<u64>,
    pub modes: ModeSelection,
    /// Regular expression matched against the whole check id.
    pub filter: Option<String>,
    /// Appends a deliberately broken check, to exercise the failure path.
    pub corrupt: bool,
}

/// Checks selected by `filter` (all when `None`).
pub fn select(filter: Option<&str>) -> Result<Vec<CheckDef>> {
    let all = registry();
    let Some(pat) = filter else {
        return Ok(all);
    };
    let re = Regex::new(&format!("^(?:{pat})$"))
        .map_err(|e| Error::Config(format!("bad filter regex: {e}")))?;
    let chosen: Vec<CheckDef> = all.into_iter().filter(|c| re.is_match(c.id)).collect();
    if chosen.is_empty() {
        return Err(Error::UnknownCheck(format!("no check id matches `{pat}`")));
    }
    Ok(chosen)
}

fn execute(def: &CheckDef, mode: Mode, base_seed: u64) -> (IdentityCheck, Vec<usize>) {
    let ctx = Ctx {
        seed: derive_seed(base_seed, def.id),
        mode,
    };
    let tolerance = if mode == Mode::Rational {
        0.0
    } else {
        def.tolerance
    };
    let (residual, inputs, dims, ok) = match (def.run)(&ctx) {
        Ok(m) => {
            let ok = if mode == Mode::Rational {
                m.exact_zero
            } else {
                m.residual <= tolerance
            };
            let mut inputs = m.inputs;
            if let Value::Object(map) = &mut inputs {
                map.insert("seed".into(), json!(ctx.seed));
            }
            (Some(m.residual), inputs, m.dims, ok)
        }
        Err(e) => (
            None,
            json!({ "seed": ctx.seed, "error": e.to_string() }),
            Vec::new(),
            false,
        ),
    };
    let status = match (def.kind, ok) {
        (Kind::Reported, _) => Status::Reported,
        (Kind::Asserted, true) => Status::Pass,
        (Kind::Asserted, false) => Status::Fail,
    };
    let check = IdentityCheck {
        id: def.id.to_string(),
        description: def.description.to_string(),
        anchor: def.anchor.to_string(),
        mode,
        inputs,
        residual,
        tolerance,
        status,
    };
    (check, dims)
}

/// Runs the selected checks in parallel and assembles them in registry order.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let seed = config.seed.unwrap_or(DEFAULT_SEED);
    let mut defs = select(config.filter.as_deref())?;
    if config.corrupt {
        defs.push(algebra::corrupt_check());
    }
    let jobs: Vec<(CheckDef, Mode)> = defs
        .iter()
        .flat_map(|d| {
            config
                .modes
                .modes_for(d.modes)
                .into_iter()
                .map(move |m| (*d, m))
        })
        .collect();
    let results: Vec<(IdentityCheck, Vec<usize>)> =
        jobs.par_iter().map(|(d, m)| execute(d, *m, seed)).collect();
    let mut dims = BTreeSet::new();
    let mut modes = BTreeSet::new();
    let mut checks = Vec::with_capacity(results.len());
    for (c, d) in results {
        dims.extend(d);
        modes.insert(c.mode);
        checks.push(c);
    }
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    let summary = Summary {
        total: checks.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        reported: count(Status::Reported),
    };
    Ok(VerificationReport {
        version: 1,
        summary,
        environment: Environment {
            seed,
            modes: modes.into_iter().collect(),
            dimensions: dims.into_iter().collect(),
            filter: config.filter.clone(),
            crate_version: env!("CARGO_PKG_VERSION").to_string(),
        },
        checks,
    })
}

/// Runs `f` on a pool capped by `CURV_THREADS` when set.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    match std::env::var("CURV_THREADS") {
        Ok(v) => {
            let n: usize = v.trim().parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
                Error::Config(format!(
                    "CURV_THREADS must be a positive integer, got `{v}`"
                ))
            })?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
        Err(_) => Ok(f()),
    }
}

#[cfg(test)]
mod tests;
