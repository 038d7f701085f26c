//! Named verification suites and the configuration that drives them.
//!
//! Every suite returns a [`Report`]. Assertion suites fail on any
//! counterexample; explorer suites (`cogenerated-explore`) only collect
//! evidence and always pass.

mod algebra;
mod combinatorics;
mod examples;

use std::path::PathBuf;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideals::facets::DEFAULT_BUDGET;
use crate::report::{self, Report, SliceResult};
use crate::tableaux::GridSize;

pub use examples::{shape_counterexample_monomial, EXAMPLE_4B_SIGMA};

/// All suite names, sorted.
pub const SUITES: &[&str] = &[
    "algam",
    "balancing",
    "bijection",
    "cogenerated",
    "cogenerated-explore",
    "duality",
    "examples-4a",
    "examples-4b",
    "gamma-invariance",
    "gandin-closure",
    "greene",
    "groebner-it",
    "negative-control",
    "schensted",
    "shape-6-counterexample",
    "straightening",
    "symb-in",
];

pub const EXPLORER_SUITES: &[&str] = &["cogenerated-explore"];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub grid: GridSize,
    pub degree_bound: usize,
    pub suites: Vec<String>,
    /// Node cap for facet searches.
    pub budget: u64,
    pub seed: u64,
    /// Largest slice (in monomials) on which rule-based membership is also
    /// checked by straightening.
    pub cross_check_limit: usize,
    /// Adds wall-clock and timestamp fields; off for byte-identical reports.
    pub timestamp: bool,
    /// Keeps one report entry per multidegree instead of one per degree.
    pub per_slice: bool,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            grid: GridSize::square(3).expect("3×3 is a grid"),
            degree_bound: 5,
            suites: SUITES.iter().map(|s| s.to_string()).collect(),
            budget: DEFAULT_BUDGET,
            seed: 0x5eed,
            cross_check_limit: 40,
            timestamp: true,
            per_slice: false,
            out: None,
            format: Format::Json,
        }
    }
}

impl RunConfig {
    pub fn with_grid(grid: GridSize, degree_bound: usize) -> Self {
        RunConfig { grid, degree_bound, ..RunConfig::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree_bound == 0 {
            return Err(Error::invalid("degree bound must be at least 1"));
        }
        if self.budget == 0 {
            return Err(Error::invalid("budget must be at least 1"));
        }
        if let Some(bad) = self.suites.iter().find(|s| !SUITES.contains(&s.as_str())) {
            return Err(Error::invalid(format!("unknown suite {bad:?}; known suites: {}", SUITES.join(", "))));
        }
        Ok(())
    }
}

/// One examined object's verdict for one check; the witness is built only
/// on failure.
pub(crate) struct Outcome {
    check: &'static str,
    ok: bool,
    witness: Option<Value>,
}

impl Outcome {
    pub(crate) fn new(check: &'static str, ok: bool, witness: impl FnOnce() -> Value) -> Self {
        Outcome { check, ok, witness: (!ok).then(witness) }
    }
}

/// Folds per-object outcomes into one entry per check for degree `d`.
pub(crate) fn tally(checks: &[&'static str], d: usize, outcomes: Vec<Result<Vec<Outcome>>>) -> Result<Vec<SliceResult>> {
    let mut slices: Vec<SliceResult> = checks.iter().map(|c| SliceResult::for_degree(*c, d)).collect();
    for batch in outcomes {
        for o in batch? {
            let pos = checks.iter().position(|c| *c == o.check).expect("outcome for a declared check");
            let mut w = o.witness;
            slices[pos].record(o.ok, || w.take().unwrap_or(Value::Null));
        }
    }
    Ok(slices)
}

/// Absorbs a sub-report, or flags the report when the sub-run ran out of
/// budget.
pub(crate) fn absorb_part(report: &mut Report, prefix: &str, part: Result<Report>) -> Result<()> {
    match part {
        Ok(r) => report.absorb(prefix, r),
        Err(Error::BudgetExceeded(n)) => {
            report.finding(json!({"part": prefix, "budget_exceeded": n}));
            report.mark_budget_exceeded();
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn unix_now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

fn dispatch(name: &str, cfg: &RunConfig) -> Result<Report> {
    match name {
        "bijection" => combinatorics::bijection(cfg),
        "schensted" => combinatorics::schensted(cfg),
        "greene" => combinatorics::greene(cfg),
        "gamma-invariance" => combinatorics::gamma_invariance(cfg),
        "duality" => combinatorics::duality(cfg),
        "straightening" => algebra::straightening(cfg),
        "groebner-it" => algebra::groebner_it(cfg),
        "gandin-closure" => algebra::gandin_closure(cfg),
        "balancing" => algebra::balancing(cfg),
        "algam" => algebra::algam(cfg),
        "symb-in" => algebra::symb_in(cfg),
        "cogenerated" => algebra::cogenerated(cfg),
        "cogenerated-explore" => algebra::cogenerated_explore(cfg),
        "negative-control" => algebra::negative_control(cfg),
        "examples-4a" => examples::examples_4a(cfg),
        "examples-4b" => examples::examples_4b(cfg),
        "shape-6-counterexample" => examples::shape_counterexample(cfg),
        other => Err(Error::invalid(format!("unknown suite {other:?}; known suites: {}", SUITES.join(", ")))),
    }
}

/// Runs one suite. A search that exceeds the budget yields a report
/// flagged `budget_exceeded` instead of an error.
pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let mut report = match dispatch(name, cfg) {
        Ok(r) => r,
        Err(Error::BudgetExceeded(n)) => {
            let mut r = Report::new(name, cfg.grid);
            r.finding(json!({"budget_exceeded": n}));
            r.mark_budget_exceeded();
            r
        }
        Err(e) => return Err(e),
    };
    if !cfg.per_slice {
        report.compact();
    }
    if cfg.timestamp {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        report.timestamp = Some(unix_now());
    }
    Ok(report)
}

/// The reports of a whole run, ordered by suite name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunOutcome {
    pub pass: bool,
    pub budget_exceeded: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub reports: Vec<Report>,
}

impl RunOutcome {
    /// 0 when every assertion passes, 3 when a search ran out of budget,
    /// 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.budget_exceeded {
            3
        } else if self.pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::invalid(e.to_string()))
    }

    pub fn to_csv(&self) -> Result<String> {
        report::to_csv(&self.reports)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

pub fn run_all(cfg: &RunConfig) -> Result<RunOutcome> {
    cfg.validate()?;
    let mut names: Vec<&str> = cfg.suites.iter().map(String::as_str).collect();
    names.sort_unstable();
    names.dedup();
    let reports = names.into_iter().map(|n| run_suite(n, cfg)).collect::<Result<Vec<_>>>()?;
    Ok(RunOutcome {
        pass: reports.iter().all(Report::passed),
        budget_exceeded: reports.iter().any(|r| r.budget_exceeded),
        timestamp: cfg.timestamp.then(unix_now),
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(m: usize, n: usize, bound: usize) -> RunConfig {
        RunConfig { timestamp: false, ..RunConfig::with_grid(GridSize::new(m, n).unwrap(), bound) }
    }

    #[test]
    fn suite_list_is_sorted_and_dispatchable() {
        let mut sorted = SUITES.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, SUITES);
        let err = run_suite("no-such-suite", &cfg(2, 2, 1)).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::default().validate().is_ok());
        assert!(RunConfig { degree_bound: 0, ..RunConfig::default() }.validate().is_err());
        assert!(RunConfig { budget: 0, ..RunConfig::default() }.validate().is_err());
        assert!(RunConfig { suites: vec!["nope".into()], ..RunConfig::default() }.validate().is_err());
    }

    #[test]
    fn config_from_toml_like_json() {
        let c: RunConfig = serde_json::from_str(r#"{"grid":[4,4],"degree_bound":6,"suites":["schensted"]}"#).unwrap();
        assert_eq!(c.grid, GridSize::square(4).unwrap());
        assert_eq!(c.suites, vec!["schensted".to_string()]);
        assert_eq!(c.budget, DEFAULT_BUDGET);
        assert!(serde_json::from_str::<RunConfig>(r#"{"grdi":[4,4]}"#).is_err());
    }

    #[test]
    fn bijection_on_1x1() {
        let r = run_suite("bijection", &cfg(1, 1, 3)).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked("round-trip"), 3);
    }

    #[test]
    fn empty_run() {
        let out = run_all(&RunConfig { suites: vec![], ..cfg(3, 3, 5) }).unwrap();
        assert!(out.reports.is_empty() && out.pass);
        assert_eq!(out.exit_code(), 0);
    }

    #[test]
    fn budget_one_is_flagged() {
        let c = RunConfig { budget: 1, suites: vec!["symb-in".into()], ..cfg(2, 2, 2) };
        let out = run_all(&c).unwrap();
        assert!(out.budget_exceeded);
        assert_eq!(out.exit_code(), 3);
    }

    #[test]
    fn reports_are_deterministic_without_timestamp() {
        let c = RunConfig { suites: vec!["greene".into(), "schensted".into()], ..cfg(2, 3, 3) };
        let a = run_all(&c).unwrap().to_json().unwrap();
        let b = run_all(&c).unwrap().to_json().unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("timestamp") && !a.contains("elapsed_ms"));
    }

    #[test]
    fn small_grid_suites_pass() {
        for name in ["bijection", "schensted", "greene", "gamma-invariance", "duality", "straightening", "groebner-it", "balancing", "algam", "negative-control", "cogenerated"] {
            let r = run_suite(name, &cfg(2, 3, 3)).unwrap();
            assert!(r.passed(), "{name}: {}", r.to_json().unwrap());
        }
    }
}
