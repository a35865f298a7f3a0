//! Named checks, each reproducing one computational claim about the Chow
//! ring of `BPGL3` with exact arithmetic and reporting witnesses.

mod checks;
mod fixtures;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::exactpoly::{PolyError, Polynomial};
use crate::groups::GroupError;
use crate::intlinalg::LinAlgError;
use crate::presented::PresentationError;
use crate::repcalc::RepError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("max_degree {value} for `{check}` is outside the supported range 0..={max}")]
    OutOfRange { check: String, value: u32, max: u32 },
    #[error("internal error: {0}")]
    Internal(String),
}

macro_rules! internal_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CheckError {
            fn from(e: $t) -> Self {
                CheckError::Internal(e.to_string())
            }
        }
    )*};
}
internal_from!(
    PolyError,
    GroupError,
    LinAlgError,
    PresentationError,
    RepError
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Poly(Polynomial),
    Note(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Poly(p) => write!(f, "{p}"),
            Witness::Note(s) => f.write_str(s),
        }
    }
}

/// Static description of a registry entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSpec {
    pub name: &'static str,
    pub description: &'static str,
    /// The statement being verified, written as formulas.
    pub anchor: &'static str,
    /// Default degree bound and the largest accepted one, for degree-bounded checks.
    pub degree_bound: Option<(u32, u32)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    pub anchor: String,
    pub witnesses: Vec<(String, Witness)>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn witness(&self, label: &str) -> Option<&Witness> {
        self.witnesses
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, w)| w)
    }
}

/// Degree overrides: a per-check value wins over the global one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckConfig {
    pub max_degree: Option<u32>,
    pub per_check: BTreeMap<String, u32>,
}

impl CheckConfig {
    pub fn with_max_degree(d: u32) -> Self {
        CheckConfig {
            max_degree: Some(d),
            per_check: BTreeMap::new(),
        }
    }

    fn degree_for(&self, spec: &CheckSpec) -> Result<Option<u32>, CheckError> {
        let Some((default, max)) = spec.degree_bound else {
            return Ok(None);
        };
        let d = self
            .per_check
            .get(spec.name)
            .copied()
            .or(self.max_degree)
            .unwrap_or(default);
        if d > max {
            return Err(CheckError::OutOfRange {
                check: spec.name.to_string(),
                value: d,
                max,
            });
        }
        Ok(Some(d))
    }
}

/// What a check body produces.
pub(crate) struct Outcome {
    pub pass: bool,
    pub witnesses: Vec<(String, Witness)>,
}

impl Outcome {
    pub(crate) fn new() -> Self {
        Outcome {
            pass: true,
            witnesses: Vec::new(),
        }
    }

    pub(crate) fn poly(&mut self, label: impl Into<String>, p: &Polynomial) {
        self.witnesses
            .push((label.into(), Witness::Poly(p.clone())));
    }

    pub(crate) fn note(&mut self, label: impl Into<String>, s: impl Into<String>) {
        self.witnesses.push((label.into(), Witness::Note(s.into())));
    }

    /// Records a failed assertion with its counterexample.
    pub(crate) fn require(
        &mut self,
        ok: bool,
        label: impl Into<String>,
        counterexample: impl FnOnce() -> Witness,
    ) {
        if !ok {
            self.pass = false;
            self.witnesses.push((label.into(), counterexample()));
        }
    }
}

type CheckFn = fn(Option<u32>) -> Result<Outcome, CheckError>;

#[derive(Clone)]
pub struct CheckEntry {
    pub spec: CheckSpec,
    run: CheckFn,
}

impl fmt::Debug for CheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

#[derive(Debug, Clone)]
pub struct Registry {
    entries: Vec<CheckEntry>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn from_results(results: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for r in &results {
            match r.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Error => summary.error += 1,
            }
        }
        Report { results, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }
}

impl Registry {
    pub fn standard() -> Self {
        Registry {
            entries: checks::entries(),
        }
    }

    pub fn empty() -> Self {
        Registry {
            entries: Vec::new(),
        }
    }

    pub fn list_checks(&self) -> Vec<CheckSpec> {
        self.entries.iter().map(|e| e.spec.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&CheckEntry, CheckError> {
        self.entries
            .iter()
            .find(|e| e.spec.name == name)
            .ok_or_else(|| CheckError::UnknownCheck(name.to_string()))
    }

    fn execute(entry: &CheckEntry, config: &CheckConfig) -> Result<CheckResult, CheckError> {
        let bound = config.degree_for(&entry.spec)?;
        let start = Instant::now();
        let outcome = (entry.run)(bound);
        let elapsed = start.elapsed();
        let (verdict, witnesses) = match outcome {
            Ok(o) => (
                if o.pass { Verdict::Pass } else { Verdict::Fail },
                o.witnesses,
            ),
            Err(e) => (
                Verdict::Error,
                vec![("error".to_string(), Witness::Note(e.to_string()))],
            ),
        };
        let mut witnesses = witnesses;
        if let Some(d) = bound {
            witnesses.insert(0, ("max_degree".into(), Witness::Note(d.to_string())));
        }
        Ok(CheckResult {
            name: entry.spec.name.to_string(),
            verdict,
            anchor: entry.spec.anchor.to_string(),
            witnesses,
            elapsed,
        })
    }

    pub fn run_check(&self, name: &str, config: &CheckConfig) -> Result<CheckResult, CheckError> {
        Self::execute(self.get(name)?, config)
    }

    /// Runs the named checks concurrently; results keep the requested order.
    pub fn run_selected(&self, names: &[&str], config: &CheckConfig) -> Result<Report, CheckError> {
        let entries = names
            .iter()
            .map(|n| self.get(n))
            .collect::<Result<Vec<_>, _>>()?;
        let results = entries
            .par_iter()
            .map(|e| Self::execute(e, config))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Report::from_results(results))
    }

    /// Runs every check; configuration problems become `error` verdicts.
    pub fn run_all(&self, config: &CheckConfig) -> Report {
        let results = self
            .entries
            .par_iter()
            .map(|e| {
                Self::execute(e, config).unwrap_or_else(|err| CheckResult {
                    name: e.spec.name.to_string(),
                    verdict: Verdict::Error,
                    anchor: e.spec.anchor.to_string(),
                    witnesses: vec![("error".into(), Witness::Note(err.to_string()))],
                    elapsed: Duration::ZERO,
                })
            })
            .collect();
        Report::from_results(results)
    }
}

pub fn list_checks() -> Vec<CheckSpec> {
    Registry::standard().list_checks()
}

pub fn run_check(name: &str, config: &CheckConfig) -> Result<CheckResult, CheckError> {
    Registry::standard().run_check(name, config)
}

pub fn run_all(config: &CheckConfig) -> Report {
    Registry::standard().run_all(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_listing() {
        let specs = list_checks();
        assert_eq!(specs.len(), 18);
        assert!(specs.iter().any(|s| s.name == "gamma-generation"));
        assert!(specs
            .iter()
            .all(|s| !s.description.is_empty() && !s.anchor.is_empty()));
        let mut names: Vec<_> = specs.iter().map(|s| s.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 18);
    }

    #[test]
    fn unknown_and_out_of_range() {
        let cfg = CheckConfig::default();
        assert_eq!(
            run_check("no-such-check", &cfg),
            Err(CheckError::UnknownCheck("no-such-check".into()))
        );
        let big = CheckConfig::with_max_degree(1000);
        assert!(matches!(
            run_check("gamma-generation", &big),
            Err(CheckError::OutOfRange { .. })
        ));
        // checks without a degree bound ignore the global override
        assert_eq!(
            run_check("gamma-syzygy", &big).unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn empty_registry() {
        let r = Registry::empty().run_all(&CheckConfig::default());
        assert_eq!(r.summary, Summary::default());
        assert!(r.results.is_empty());
    }

    #[test]
    fn point_class_witness() {
        let r = run_check("point-class", &CheckConfig::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(
            r.witness("point_class").unwrap().to_string(),
            "ell^2 + ell*u1 + u2*u3"
        );
    }

    #[test]
    fn per_check_override_wins() {
        let mut cfg = CheckConfig::with_max_degree(30);
        cfg.per_check.insert("gamma-generation".into(), 4);
        let spec = Registry::standard()
            .get("gamma-generation")
            .unwrap()
            .spec
            .clone();
        assert_eq!(cfg.degree_for(&spec), Ok(Some(4)));
    }
}
