//! Exact checking of catalog identities and suite reports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, Axiom, Suite, CATALOG_VERSION};
use crate::eval::Interpretation;
use crate::field::Field;
use crate::model::HopfDatumModel;
use crate::product::build_product;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

/// The first entry where the two sides disagree, scalars in text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub column: usize,
    pub row: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Largest intermediate dimension reached on either side.
    pub eval_dims: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Hypotheses of a failed identity that fail as well.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub failed_hypotheses: Vec<String>,
}

impl CheckResult {
    fn skipped(id: &str, reason: String) -> Self {
        Self {
            id: id.to_string(),
            verdict: Verdict::Skipped,
            counterexample: None,
            eval_dims: 0,
            reason: Some(reason),
            failed_hypotheses: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: Suite,
    pub verdict: Verdict,
    pub axioms: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn from_results(name: Suite, axioms: Vec<CheckResult>) -> Self {
        Self {
            name,
            verdict: summarize(&axioms),
            axioms,
        }
    }

    pub fn result(&self, id: &str) -> Option<&CheckResult> {
        self.axioms.iter().find(|r| r.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.axioms.iter().filter(|r| r.verdict == Verdict::Fail)
    }
}

/// Fail if anything failed, Skipped if anything could not be evaluated,
/// Pass otherwise.
pub fn summarize(results: &[CheckResult]) -> Verdict {
    if results.iter().any(|r| r.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if results.iter().any(|r| r.verdict == Verdict::Skipped) {
        Verdict::Skipped
    } else {
        Verdict::Pass
    }
}

/// Machine-readable report over one model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub catalog_version: u32,
    pub model_hash: String,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn verdict(&self) -> Verdict {
        if self.suites.iter().any(|s| s.verdict == Verdict::Fail) {
            Verdict::Fail
        } else if self.suites.iter().any(|s| s.verdict == Verdict::Skipped) {
            Verdict::Skipped
        } else {
            Verdict::Pass
        }
    }
}

/// Evaluates both sides of `axiom` in `interp` and compares exactly.
pub fn check_axiom<K: Field>(axiom: &Axiom, interp: &Interpretation<K>) -> CheckResult {
    match interp.compare(&axiom.lhs, &axiom.rhs) {
        Err(e) => CheckResult::skipped(&axiom.id, e.to_string()),
        Ok(cmp) => {
            let field = interp.field();
            let counterexample = cmp.mismatch.map(|m| Counterexample {
                column: m.column,
                row: m.row,
                lhs: field.format(&m.lhs),
                rhs: field.format(&m.rhs),
            });
            CheckResult {
                id: axiom.id.clone(),
                verdict: if counterexample.is_some() {
                    Verdict::Fail
                } else {
                    Verdict::Pass
                },
                counterexample,
                eval_dims: cmp.peak,
                reason: None,
                failed_hypotheses: Vec::new(),
            }
        }
    }
}

/// Checks one axiom against a model, routing product identities to the
/// composite.
pub fn check_on_model<K: Field>(axiom: &Axiom, model: &HopfDatumModel<K>) -> CheckResult {
    let result = if axiom.suite.on_product() {
        match build_product(model) {
            Ok(p) => check_axiom(axiom, p.interpretation()),
            Err(e) => CheckResult::skipped(&axiom.id, e.to_string()),
        }
    } else {
        match model.interpretation() {
            Ok(interp) => check_axiom(axiom, interp),
            Err(e) => CheckResult::skipped(&axiom.id, e.to_string()),
        }
    };
    annotate(result, axiom, model)
}

fn annotate<K: Field>(mut result: CheckResult, axiom: &Axiom, model: &HopfDatumModel<K>) -> CheckResult {
    if result.verdict != Verdict::Fail || axiom.hypotheses.is_empty() {
        return result;
    }
    let Ok(interp) = model.interpretation() else {
        return result;
    };
    for h in &axiom.hypotheses {
        if let Ok(hyp) = catalog::axiom(h) {
            if !hyp.suite.on_product() && check_axiom(hyp, interp).verdict == Verdict::Fail {
                result.failed_hypotheses.push(h.clone());
            }
        }
    }
    result
}

/// Runs every axiom of `suite` on `model`.
pub fn run_suite<K: Field>(suite: Suite, model: &HopfDatumModel<K>) -> SuiteReport {
    let axioms: Vec<&Axiom> = catalog::suite_axioms(suite).collect();
    let results = if suite.on_product() {
        match build_product(model) {
            Ok(p) => axioms
                .iter()
                .map(|a| annotate(check_axiom(a, p.interpretation()), a, model))
                .collect(),
            Err(e) => axioms
                .iter()
                .map(|a| CheckResult::skipped(&a.id, e.to_string()))
                .collect(),
        }
    } else {
        match model.interpretation() {
            Ok(interp) => axioms
                .iter()
                .map(|a| annotate(check_axiom(a, interp), a, model))
                .collect(),
            Err(e) => axioms
                .iter()
                .map(|a| CheckResult::skipped(&a.id, e.to_string()))
                .collect(),
        }
    };
    SuiteReport::from_results(suite, results)
}

/// Runs the named suite; `UnknownSuite` for names outside the catalog.
pub fn run_named_suite<K: Field>(name: &str, model: &HopfDatumModel<K>) -> Result<SuiteReport, catalog::CatalogError> {
    Ok(run_suite(name.parse()?, model))
}

/// Runs the given suites and wraps them into a report.
pub fn report<K: Field>(suites: &[Suite], model: &HopfDatumModel<K>) -> Report {
    Report {
        catalog_version: CATALOG_VERSION,
        model_hash: model.content_hash(),
        suites: suites.iter().map(|&s| run_suite(s, model)).collect(),
    }
}

impl<K: Field> HopfDatumModel<K> {
    /// The base suite: monad and comonad laws and the unit/counit
    /// compatibilities.
    pub fn validate_base(&self) -> SuiteReport {
        run_suite(Suite::Base, self)
    }
}
