//! Human-oriented text reports. The JSON forms are the stable ones.

use std::fmt::Write as _;

use wreathforge_core::check::{Report, Verdict};
use wreathforge_core::ClassificationReport;

pub fn report(rep: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "model {} (catalog v{})",
        &rep.model_hash[..12.min(rep.model_hash.len())],
        rep.catalog_version
    );
    for suite in &rep.suites {
        let passed = suite.axioms.iter().filter(|a| a.verdict == Verdict::Pass).count();
        let _ = writeln!(
            out,
            "{:<8} {} ({passed}/{} identities)",
            suite.verdict,
            suite.name.name(),
            suite.axioms.len()
        );
        for a in suite.axioms.iter().filter(|a| a.verdict != Verdict::Pass) {
            let _ = write!(out, "  {:<8} {}", a.verdict, a.id);
            if let Some(c) = &a.counterexample {
                let _ = write!(out, ": column {} row {}: lhs {} rhs {}", c.column, c.row, c.lhs, c.rhs);
            }
            if let Some(r) = &a.reason {
                let _ = write!(out, ": {r}");
            }
            if !a.failed_hypotheses.is_empty() {
                let _ = write!(out, " [failing hypotheses: {}]", a.failed_hypotheses.join(", "));
            }
            out.push('\n');
        }
    }
    let _ = writeln!(out, "overall  {}", rep.verdict());
    out
}

pub fn classification(rep: &ClassificationReport) -> String {
    let row = |r: Option<usize>| r.map_or("-".to_string(), |r| r.to_string());
    let mut out = String::new();
    let _ = writeln!(out, "signature          {}", rep.signature);
    let _ = writeln!(out, "wreath row         {}", row(rep.table1_wreath_row));
    let _ = writeln!(out, "cowreath row       {}", row(rep.table1_cowreath_row));
    let _ = writeln!(out, "compatible         {}", rep.table2_compatible);
    let _ = writeln!(out, "trivalent          {}", rep.trivalent);
    let _ = writeln!(out, "theorem applies    {}", rep.theorem_applies);
    for (name, v) in &rep.suites {
        let _ = writeln!(out, "suite {name:<22} {v}");
    }
    let _ = writeln!(out, "fb bimonad         {}", rep.fb_bimonad);
    let named = rep.named_example_match.map_or("-".to_string(), |n| n.to_string());
    let _ = writeln!(out, "named example      {named}");
    out
}
