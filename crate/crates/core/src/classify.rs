//! Signatures, table membership and the verdicts derived from them.

use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::catalog::Suite;
use crate::check::{run_suite, Verdict};
use crate::field::Field;
use crate::model::{HopfDatumModel, ModelError, Signature, SignaturePart};

const fn part(first: u8, second: u8, twist: u8) -> SignaturePart {
    SignaturePart::new(first == 1, second == 1, twist == 1)
}

/// Monad halves whose datum is a wreath, in table order.
pub const WREATH_ROWS: [SignaturePart; 4] = [part(1, 0, 0), part(0, 1, 0), part(0, 1, 1), part(1, 1, 0)];

/// Comonad halves whose datum is a cowreath, row by row beside the
/// wreath rows they correspond to.
pub const COWREATH_ROWS: [SignaturePart; 4] = [part(0, 1, 0), part(1, 0, 0), part(1, 0, 1), part(1, 1, 0)];

/// Matching (wreath, cowreath) halves.
const COMPATIBLE: &[(SignaturePart, &[SignaturePart])] = &[
    (part(0, 1, 1), &[part(1, 0, 0), part(1, 0, 1)]),
    (
        part(0, 1, 0),
        &[part(0, 1, 0), part(1, 0, 0), part(1, 0, 1), part(1, 1, 0)],
    ),
    (part(1, 0, 0), &[part(0, 1, 0), part(1, 0, 0), part(1, 1, 0)]),
    (part(1, 1, 0), &[part(0, 1, 0), part(1, 0, 0), part(1, 1, 0)]),
    (
        part(0, 0, 0),
        &[part(0, 0, 0), part(1, 0, 0), part(0, 1, 0), part(1, 1, 0)],
    ),
];

/// 1-based row of the monad half in the wreath table.
pub fn wreath_row(s: &Signature) -> Option<usize> {
    WREATH_ROWS.iter().position(|p| *p == s.monad).map(|i| i + 1)
}

/// 1-based row of the comonad half in the cowreath table.
pub fn cowreath_row(s: &Signature) -> Option<usize> {
    COWREATH_ROWS.iter().position(|p| *p == s.comonad).map(|i| i + 1)
}

/// Whether the two halves appear as a matching pair. A trivial comonad
/// half matches every cocycle-free monad half, mirroring the trivial
/// monad half row.
pub fn table2_compatible(s: &Signature) -> bool {
    let listed = COMPATIBLE
        .iter()
        .any(|(m, cs)| *m == s.monad && cs.contains(&s.comonad));
    let mirrored = s.comonad == part(0, 0, 0) && !s.monad.twist;
    listed || mirrored
}

/// Both cocycles trivial and at most three of the four (co)actions
/// nontrivial.
pub fn signature_is_trivalent(s: &Signature) -> bool {
    !s.monad.twist && !s.comonad.twist && s.monad.actions() + s.comonad.actions() <= 3
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedExample {
    Radford,
    SweedlerCrossed,
    Bicrossproduct,
    MatchedPair,
    Cosmash,
    TwistedGroupAlgebra,
}

impl NamedExample {
    pub fn name(self) -> &'static str {
        match self {
            NamedExample::Radford => "radford",
            NamedExample::SweedlerCrossed => "sweedler-crossed",
            NamedExample::Bicrossproduct => "bicrossproduct",
            NamedExample::MatchedPair => "matched-pair",
            NamedExample::Cosmash => "cosmash",
            NamedExample::TwistedGroupAlgebra => "twisted-group-algebra",
        }
    }
}

impl fmt::Display for NamedExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Matches a signature against the classical constructions.
pub fn named_match(s: &Signature) -> Option<NamedExample> {
    let (m, c) = (s.monad, s.comonad);
    let trivial = part(0, 0, 0);
    match (m, c) {
        _ if m == part(1, 0, 0) && c == part(1, 0, 0) => Some(NamedExample::Radford),
        _ if (m == part(1, 0, 0) && c == part(0, 1, 0)) || (m == part(0, 1, 0) && c == part(1, 0, 0)) => {
            Some(NamedExample::Bicrossproduct)
        }
        _ if m == part(0, 1, 1) && c == trivial => Some(NamedExample::SweedlerCrossed),
        _ if m == part(1, 1, 0) && c == trivial => Some(NamedExample::MatchedPair),
        _ if m == part(1, 1, 1) && c == part(1, 0, 0) => Some(NamedExample::Cosmash),
        _ if m == part(0, 0, 1) && c == trivial => Some(NamedExample::TwistedGroupAlgebra),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    /// Text form `((i,j),k),((i',j'),k')`.
    pub signature: String,
    pub flags: Signature,
    pub table1_wreath_row: Option<usize>,
    pub table1_cowreath_row: Option<usize>,
    pub table2_compatible: bool,
    pub trivalent: bool,
    /// Trivalent, table-compatible, and the hopf-datum, ybe and naturality
    /// suites all pass.
    pub theorem_applies: bool,
    pub suites: IndexMap<String, Verdict>,
    pub fb_bimonad: Verdict,
    pub named_example_match: Option<NamedExample>,
}

/// Suites run by [`classify`].
pub const CLASSIFY_SUITES: [Suite; 6] = [
    Suite::HopfDatum,
    Suite::Ybe,
    Suite::Naturality,
    Suite::PairedWreathExtras,
    Suite::Wreath,
    Suite::TauBimonadFb,
];

pub fn is_trivalent<K: Field>(m: &HopfDatumModel<K>) -> Result<bool, ModelError> {
    Ok(signature_is_trivalent(&m.triviality_flags()?))
}

pub fn classify<K: Field>(m: &HopfDatumModel<K>) -> Result<ClassificationReport, ModelError> {
    let flags = m.triviality_flags()?;
    let suites: IndexMap<String, Verdict> = CLASSIFY_SUITES
        .iter()
        .map(|&s| (s.name().to_string(), run_suite(s, m).verdict))
        .collect();
    let passes = |s: Suite| suites.get(s.name()) == Some(&Verdict::Pass);
    let trivalent = signature_is_trivalent(&flags);
    let compatible = table2_compatible(&flags);
    let theorem_applies =
        trivalent && compatible && passes(Suite::HopfDatum) && passes(Suite::Ybe) && passes(Suite::Naturality);
    Ok(ClassificationReport {
        signature: flags.to_string(),
        flags,
        table1_wreath_row: wreath_row(&flags),
        table1_cowreath_row: cowreath_row(&flags),
        table2_compatible: compatible,
        trivalent,
        theorem_applies,
        fb_bimonad: suites[Suite::TauBimonadFb.name()],
        suites,
        named_example_match: named_match(&flags),
    })
}
