//! The identity catalog: every checked equation as a pair of diagrams,
//! grouped into suites.

mod definitions;
mod entries;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError};
use crate::linear::Word;

pub use definitions::{definition, Definition, COCYCLE_EXTRACTIONS, DERIVED, EXTRACTIONS, PRODUCT, TRIVIAL_FORMS};
pub use entries::{ALPHA_PARTNERS, COLLAPSE_SET};

/// Bumped whenever an axiom id changes meaning or disappears.
pub const CATALOG_VERSION: u32 = 1;

/// Wire labels of the two-object suites.
pub const MODEL_OBJECTS: &[&str] = &["B", "F"];
/// Wire label of the composite used by the product suite.
pub const PRODUCT_OBJECT: &str = "FB";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Suite {
    Base,
    TauDistributive,
    Wreath,
    HopfDatum,
    PairedWreathExtras,
    Ybe,
    Naturality,
    TauBimonadFb,
    LambdaDistributive,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Base,
        Suite::TauDistributive,
        Suite::Wreath,
        Suite::HopfDatum,
        Suite::PairedWreathExtras,
        Suite::Ybe,
        Suite::Naturality,
        Suite::TauBimonadFb,
        Suite::LambdaDistributive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Base => "base",
            Suite::TauDistributive => "tau-distributive",
            Suite::Wreath => "wreath",
            Suite::HopfDatum => "hopf-datum",
            Suite::PairedWreathExtras => "paired-wreath-extras",
            Suite::Ybe => "ybe",
            Suite::Naturality => "naturality",
            Suite::TauBimonadFb => "tau-bimonad-FB",
            Suite::LambdaDistributive => "lambda-distributive",
        }
    }

    /// Object labels the suite's diagrams are written over.
    pub fn objects(self) -> &'static [&'static str] {
        match self {
            Suite::TauBimonadFb => &[PRODUCT_OBJECT],
            _ => MODEL_OBJECTS,
        }
    }

    /// True for the suite evaluated on the composite rather than the model.
    pub fn on_product(self) -> bool {
        self == Suite::TauBimonadFb
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| CatalogError::UnknownSuite(s.to_string()))
    }
}

impl From<Suite> for String {
    fn from(s: Suite) -> String {
        s.name().to_string()
    }
}

impl TryFrom<String> for Suite {
    type Error = CatalogError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// One identity between two diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub id: String,
    pub suite: Suite,
    pub lhs: Diagram,
    pub rhs: Diagram,
    /// Short description of what the identity expresses.
    pub citation: String,
    /// Ids of identities this one is derived from; informational only.
    pub hypotheses: Vec<String>,
}

impl Axiom {
    /// The same identity with its sides exchanged.
    pub fn swapped(&self) -> Axiom {
        Axiom {
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            ..self.clone()
        }
    }
}

/// Parses a layer string, with `()` meaning the empty identity.
pub fn layers(text: &str, objects: &[&str]) -> Result<Diagram, DiagramError> {
    if text.trim() == "()" {
        return Ok(Diagram::Identity(Word::empty()));
    }
    Diagram::from_layers(text, objects)
}

fn build(suite: Suite, id: &str, lhs: &str, rhs: &str, note: &str) -> Axiom {
    let objects = suite.objects();
    let parse = |t: &str| layers(t, objects).unwrap_or_else(|e| panic!("catalog entry {id}: {e}"));
    let hypotheses = entries::HYPOTHESES
        .iter()
        .find(|(h, _)| *h == id)
        .map(|(_, hs)| hs.iter().map(|s| s.to_string()).collect())
        .unwrap_or_default();
    Axiom {
        id: id.to_string(),
        suite,
        lhs: parse(lhs),
        rhs: parse(rhs),
        citation: note.to_string(),
        hypotheses,
    }
}

/// The four shapes of a distributive law `tau: XY -> YX`, each with its
/// unit or counit companion, against the (co)monad structure named by
/// `x` and `y`.
struct Operations<'a> {
    object: &'a str,
    mul: &'a str,
    unit: &'a str,
    comul: &'a str,
    counit: &'a str,
}

fn distributive_rows(tag: &str, tau: &str, x: &Operations, y: &Operations) -> Vec<(String, String, String, String)> {
    let (xo, yo) = (x.object, y.object);
    vec![
        (
            format!("{tag}.left-monadic"),
            format!("{xo} {tau}; {tau} {xo}; {yo} {}", x.mul),
            format!("{} {yo}; {tau}", x.mul),
            format!("{tau} distributes over the {xo} multiplication"),
        ),
        (
            format!("{tag}.left-monadic-unit"),
            format!("{} {yo}; {tau}", x.unit),
            format!("{yo} {}", x.unit),
            format!("{tau} against the {xo} unit"),
        ),
        (
            format!("{tag}.right-monadic"),
            format!("{tau} {yo}; {yo} {tau}; {} {xo}", y.mul),
            format!("{xo} {}; {tau}", y.mul),
            format!("{tau} distributes over the {yo} multiplication"),
        ),
        (
            format!("{tag}.right-monadic-unit"),
            format!("{xo} {}; {tau}", y.unit),
            format!("{} {xo}", y.unit),
            format!("{tau} against the {yo} unit"),
        ),
        (
            format!("{tag}.left-comonadic"),
            format!("{xo} {}; {tau} {yo}; {yo} {tau}", y.comul),
            format!("{tau}; {} {xo}", y.comul),
            format!("{tau} distributes over the {yo} comultiplication"),
        ),
        (
            format!("{tag}.left-comonadic-counit"),
            format!("{tau}; {} {xo}", y.counit),
            format!("{xo} {}", y.counit),
            format!("{tau} against the {yo} counit"),
        ),
        (
            format!("{tag}.right-comonadic"),
            format!("{} {yo}; {xo} {tau}; {tau} {xo}", x.comul),
            format!("{tau}; {yo} {}", x.comul),
            format!("{tau} distributes over the {xo} comultiplication"),
        ),
        (
            format!("{tag}.right-comonadic-counit"),
            format!("{tau}; {yo} {}", x.counit),
            format!("{} {yo}", x.counit),
            format!("{tau} against the {xo} counit"),
        ),
    ]
}

const B_OPS: Operations<'static> = Operations {
    object: "B",
    mul: "mul_B",
    unit: "unit_B",
    comul: "comul_B",
    counit: "counit_B",
};

const F_OPS: Operations<'static> = Operations {
    object: "F",
    mul: "mul_F",
    unit: "unit_F",
    comul: "comul_F",
    counit: "counit_F",
};

const FB_OPS: Operations<'static> = Operations {
    object: "FB",
    mul: "nabla",
    unit: "eta",
    comul: "delta",
    counit: "epsilon",
};

fn assemble() -> Vec<Axiom> {
    let mut out = Vec::new();
    let push_rows = |suite: Suite, rows: &[entries::Row], out: &mut Vec<Axiom>| {
        for (id, lhs, rhs, note) in rows {
            out.push(build(suite, id, lhs, rhs, note));
        }
    };

    push_rows(Suite::Base, entries::BASE, &mut out);

    for (tag, tau, x, y) in [
        ("tau.BF", "tau_BF", &B_OPS, &F_OPS),
        ("tau.FB", "tau_FB", &F_OPS, &B_OPS),
        ("tau.BB", "tau_BB", &B_OPS, &B_OPS),
        ("tau.FF", "tau_FF", &F_OPS, &F_OPS),
    ] {
        for (id, lhs, rhs, note) in distributive_rows(tag, tau, x, y) {
            out.push(build(Suite::TauDistributive, &id, &lhs, &rhs, &note));
        }
    }

    push_rows(Suite::Wreath, entries::WREATH, &mut out);
    push_rows(Suite::HopfDatum, entries::HOPF, &mut out);
    for (id, lhs, input, output, note) in entries::BIPRODUCT_PROJECTIONS {
        let rhs = format!("{input}; {}; {output}", entries::BIPRODUCT_BODY);
        out.push(build(Suite::HopfDatum, id, lhs, &rhs, note));
    }
    push_rows(Suite::PairedWreathExtras, entries::PAIRED, &mut out);
    push_rows(Suite::Ybe, entries::YBE, &mut out);
    push_rows(Suite::Naturality, entries::NATURALITY, &mut out);
    push_rows(Suite::TauBimonadFb, entries::FB_BIMONAD, &mut out);
    for (id, lhs, rhs, note) in distributive_rows("fb.tau", "tau_FBFB", &FB_OPS, &FB_OPS) {
        out.push(build(Suite::TauBimonadFb, &id, &lhs, &rhs, &note));
    }
    push_rows(Suite::LambdaDistributive, entries::LAMBDA, &mut out);
    out
}

/// The full catalog, in suite order.
pub fn catalog() -> &'static [Axiom] {
    static CATALOG: OnceLock<Vec<Axiom>> = OnceLock::new();
    CATALOG.get_or_init(assemble)
}

pub fn axiom(id: &str) -> Result<&'static Axiom, CatalogError> {
    catalog()
        .iter()
        .find(|a| a.id == id)
        .ok_or_else(|| CatalogError::UnknownAxiom(id.to_string()))
}

pub fn suite_axioms(suite: Suite) -> impl Iterator<Item = &'static Axiom> {
    catalog().iter().filter(move |a| a.suite == suite)
}

/// The partner of `id` under the left-right symmetry, if it has one.
pub fn alpha_partner(id: &str) -> Option<&'static str> {
    ALPHA_PARTNERS.iter().find_map(|&(a, b)| {
        if a == id {
            Some(b)
        } else if b == id {
            Some(a)
        } else {
            None
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let mut seen = HashSet::new();
        for a in catalog() {
            assert!(seen.insert(&a.id), "duplicate {}", a.id);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn partners_and_collapse_refer_to_catalog() {
        for (a, b) in ALPHA_PARTNERS {
            assert!(axiom(a).is_ok(), "{a}");
            assert!(axiom(b).is_ok(), "{b}");
        }
        for id in COLLAPSE_SET {
            assert!(axiom(id).is_ok(), "{id}");
        }
        for a in catalog() {
            for h in &a.hypotheses {
                assert!(axiom(h).is_ok(), "{h}");
            }
        }
    }

    #[test]
    fn census() {
        assert!(catalog().len() >= 60);
        assert_eq!(suite_axioms(Suite::Ybe).count(), 6);
        assert_eq!(suite_axioms(Suite::TauDistributive).count(), 32);
        assert_eq!(suite_axioms(Suite::TauBimonadFb).count(), 18);
    }
}
