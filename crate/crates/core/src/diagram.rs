//! The diagram IR: expression trees over named generators.

use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linear::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("boundary mismatch at {path}: {cod} does not feed {dom}")]
    BoundaryMismatch { path: String, cod: Word, dom: Word },
    #[error("generator `{0}` has no mirror partner")]
    MissingMirrorPartner(String),
    #[error("empty layer in `{0}`")]
    EmptyLayer(String),
}

/// The boundary of one atomic generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSignature {
    pub name: String,
    pub dom: Word,
    pub cod: Word,
}

impl GeneratorSignature {
    pub fn new(name: &str, dom: Word, cod: Word) -> Self {
        Self {
            name: name.to_string(),
            dom,
            cod,
        }
    }
}

/// Anything that can report generator boundaries by name.
pub trait SignatureTable {
    fn signature(&self, name: &str) -> Option<(&Word, &Word)>;
}

/// A plain ordered table of signatures.
#[derive(Debug, Clone, Default)]
pub struct Signatures(IndexMap<String, GeneratorSignature>);

impl Signatures {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, sig: GeneratorSignature) {
        self.0.insert(sig.name.clone(), sig);
    }

    pub fn iter(&self) -> impl Iterator<Item = &GeneratorSignature> {
        self.0.values()
    }
}

impl FromIterator<GeneratorSignature> for Signatures {
    fn from_iter<I: IntoIterator<Item = GeneratorSignature>>(iter: I) -> Self {
        let mut table = Signatures::new();
        for sig in iter {
            table.insert(sig);
        }
        table
    }
}

impl SignatureTable for Signatures {
    fn signature(&self, name: &str) -> Option<(&Word, &Word)> {
        self.0.get(name).map(|s| (&s.dom, &s.cod))
    }
}

/// A string diagram. `Vertical(a, b)` runs `a` first; `Horizontal(a, b)`
/// places `a` on the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Diagram {
    Identity(Word),
    Generator(String),
    Vertical(Box<Diagram>, Box<Diagram>),
    Horizontal(Box<Diagram>, Box<Diagram>),
}

impl Diagram {
    pub fn id(word: impl Into<Word>) -> Self {
        Diagram::Identity(word.into())
    }

    pub fn generator(name: &str) -> Self {
        Diagram::Generator(name.to_string())
    }

    /// `self` followed by `next`.
    pub fn then(self, next: Diagram) -> Self {
        Diagram::Vertical(Box::new(self), Box::new(next))
    }

    /// `self` with `right` placed beside it.
    pub fn beside(self, right: Diagram) -> Self {
        Diagram::Horizontal(Box::new(self), Box::new(right))
    }

    /// Builds a diagram from layers written top to bottom and separated by
    /// `;`. Within a layer, tokens naming an object are identity wires and
    /// every other token is a generator.
    pub fn from_layers(text: &str, objects: &[&str]) -> Result<Self, DiagramError> {
        let mut rows = Vec::new();
        for layer in text.split(';') {
            let mut pieces: Vec<Diagram> = Vec::new();
            let mut wires: Vec<String> = Vec::new();
            for tok in layer.split_whitespace() {
                if objects.contains(&tok) {
                    wires.push(tok.to_string());
                } else {
                    if !wires.is_empty() {
                        pieces.push(Diagram::Identity(Word(std::mem::take(&mut wires))));
                    }
                    pieces.push(Diagram::generator(tok));
                }
            }
            if !wires.is_empty() {
                pieces.push(Diagram::Identity(Word(wires)));
            }
            let row = pieces
                .into_iter()
                .reduce(Diagram::beside)
                .ok_or_else(|| DiagramError::EmptyLayer(text.to_string()))?;
            rows.push(row);
        }
        Ok(rows.into_iter().reduce(Diagram::then).expect("split yields a layer"))
    }

    pub fn infer_boundary(&self, table: &impl SignatureTable) -> Result<(Word, Word), DiagramError> {
        self.infer_at(table, &mut String::new())
    }

    fn infer_at(&self, table: &impl SignatureTable, path: &mut String) -> Result<(Word, Word), DiagramError> {
        match self {
            Diagram::Identity(w) => Ok((w.clone(), w.clone())),
            Diagram::Generator(name) => table
                .signature(name)
                .map(|(d, c)| (d.clone(), c.clone()))
                .ok_or_else(|| DiagramError::UnknownGenerator(name.clone())),
            Diagram::Vertical(a, b) => {
                let (da, ca) = child(a, table, path, "/v0")?;
                let (db, cb) = child(b, table, path, "/v1")?;
                if ca != db {
                    let at = if path.is_empty() { "/".to_string() } else { path.clone() };
                    return Err(DiagramError::BoundaryMismatch {
                        path: at,
                        cod: ca,
                        dom: db,
                    });
                }
                Ok((da, cb))
            }
            Diagram::Horizontal(a, b) => {
                let (da, ca) = child(a, table, path, "/h0")?;
                let (db, cb) = child(b, table, path, "/h1")?;
                Ok((da.concat(&db), ca.concat(&cb)))
            }
        }
    }

    /// Left-right reflection. Generators are renamed through `partner`,
    /// which must be an involution on the generator table.
    pub fn mirror<F>(&self, partner: &F) -> Result<Diagram, DiagramError>
    where
        F: Fn(&str) -> Option<String>,
    {
        Ok(match self {
            Diagram::Identity(w) => Diagram::Identity(w.reversed()),
            Diagram::Generator(name) => {
                Diagram::Generator(partner(name).ok_or_else(|| DiagramError::MissingMirrorPartner(name.clone()))?)
            }
            Diagram::Vertical(a, b) => a.mirror(partner)?.then(b.mirror(partner)?),
            Diagram::Horizontal(a, b) => b.mirror(partner)?.beside(a.mirror(partner)?),
        })
    }

    /// Generator names in left-to-right, bottom-up order, with repeats.
    pub fn generators(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Diagram::Identity(_) => {}
            Diagram::Generator(n) => out.push(n),
            Diagram::Vertical(a, b) | Diagram::Horizontal(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Diagram::Identity(_) | Diagram::Generator(_) => 1,
            Diagram::Vertical(a, b) | Diagram::Horizontal(a, b) => 1 + a.size() + b.size(),
        }
    }
}

fn child(
    d: &Diagram,
    table: &impl SignatureTable,
    path: &mut String,
    step: &str,
) -> Result<(Word, Word), DiagramError> {
    let len = path.len();
    path.push_str(step);
    let out = d.infer_at(table, path);
    path.truncate(len);
    out
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::Identity(w) => {
                write!(f, "(id")?;
                for name in w.iter() {
                    write!(f, " {name}")?;
                }
                write!(f, ")")
            }
            Diagram::Generator(name) => write!(f, "{name}"),
            Diagram::Vertical(a, b) => write!(f, "(v {a} {b})"),
            Diagram::Horizontal(a, b) => write!(f, "(h {a} {b})"),
        }
    }
}
