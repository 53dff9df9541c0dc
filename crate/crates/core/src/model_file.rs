//! The JSON model file, schema version "1".
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "field": "q",
//!   "objects": [{"name": "B", "dim": 2, "basis_labels": ["e", "g"]}, ...],
//!   "generators": {
//!     "mul_B": {"dom": ["B", "B"], "cod": ["B"], "matrix": [["1", "0", "0", "1"], ...]},
//!     ...
//!   }
//! }
//! ```
//!
//! Matrices are lists of rows. Basis indices of a word are mixed radix with
//! the leftmost wire most significant.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::linear::{LinearMap, ObjectSpace, Word};
use crate::model::{HopfDatumModel, Primitive};

pub const SCHEMA_VERSION: &str = "1";

/// A schema violation, located by a JSON pointer into the document.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{pointer}: {message}")]
pub struct SchemaError {
    pub pointer: String,
    pub message: String,
}

fn err(pointer: impl Into<String>, message: impl Into<String>) -> SchemaError {
    SchemaError {
        pointer: pointer.into(),
        message: message.into(),
    }
}

/// A model over whichever field the file names.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyModel {
    Rational(HopfDatumModel<Rationals>),
    Prime(HopfDatumModel<PrimeField>),
}

/// Runs `$body` with `$m` bound to the concrete model.
#[macro_export]
macro_rules! with_model {
    ($any:expr, $m:ident => $body:expr) => {
        match $any {
            $crate::model_file::AnyModel::Rational($m) => $body,
            $crate::model_file::AnyModel::Prime($m) => $body,
        }
    };
}

impl AnyModel {
    pub fn field_spec(&self) -> FieldSpec {
        with_model!(self, m => m.field().spec())
    }

    pub fn with_cap(&self, cap: usize) -> AnyModel {
        match self {
            AnyModel::Rational(m) => AnyModel::Rational(m.with_cap(cap)),
            AnyModel::Prime(m) => AnyModel::Prime(m.with_cap(cap)),
        }
    }

    pub fn to_json(&self) -> String {
        with_model!(self, m => emit(m))
    }
}

impl From<HopfDatumModel<Rationals>> for AnyModel {
    fn from(m: HopfDatumModel<Rationals>) -> Self {
        AnyModel::Rational(m)
    }
}

impl From<HopfDatumModel<PrimeField>> for AnyModel {
    fn from(m: HopfDatumModel<PrimeField>) -> Self {
        AnyModel::Prime(m)
    }
}

/// Serializes a model; keys keep a fixed order.
pub fn emit<K: Field>(model: &HopfDatumModel<K>) -> String {
    let field = model.field();
    let mut generators = Map::new();
    for (p, m) in model.primitives() {
        let rows: Vec<Value> = (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| Value::String(field.format(m.get(r, c))))
                        .collect(),
                )
            })
            .collect();
        generators.insert(
            p.name().to_string(),
            json!({ "dom": m.dom(), "cod": m.cod(), "matrix": rows }),
        );
    }
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "field": field.spec().to_string(),
        "objects": [model.b(), model.f()],
        "generators": generators,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("json value serializes");
    text.push('\n');
    text
}

/// Parses and validates a model file.
pub fn parse(text: &str) -> Result<AnyModel, SchemaError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| err("", format!("invalid JSON: {e}")))?;
    let root = doc.as_object().ok_or_else(|| err("", "document must be an object"))?;
    match root.get("schema_version") {
        Some(Value::String(v)) if v == SCHEMA_VERSION => {}
        Some(_) => return Err(err("/schema_version", format!("expected \"{SCHEMA_VERSION}\""))),
        None => return Err(err("/schema_version", "missing")),
    }
    let spec: FieldSpec = root
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| err("/field", "missing or not a string"))?
        .parse()
        .map_err(|e: crate::field::FieldError| err("/field", e.to_string()))?;
    match spec {
        FieldSpec::Rationals => Ok(AnyModel::Rational(parse_with(root, Rationals)?)),
        FieldSpec::PrimeField(p) => {
            let field = PrimeField::new(p).map_err(|e| err("/field", e.to_string()))?;
            Ok(AnyModel::Prime(parse_with(root, field)?))
        }
    }
}

fn parse_with<K: Field>(root: &Map<String, Value>, field: K) -> Result<HopfDatumModel<K>, SchemaError> {
    let objects = root
        .get("objects")
        .and_then(Value::as_array)
        .ok_or_else(|| err("/objects", "missing or not an array"))?;
    let mut b = None;
    let mut f = None;
    for (i, o) in objects.iter().enumerate() {
        let at = format!("/objects/{i}");
        let space: ObjectSpace = serde_json::from_value(o.clone()).map_err(|e| err(&at, e.to_string()))?;
        space.validate().map_err(|e| err(&at, e.to_string()))?;
        let slot = match space.name.as_str() {
            "B" => &mut b,
            "F" => &mut f,
            other => return Err(err(format!("{at}/name"), format!("object `{other}` is not B or F"))),
        };
        if slot.replace(space).is_some() {
            return Err(err(format!("{at}/name"), "object declared twice"));
        }
    }
    let b = b.ok_or_else(|| err("/objects", "object B missing"))?;
    let f = f.ok_or_else(|| err("/objects", "object F missing"))?;
    let spaces = vec![b.clone(), f.clone()];

    let generators = root
        .get("generators")
        .and_then(Value::as_object)
        .ok_or_else(|| err("/generators", "missing or not an object"))?;
    if let Some(extra) = generators.keys().find(|k| k.parse::<Primitive>().is_err()) {
        return Err(err(format!("/generators/{extra}"), "unknown generator"));
    }
    let mut maps = Vec::new();
    for p in Primitive::ALL {
        let at = format!("/generators/{}", p.name());
        let g = generators
            .get(p.name())
            .and_then(Value::as_object)
            .ok_or_else(|| err(&at, "missing or not an object"))?;
        let word = |key: &str| -> Result<Word, SchemaError> {
            serde_json::from_value(g.get(key).cloned().unwrap_or(Value::Null))
                .map_err(|e| err(format!("{at}/{key}"), e.to_string()))
        };
        let (dom, cod) = (word("dom")?, word("cod")?);
        if dom != p.dom() {
            return Err(err(format!("{at}/dom"), format!("expected {}", p.dom())));
        }
        if cod != p.cod() {
            return Err(err(format!("{at}/cod"), format!("expected {}", p.cod())));
        }
        use crate::linear::ObjectTable;
        let rows = spaces.word_dim(&cod).map_err(|e| err(&at, e.to_string()))?;
        let cols = spaces.word_dim(&dom).map_err(|e| err(&at, e.to_string()))?;
        let matrix = g
            .get("matrix")
            .and_then(Value::as_array)
            .ok_or_else(|| err(format!("{at}/matrix"), "missing or not an array"))?;
        if matrix.len() != rows {
            return Err(err(
                format!("{at}/matrix"),
                format!("expected {rows} rows, found {}", matrix.len()),
            ));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for (r, row) in matrix.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| err(format!("{at}/matrix/{r}"), "row is not an array"))?;
            if row.len() != cols {
                return Err(err(
                    format!("{at}/matrix/{r}"),
                    format!("expected {cols} entries, found {}", row.len()),
                ));
            }
            for (c, v) in row.iter().enumerate() {
                let here = format!("{at}/matrix/{r}/{c}");
                let s = v.as_str().ok_or_else(|| err(&here, "scalar must be a string"))?;
                entries.push(field.parse(s).map_err(|e| err(&here, e.to_string()))?);
            }
        }
        let m = LinearMap::new(dom, cod, rows, cols, entries).map_err(|e| err(&at, e.to_string()))?;
        maps.push((p, m));
    }
    HopfDatumModel::new(field, b, f, maps).map_err(|e| err("/generators", e.to_string()))
}
