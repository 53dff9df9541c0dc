//! Typed dense matrices between tensor words of finite-dimensional spaces.
//!
//! Index convention: the leftmost wire of a word is the most significant
//! digit of the mixed-radix basis index.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearError {
    #[error("boundary mismatch: codomain {cod} does not match domain {dom}")]
    BoundaryMismatch { cod: Word, dom: Word },
    #[error("matrix shape {rows}x{cols} does not match boundary {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("object space `{0}` is invalid: {1}")]
    BadObject(String, &'static str),
}

/// An ordered list of object names; the empty word is the monoidal unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<String>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from whitespace-separated names, e.g. `"B F"`.
    pub fn parse(s: &str) -> Self {
        Word(s.split_whitespace().map(str::to_string).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", self.0.join(" "))
        }
    }
}

impl<const N: usize> From<[&str; N]> for Word {
    fn from(names: [&str; N]) -> Self {
        Word(names.iter().map(|s| s.to_string()).collect())
    }
}

/// A named finite-dimensional space with labelled basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectSpace {
    pub name: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
}

impl ObjectSpace {
    pub fn new(name: &str, labels: &[&str]) -> Result<Self, LinearError> {
        Self::from_labels(name, labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn from_labels(name: &str, basis_labels: Vec<String>) -> Result<Self, LinearError> {
        let space = ObjectSpace {
            name: name.to_string(),
            dim: basis_labels.len(),
            basis_labels,
        };
        space.validate()?;
        Ok(space)
    }

    pub fn validate(&self) -> Result<(), LinearError> {
        if self.dim == 0 {
            return Err(LinearError::BadObject(self.name.clone(), "dimension must be positive"));
        }
        if self.basis_labels.len() != self.dim {
            return Err(LinearError::BadObject(
                self.name.clone(),
                "basis label count differs from dimension",
            ));
        }
        let mut seen = std::collections::HashSet::new();
        if !self.basis_labels.iter().all(|l| seen.insert(l)) {
            return Err(LinearError::BadObject(self.name.clone(), "basis labels repeat"));
        }
        Ok(())
    }
}

/// Looks up object dimensions by name.
pub trait ObjectTable {
    fn dim_of(&self, name: &str) -> Option<usize>;

    fn word_dim(&self, w: &Word) -> Result<usize, LinearError> {
        w.iter().try_fold(1usize, |acc, n| {
            let d = self
                .dim_of(n)
                .ok_or_else(|| LinearError::UnknownObject(n.to_string()))?;
            Ok(acc.saturating_mul(d))
        })
    }

    fn word_dims(&self, w: &Word) -> Result<Vec<usize>, LinearError> {
        w.iter()
            .map(|n| self.dim_of(n).ok_or_else(|| LinearError::UnknownObject(n.to_string())))
            .collect()
    }
}

impl ObjectTable for [ObjectSpace] {
    fn dim_of(&self, name: &str) -> Option<usize> {
        self.iter().find(|o| o.name == name).map(|o| o.dim)
    }
}

impl ObjectTable for Vec<ObjectSpace> {
    fn dim_of(&self, name: &str) -> Option<usize> {
        self.as_slice().dim_of(name)
    }
}

/// A dense matrix with typed boundary words, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap<K: Field> {
    dom: Word,
    cod: Word,
    rows: usize,
    cols: usize,
    entries: Vec<K::Elem>,
}

impl<K: Field> LinearMap<K> {
    pub fn new(dom: Word, cod: Word, rows: usize, cols: usize, entries: Vec<K::Elem>) -> Result<Self, LinearError> {
        if entries.len() != rows * cols {
            return Err(LinearError::Shape {
                rows: entries.len() / cols.max(1),
                cols,
                expected_rows: rows,
                expected_cols: cols,
            });
        }
        Ok(Self {
            dom,
            cod,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a map whose shape is checked against the object dimensions.
    pub fn from_entries(
        objects: &(impl ObjectTable + ?Sized),
        dom: Word,
        cod: Word,
        entries: Vec<K::Elem>,
    ) -> Result<Self, LinearError> {
        let rows = objects.word_dim(&cod)?;
        let cols = objects.word_dim(&dom)?;
        if entries.len() != rows * cols {
            return Err(LinearError::Shape {
                rows: entries.len() / cols.max(1),
                cols,
                expected_rows: rows,
                expected_cols: cols,
            });
        }
        Ok(Self {
            dom,
            cod,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a map from small integers, handy for structure constants.
    pub fn from_ints(
        field: &K,
        objects: &(impl ObjectTable + ?Sized),
        dom: Word,
        cod: Word,
        ints: &[i64],
    ) -> Result<Self, LinearError> {
        let entries = ints.iter().map(|&n| field.from_i64(n)).collect();
        Self::from_entries(objects, dom, cod, entries)
    }

    pub fn zero(field: &K, dom: Word, cod: Word, rows: usize, cols: usize) -> Self {
        Self {
            dom,
            cod,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &K, objects: &(impl ObjectTable + ?Sized), word: &Word) -> Result<Self, LinearError> {
        let n = objects.word_dim(word)?;
        let mut m = Self::zero(field, word.clone(), word.clone(), n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        Ok(m)
    }

    /// The permutation map on `word` that reverses the order of its wires.
    pub fn reversal(field: &K, objects: &(impl ObjectTable + ?Sized), word: &Word) -> Result<Self, LinearError> {
        let dims = objects.word_dims(word)?;
        let n: usize = dims.iter().product();
        let mut m = Self::zero(field, word.clone(), word.reversed(), n, n);
        let rev_dims: Vec<usize> = dims.iter().rev().copied().collect();
        for col in 0..n {
            let digits = to_digits(col, &dims);
            let rev: Vec<usize> = digits.iter().rev().copied().collect();
            let row = from_digits(&rev, &rev_dims);
            m.entries[row * n + col] = field.one();
        }
        Ok(m)
    }

    pub fn dom(&self) -> &Word {
        &self.dom
    }

    pub fn cod(&self) -> &Word {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[K::Elem] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &K::Elem {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: K::Elem) {
        self.entries[row * self.cols + col] = value;
    }

    /// Same entries, relabelled boundary. Shapes must agree.
    pub fn retyped(&self, dom: Word, cod: Word) -> Self {
        Self {
            dom,
            cod,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.clone(),
        }
    }

    pub fn column(&self, col: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn is_zero(&self, field: &K) -> bool {
        self.entries.iter().all(|e| field.is_zero(e))
    }
}

/// Splits a mixed-radix index into digits, most significant first.
pub fn to_digits(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for (slot, &d) in digits.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    digits
}

pub fn from_digits(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (&x, &d)| acc * d + x)
}

/// Vertical composition: `f` first, then `g`.
pub fn compose<K: Field>(field: &K, f: &LinearMap<K>, g: &LinearMap<K>) -> Result<LinearMap<K>, LinearError> {
    if f.cod != g.dom || f.rows != g.cols {
        return Err(LinearError::BoundaryMismatch {
            cod: f.cod.clone(),
            dom: g.dom.clone(),
        });
    }
    let (n, m, k) = (g.rows, f.rows, f.cols);
    let mut out = LinearMap::zero(field, f.dom.clone(), g.cod.clone(), n, k);
    for i in 0..n {
        for j in 0..m {
            let a = &g.entries[i * m + j];
            if field.is_zero(a) {
                continue;
            }
            for c in 0..k {
                let b = &f.entries[j * k + c];
                if !field.is_zero(b) {
                    field.mul_add_assign(&mut out.entries[i * k + c], a, b);
                }
            }
        }
    }
    Ok(out)
}

/// Horizontal juxtaposition: the Kronecker product with concatenated words.
pub fn juxtapose<K: Field>(field: &K, f: &LinearMap<K>, g: &LinearMap<K>) -> LinearMap<K> {
    let rows = f.rows * g.rows;
    let cols = f.cols * g.cols;
    let mut out = LinearMap::zero(field, f.dom.concat(&g.dom), f.cod.concat(&g.cod), rows, cols);
    for fr in 0..f.rows {
        for fc in 0..f.cols {
            let a = &f.entries[fr * f.cols + fc];
            if field.is_zero(a) {
                continue;
            }
            for gr in 0..g.rows {
                for gc in 0..g.cols {
                    let b = &g.entries[gr * g.cols + gc];
                    let row = fr * g.rows + gr;
                    let col = fc * g.cols + gc;
                    out.entries[row * cols + col] = field.mul(a, b);
                }
            }
        }
    }
    out
}

/// Exact equality; differing boundaries count as unequal.
pub fn equal<K: Field>(f: &LinearMap<K>, g: &LinearMap<K>) -> bool {
    f.dom == g.dom && f.cod == g.cod && f.rows == g.rows && f.cols == g.cols && f.entries == g.entries
}

/// Entrywise sum of two maps with the same boundary.
pub fn add<K: Field>(field: &K, f: &LinearMap<K>, g: &LinearMap<K>) -> Result<LinearMap<K>, LinearError> {
    if f.dom != g.dom || f.cod != g.cod || f.rows != g.rows || f.cols != g.cols {
        return Err(LinearError::BoundaryMismatch {
            cod: f.cod.clone(),
            dom: g.cod.clone(),
        });
    }
    let entries = f.entries.iter().zip(&g.entries).map(|(a, b)| field.add(a, b)).collect();
    Ok(LinearMap {
        dom: f.dom.clone(),
        cod: f.cod.clone(),
        rows: f.rows,
        cols: f.cols,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn objects() -> Vec<ObjectSpace> {
        vec![
            ObjectSpace::new("B", &["1", "g"]).unwrap(),
            ObjectSpace::new("F", &["1", "x"]).unwrap(),
        ]
    }

    #[test]
    fn compose_mod_seven() {
        let k = PrimeField::new(7).unwrap();
        let obj = objects();
        let f = LinearMap::from_ints(&k, &obj, Word::from(["B"]), Word::from(["B"]), &[2, 1, 0, 3]).unwrap();
        let g = LinearMap::from_ints(&k, &obj, Word::from(["B"]), Word::from(["B"]), &[1, 1, 1, 0]).unwrap();
        let h = compose(&k, &f, &g).unwrap();
        assert_eq!(h.entries(), &[2, 4, 2, 1]);
    }

    #[test]
    fn compose_rejects_mismatch() {
        let k = Rationals;
        let obj = objects();
        let f = LinearMap::from_ints(&k, &obj, Word::from(["B"]), Word::from(["F"]), &[1, 0, 0, 1]).unwrap();
        let g = LinearMap::identity(&k, &obj, &Word::from(["B"])).unwrap();
        assert!(matches!(compose(&k, &f, &g), Err(LinearError::BoundaryMismatch { .. })));
    }

    #[test]
    fn kronecker_of_row_and_column() {
        let k = Rationals;
        let obj = objects();
        let row = LinearMap::from_ints(&k, &obj, Word::from(["B"]), Word::empty(), &[1, 2]).unwrap();
        let col = LinearMap::from_ints(&k, &obj, Word::empty(), Word::from(["F"]), &[1, 3]).unwrap();
        let m = juxtapose(&k, &row, &col);
        let expect: Vec<_> = [1, 2, 3, 6].iter().map(|&n| k.from_i64(n)).collect();
        assert_eq!(m.entries(), expect.as_slice());
        assert_eq!((m.rows(), m.cols()), (2, 2));
    }

    #[test]
    fn empty_word_is_unit() {
        let k = Rationals;
        let obj = objects();
        let f = LinearMap::from_ints(&k, &obj, Word::from(["B"]), Word::from(["F"]), &[1, 5, -2, 3]).unwrap();
        let unit = LinearMap::identity(&k, &obj, &Word::empty()).unwrap();
        assert!(equal(&juxtapose(&k, &f, &unit), &f));
        assert!(equal(&juxtapose(&k, &unit, &f), &f));
    }

    #[test]
    fn equal_is_false_on_boundary_mismatch() {
        let k = Rationals;
        let obj = objects();
        let b = LinearMap::identity(&k, &obj, &Word::from(["B"])).unwrap();
        let f = LinearMap::identity(&k, &obj, &Word::from(["F"])).unwrap();
        assert!(!equal(&b, &f));
        assert!(equal(&b, &b));
    }

    #[test]
    fn digits_round_trip() {
        let dims = [2, 3, 4];
        for i in 0..24 {
            assert_eq!(from_digits(&to_digits(i, &dims), &dims), i);
        }
        assert_eq!(to_digits(5, &dims), vec![0, 1, 1]);
    }
}
