//! Evaluation of diagrams into linear maps.
//!
//! A diagram is compiled into a plan and each basis vector is pushed through
//! it as a sparse vector. Juxtaposition acts on one tensor factor at a time,
//! so no Kronecker product is ever materialised.

use indexmap::IndexMap;
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, SignatureTable};
use crate::field::Field;
use crate::linear::{LinearError, LinearMap, ObjectSpace, ObjectTable, Word};

/// Default bound on the dimension of any intermediate tensor word.
pub const DEFAULT_DIMENSION_CAP: usize = 1 << 20;

/// A vector as sorted (index, nonzero value) pairs.
type Sparse<E> = Vec<(usize, E)>;

fn normalize<K: Field>(field: &K, mut v: Sparse<K::Elem>) -> Sparse<K::Elem> {
    v.sort_unstable_by_key(|(i, _)| *i);
    let mut out: Sparse<K::Elem> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = field.add(y, &x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !field.is_zero(x));
    out
}

/// First row where two sorted sparse columns differ.
fn first_difference<K: Field>(
    field: &K,
    a: &Sparse<K::Elem>,
    b: &Sparse<K::Elem>,
) -> Option<(usize, K::Elem, K::Elem)> {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return None,
            (Some((r, x)), None) => return Some((*r, x.clone(), field.zero())),
            (None, Some((r, y))) => return Some((*r, field.zero(), y.clone())),
            (Some((r, x)), Some((s, y))) => {
                if r < s {
                    return Some((*r, x.clone(), field.zero()));
                }
                if s < r {
                    return Some((*s, field.zero(), y.clone()));
                }
                if x != y {
                    return Some((*r, x.clone(), y.clone()));
                }
                i += 1;
                j += 1;
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error("sides have different boundaries: {lhs} versus {rhs}")]
    SidesDiffer { lhs: String, rhs: String },
    #[error("intermediate dimension {dim} exceeds cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
}

#[derive(Debug, Clone)]
struct Entry<K: Field> {
    map: LinearMap<K>,
    /// Nonzero entries per column, as (row, value).
    columns: Vec<Vec<(usize, K::Elem)>>,
}

impl<K: Field> Entry<K> {
    fn new(field: &K, map: LinearMap<K>) -> Self {
        let columns = (0..map.cols())
            .map(|c| {
                (0..map.rows())
                    .filter(|&r| !field.is_zero(map.get(r, c)))
                    .map(|r| (r, map.get(r, c).clone()))
                    .collect()
            })
            .collect();
        Self { map, columns }
    }
}

/// Objects and generator matrices that give diagrams a meaning.
#[derive(Debug, Clone)]
pub struct Interpretation<K: Field> {
    field: K,
    objects: Vec<ObjectSpace>,
    generators: IndexMap<String, Entry<K>>,
    cap: usize,
}

impl<K: Field> Interpretation<K> {
    pub fn new(field: K, objects: Vec<ObjectSpace>) -> Self {
        Self {
            field,
            objects,
            generators: IndexMap::new(),
            cap: DEFAULT_DIMENSION_CAP,
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn objects(&self) -> &[ObjectSpace] {
        &self.objects
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn set_cap(&mut self, cap: usize) {
        self.cap = cap;
    }

    /// Registers a generator, replacing any previous one of the same name.
    pub fn insert(&mut self, name: &str, map: LinearMap<K>) -> Result<(), LinearError> {
        let rows = self.objects.word_dim(map.cod())?;
        let cols = self.objects.word_dim(map.dom())?;
        if rows != map.rows() || cols != map.cols() {
            return Err(LinearError::Shape {
                rows: map.rows(),
                cols: map.cols(),
                expected_rows: rows,
                expected_cols: cols,
            });
        }
        self.generators.insert(name.to_string(), Entry::new(&self.field, map));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&LinearMap<K>> {
        self.generators.get(name).map(|e| &e.map)
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.generators.keys().map(String::as_str)
    }

    /// Evaluates `d` into a dense matrix.
    pub fn evaluate(&self, d: &Diagram) -> Result<LinearMap<K>, EvalError> {
        let compiled = self.compile(d)?;
        let (rows, cols) = (compiled.plan.cod, compiled.plan.dom);
        let mut out = LinearMap::zero(&self.field, compiled.dom.clone(), compiled.cod.clone(), rows, cols);
        for col in 0..cols {
            for (row, value) in self.run_column(&compiled.plan, col) {
                out.set(row, col, value);
            }
        }
        Ok(out)
    }

    /// Largest intermediate word dimension reached while evaluating `d`.
    pub fn eval_dims(&self, d: &Diagram) -> Result<usize, EvalError> {
        Ok(self.compile(d)?.peak)
    }

    /// Compares two diagrams column by column and returns the first
    /// disagreement in (column, row) order, if any.
    pub fn compare(&self, lhs: &Diagram, rhs: &Diagram) -> Result<Comparison<K>, EvalError> {
        let left = self.compile(lhs)?;
        let right = self.compile(rhs)?;
        let peak = left.peak.max(right.peak);
        if left.dom != right.dom || left.cod != right.cod {
            return Err(EvalError::SidesDiffer {
                lhs: format!("{} -> {}", left.dom, left.cod),
                rhs: format!("{} -> {}", right.dom, right.cod),
            });
        }
        for column in 0..left.plan.dom {
            let a = self.run_column(&left.plan, column);
            let b = self.run_column(&right.plan, column);
            if let Some((row, lhs, rhs)) = first_difference(&self.field, &a, &b) {
                return Ok(Comparison {
                    peak,
                    mismatch: Some(Mismatch { column, row, lhs, rhs }),
                });
            }
        }
        Ok(Comparison { peak, mismatch: None })
    }

    /// Pushes one basis vector through the plan. The result is sorted by
    /// row and holds no zeros.
    fn run_column(&self, plan: &Plan, col: usize) -> Sparse<K::Elem> {
        self.apply(plan, vec![(col, self.field.one())], 1)
    }

    /// Applies `plan` to the middle factor of a vector on
    /// `outer x plan.dom x inner`; `outer` is implicit in the indices.
    fn apply(&self, plan: &Plan, state: Sparse<K::Elem>, inner: usize) -> Sparse<K::Elem> {
        match &plan.node {
            Node::Identity => state,
            Node::Vertical(a, b) => {
                let mid = self.apply(a, state, inner);
                self.apply(b, mid, inner)
            }
            Node::Horizontal(a, b) => {
                let mid = self.apply(a, state, inner * b.dom);
                self.apply(b, mid, inner)
            }
            Node::Generator(index) => {
                let entry = &self.generators[*index];
                let (rows, cols) = (plan.cod, plan.dom);
                let f = &self.field;
                let mut out = Vec::with_capacity(state.len());
                for (idx, x) in &state {
                    let (oc, i) = (idx / inner, idx % inner);
                    let (o, c) = (oc / cols, oc % cols);
                    for (r, v) in &entry.columns[c] {
                        out.push(((o * rows + r) * inner + i, f.mul(v, x)));
                    }
                }
                normalize(f, out)
            }
        }
    }

    fn compile(&self, d: &Diagram) -> Result<Compiled, EvalError> {
        let (dom, cod) = d.infer_boundary(self)?;
        let plan = self.plan(d)?;
        let peak = self.peak(&plan, 1, 1).max(plan.dom).max(plan.cod);
        if peak > self.cap {
            return Err(EvalError::DimensionCapExceeded {
                dim: peak,
                cap: self.cap,
            });
        }
        Ok(Compiled { plan, dom, cod, peak })
    }

    fn plan(&self, d: &Diagram) -> Result<Plan, EvalError> {
        Ok(match d {
            Diagram::Identity(w) => {
                let n = self.objects.word_dim(w)?;
                Plan {
                    dom: n,
                    cod: n,
                    node: Node::Identity,
                }
            }
            Diagram::Generator(name) => {
                let (index, _, entry) = self
                    .generators
                    .get_full(name)
                    .ok_or_else(|| DiagramError::UnknownGenerator(name.clone()))?;
                Plan {
                    dom: entry.map.cols(),
                    cod: entry.map.rows(),
                    node: Node::Generator(index),
                }
            }
            Diagram::Vertical(a, b) => {
                let (a, b) = (self.plan(a)?, self.plan(b)?);
                Plan {
                    dom: a.dom,
                    cod: b.cod,
                    node: Node::Vertical(Box::new(a), Box::new(b)),
                }
            }
            Diagram::Horizontal(a, b) => {
                let (a, b) = (self.plan(a)?, self.plan(b)?);
                Plan {
                    dom: a.dom.saturating_mul(b.dom),
                    cod: a.cod.saturating_mul(b.cod),
                    node: Node::Horizontal(Box::new(a), Box::new(b)),
                }
            }
        })
    }

    fn peak(&self, plan: &Plan, outer: usize, inner: usize) -> usize {
        let here = outer.saturating_mul(plan.dom.max(plan.cod)).saturating_mul(inner);
        match &plan.node {
            Node::Identity | Node::Generator(_) => here,
            Node::Vertical(a, b) => self.peak(a, outer, inner).max(self.peak(b, outer, inner)),
            Node::Horizontal(a, b) => {
                let left = self.peak(a, outer, inner.saturating_mul(b.dom));
                let right = self.peak(b, outer.saturating_mul(a.cod), inner);
                left.max(right).max(here)
            }
        }
    }
}

impl<K: Field> SignatureTable for Interpretation<K> {
    fn signature(&self, name: &str) -> Option<(&Word, &Word)> {
        self.generators.get(name).map(|e| (e.map.dom(), e.map.cod()))
    }
}

impl<K: Field> ObjectTable for Interpretation<K> {
    fn dim_of(&self, name: &str) -> Option<usize> {
        self.objects.dim_of(name)
    }
}

/// The first disagreement between two evaluated diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch<E> {
    pub column: usize,
    pub row: usize,
    pub lhs: E,
    pub rhs: E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison<K: Field> {
    pub peak: usize,
    pub mismatch: Option<Mismatch<K::Elem>>,
}

struct Compiled {
    plan: Plan,
    dom: Word,
    cod: Word,
    peak: usize,
}

struct Plan {
    dom: usize,
    cod: usize,
    node: Node,
}

enum Node {
    Identity,
    Generator(usize),
    Vertical(Box<Plan>, Box<Plan>),
    Horizontal(Box<Plan>, Box<Plan>),
}
