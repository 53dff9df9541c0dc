//! Built-in models with exactly known structure constants.

use thiserror::Error;

use crate::field::Field;
use crate::linear::{LinearMap, ObjectSpace, ObjectTable, Word};
use crate::model::{Bialgebra, HopfDatumModel, ModelBuilder, ModelError, Primitive};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LibraryError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("cocycle value at ({g}, {h}) is zero")]
    ZeroCocycleValue { g: usize, h: usize },
    #[error("cocycle table must be {order}x{order}")]
    CocycleShape { order: usize },
    #[error("`{model}` needs a field of characteristic other than {characteristic}")]
    BadCharacteristic { model: &'static str, characteristic: u64 },
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    order: usize,
    mult_table: Vec<Vec<usize>>,
    identity_index: usize,
    labels: Vec<String>,
}

impl GroupPresentation {
    /// Validates associativity, the identity and inverses.
    pub fn new(mult_table: Vec<Vec<usize>>, identity_index: usize, labels: Vec<String>) -> Result<Self, LibraryError> {
        let n = mult_table.len();
        let bad = |why: &str| Err(LibraryError::NotAGroup(why.to_string()));
        if n == 0 {
            return bad("empty table");
        }
        if labels.len() != n {
            return bad("label count differs from order");
        }
        if mult_table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return bad("table is not square over the index range");
        }
        if identity_index >= n {
            return bad("identity index out of range");
        }
        let m = |a: usize, b: usize| mult_table[a][b];
        for a in 0..n {
            if m(identity_index, a) != a || m(a, identity_index) != a {
                return bad("identity is not two-sided");
            }
            if !(0..n).any(|b| m(a, b) == identity_index && m(b, a) == identity_index) {
                return bad("missing inverse");
            }
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return bad("multiplication is not associative");
                    }
                }
            }
        }
        Ok(Self {
            order: n,
            mult_table,
            identity_index,
            labels,
        })
    }

    /// The cyclic group of order `n`, elements labelled `e, g, g2, ...`.
    pub fn cyclic(n: usize, generator: &str) -> Result<Self, LibraryError> {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => generator.to_string(),
                _ => format!("{generator}{k}"),
            })
            .collect();
        Self::new(table, 0, labels)
    }

    /// The Klein four-group `e, a, b, c` with `c = ab`; indices are bit
    /// pairs multiplied by xor.
    pub fn klein_four() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let labels = ["e", "a", "b", "c"].map(String::from).to_vec();
        Self::new(table, 0, labels).expect("Klein four-group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity_index
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult_table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == self.identity_index)
            .expect("validated group")
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

fn space(name: &str, labels: &[String]) -> Result<ObjectSpace, ModelError> {
    Ok(ObjectSpace::from_labels(name, labels.to_vec())?)
}

/// A map given by its action on basis vectors: `f(col)` lists the
/// (row, scalar) pairs of that column.
fn map_from_columns<K: Field>(
    field: &K,
    objects: &[ObjectSpace],
    dom: &str,
    cod: &str,
    column: impl Fn(usize) -> Vec<(usize, K::Elem)>,
) -> Result<LinearMap<K>, ModelError> {
    let (dom, cod) = (Word::parse(dom), Word::parse(cod));
    let rows = objects.word_dim(&cod)?;
    let cols = objects.word_dim(&dom)?;
    let mut m = LinearMap::zero(field, dom, cod, rows, cols);
    for c in 0..m.cols() {
        for (r, v) in column(c) {
            let sum = field.add(m.get(r, c), &v);
            m.set(r, c, sum);
        }
    }
    Ok(m)
}

/// The group algebra `k[G]` with group-like basis.
pub fn group_algebra<K: Field>(field: &K, g: &GroupPresentation, name: &str) -> Result<Bialgebra<K>, ModelError> {
    let sp = space(name, g.labels())?;
    let objects = [sp.clone()];
    let n = g.order();
    let one = || field.one();
    let ww = format!("{name} {name}");
    Ok(Bialgebra {
        mul: map_from_columns(field, &objects, &ww, name, |c| vec![(g.mul(c / n, c % n), one())])?,
        unit: map_from_columns(field, &objects, "", name, |_| vec![(g.identity(), one())])?,
        comul: map_from_columns(field, &objects, name, &ww, |c| vec![(c * n + c, one())])?,
        counit: map_from_columns(field, &objects, name, "", |_| vec![(0, one())])?,
        space: sp,
    })
}

/// The algebra of functions on `G`, basis the point indicators.
pub fn function_algebra<K: Field>(field: &K, g: &GroupPresentation, name: &str) -> Result<Bialgebra<K>, ModelError> {
    let labels: Vec<String> = g.labels().iter().map(|l| format!("d_{l}")).collect();
    let sp = space(name, &labels)?;
    let objects = [sp.clone()];
    let n = g.order();
    let one = || field.one();
    let ww = format!("{name} {name}");
    Ok(Bialgebra {
        mul: map_from_columns(field, &objects, &ww, name, |c| {
            if c / n == c % n {
                vec![(c / n, one())]
            } else {
                vec![]
            }
        })?,
        unit: map_from_columns(field, &objects, "", name, |_| (0..n).map(|r| (r, one())).collect())?,
        comul: map_from_columns(field, &objects, name, &ww, |c| {
            (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| g.mul(a, b) == c)
                .map(|(a, b)| (a * n + b, one()))
                .collect()
        })?,
        counit: map_from_columns(field, &objects, name, "", |c| {
            if c == g.identity() {
                vec![(0, one())]
            } else {
                vec![]
            }
        })?,
        space: sp,
    })
}

fn require_characteristic<K: Field>(field: &K, model: &'static str, forbidden: &[u64]) -> Result<(), LibraryError> {
    let p = field.spec().characteristic();
    match forbidden.iter().find(|&&f| f == p) {
        Some(&characteristic) => Err(LibraryError::BadCharacteristic { model, characteristic }),
        None => Ok(()),
    }
}

/// `B = k[G]`, `F = k[H]`, every decoration trivial.
pub fn trivial_model<K: Field>(
    field: K,
    b: &GroupPresentation,
    f: &GroupPresentation,
) -> Result<HopfDatumModel<K>, LibraryError> {
    let bb = group_algebra(&field, b, "B")?;
    let ff = group_algebra(&field, f, "F")?;
    Ok(ModelBuilder::new(field, bb, ff).build()?)
}

/// `B = F = k[C2]` with all decorations trivial.
pub fn trivial<K: Field>(field: K) -> Result<HopfDatumModel<K>, LibraryError> {
    let c2 = GroupPresentation::cyclic(2, "g")?;
    trivial_model(field, &c2, &c2)
}

/// `B = k[G]` acting on `F = k[H]` through group automorphisms
/// `act(g, h)`; everything else trivial.
pub fn group_smash<K: Field>(
    field: K,
    b: &GroupPresentation,
    f: &GroupPresentation,
    act: impl Fn(usize, usize) -> usize,
) -> Result<HopfDatumModel<K>, LibraryError> {
    let bb = group_algebra(&field, b, "B")?;
    let ff = group_algebra(&field, f, "F")?;
    let objects = [bb.space.clone(), ff.space.clone()];
    let n = f.order();
    let left_action = map_from_columns(&field, &objects, "B F", "F", |c| vec![(act(c / n, c % n), field.one())])?;
    Ok(ModelBuilder::new(field.clone(), bb, ff)
        .set(Primitive::LeftAction, left_action)
        .build()?)
}

/// `k[C2]` acting on `k[C3]` by inversion; the composite is `k[S3]`.
pub fn smash_product_s3<K: Field>(field: K) -> Result<HopfDatumModel<K>, LibraryError> {
    require_characteristic(&field, "smash_s3", &[2, 3])?;
    let c2 = GroupPresentation::cyclic(2, "s")?;
    let c3 = GroupPresentation::cyclic(3, "r")?;
    group_smash(field, &c2, &c3, |s, r| if s == 0 { r } else { c3.inverse(r) })
}

/// `k[C4]` acting on `k[C4]` through inversion by odd elements.
pub fn smash_product_c4<K: Field>(field: K) -> Result<HopfDatumModel<K>, LibraryError> {
    let c4 = GroupPresentation::cyclic(4, "g")?;
    let inv = c4.clone();
    group_smash(field, &c4, &c4, |s, r| if s % 2 == 0 { r } else { inv.inverse(r) })
}

/// Twisted group algebra: `B` is the ground field, `F = k[G]` and sigma
/// holds the cocycle values; all (co)actions trivial.
pub fn twisted_group_algebra<K: Field>(
    field: K,
    g: &GroupPresentation,
    cocycle: &[Vec<K::Elem>],
) -> Result<HopfDatumModel<K>, LibraryError> {
    let n = g.order();
    if cocycle.len() != n || cocycle.iter().any(|row| row.len() != n) {
        return Err(LibraryError::CocycleShape { order: n });
    }
    for (a, row) in cocycle.iter().enumerate() {
        if let Some(b) = row.iter().position(|v| field.is_zero(v)) {
            return Err(LibraryError::ZeroCocycleValue { g: a, h: b });
        }
    }
    let unit_group = GroupPresentation::new(vec![vec![0]], 0, vec!["1".to_string()])?;
    let bb = group_algebra(&field, &unit_group, "B")?;
    let ff = group_algebra(&field, g, "F")?;
    let objects = [bb.space.clone(), ff.space.clone()];
    let sigma = map_from_columns(&field, &objects, "F F", "B", |c| {
        vec![(0, cocycle[c / n][c % n].clone())]
    })?;
    Ok(ModelBuilder::new(field.clone(), bb, ff)
        .set(Primitive::Sigma, sigma)
        .build()?)
}

/// The Klein four-group cocycle `(-1)^(h(x) h(y))` where `h` reads the high
/// bit of the index: squares of `a, b, c` are `1, -1, -1`.
pub fn klein_four_cocycle<K: Field>(field: &K) -> Vec<Vec<K::Elem>> {
    let second = |x: usize| (x >= 2) as i64;
    (0..4)
        .map(|x| {
            (0..4)
                .map(|y| field.from_i64(if second(x) * second(y) == 1 { -1 } else { 1 }))
                .collect()
        })
        .collect()
}

/// The twisted group algebra of the Klein four-group.
pub fn twisted_v4<K: Field>(field: K) -> Result<HopfDatumModel<K>, LibraryError> {
    let cocycle = klein_four_cocycle(&field);
    twisted_group_algebra(field, &GroupPresentation::klein_four(), &cocycle)
}

/// `B = k[C2]`, `F = span{1, x}` with `x^2 = 0`, `x` primitive,
/// `g` acting by `x -> -x` and coacting by `x -> g (x) x`. The composite
/// is the four-dimensional Sweedler algebra.
pub fn radford_h4<K: Field>(field: K) -> Result<HopfDatumModel<K>, LibraryError> {
    require_characteristic(&field, "radford_h4", &[2])?;
    let c2 = GroupPresentation::cyclic(2, "g")?;
    let bb = group_algebra(&field, &c2, "B")?;
    let fs = ObjectSpace::new("F", &["1", "x"]).map_err(ModelError::from)?;
    let objects = [bb.space.clone(), fs.clone()];
    let ints = |dom: &str, cod: &str, v: &[i64]| -> Result<LinearMap<K>, ModelError> {
        Ok(LinearMap::from_ints(
            &field,
            &objects[..],
            Word::parse(dom),
            Word::parse(cod),
            v,
        )?)
    };
    // Columns: 11, 1x, x1, xx.
    let ff = Bialgebra {
        space: fs,
        mul: ints("F F", "F", &[1, 0, 0, 0, 0, 1, 1, 0])?,
        unit: ints("", "F", &[1, 0])?,
        // Rows 11, 1x, x1, xx; columns 1, x.
        comul: ints("F", "F F", &[1, 0, 0, 1, 0, 1, 0, 0])?,
        counit: ints("F", "", &[1, 0])?,
    };
    // Columns (b, f): e1, ex, g1, gx; rows 1, x.
    let left_action = ints("B F", "F", &[1, 0, 1, 0, 0, 1, 0, -1])?;
    // Columns 1, x; rows (b, f): e1, ex, g1, gx.
    let left_coaction = ints("F", "B F", &[1, 0, 0, 0, 0, 0, 0, 1])?;
    Ok(ModelBuilder::new(field.clone(), bb, ff)
        .set(Primitive::LeftAction, left_action)
        .set(Primitive::LeftCoaction, left_coaction)
        .build()?)
}

/// `B = k^{C3}`, `F = k[C2]`, with `F` acting on the right by the
/// conjugation of `C3` inside `S3`.
pub fn bicrossproduct_s3<K: Field>(field: K) -> Result<HopfDatumModel<K>, LibraryError> {
    require_characteristic(&field, "bicrossproduct_s3", &[2, 3])?;
    let c3 = GroupPresentation::cyclic(3, "r")?;
    let c2 = GroupPresentation::cyclic(2, "s")?;
    let bb = function_algebra(&field, &c3, "B")?;
    let ff = group_algebra(&field, &c2, "F")?;
    let objects = [bb.space.clone(), ff.space.clone()];
    let right_action = map_from_columns(&field, &objects, "B F", "B", |c| {
        let (point, s) = (c / 2, c % 2);
        let moved = if s == 0 { point } else { c3.inverse(point) };
        vec![(moved, field.one())]
    })?;
    Ok(ModelBuilder::new(field.clone(), bb, ff)
        .set(Primitive::RightAction, right_action)
        .build()?)
}

/// Adds `delta` to one entry of a primitive map.
pub fn perturb<K: Field>(
    model: &HopfDatumModel<K>,
    generator: &str,
    row: usize,
    col: usize,
    delta: &K::Elem,
) -> Result<HopfDatumModel<K>, ModelError> {
    model.with_entry_added(generator, row, col, delta)
}

/// Names of the built-in examples.
pub const EXAMPLES: &[(&str, &str)] = &[
    ("trivial", "k[C2] and k[C2] with every decoration trivial"),
    ("smash_s3", "k[C2] acting on k[C3] by inversion"),
    ("smash_c4", "k[C4] acting on k[C4] by inversion through odd elements"),
    (
        "radford_h4",
        "k[C2] and the nilpotent span{1, x}; composite is the Sweedler algebra",
    ),
    ("bicrossproduct_s3", "functions on C3 with k[C2] acting by conjugation"),
    ("twisted_v4", "Klein four-group algebra twisted by a sign cocycle"),
];

/// Builds a named example.
pub fn example<K: Field>(name: &str, field: K) -> Result<HopfDatumModel<K>, LibraryError> {
    match name {
        "trivial" => trivial(field),
        "smash_s3" => smash_product_s3(field),
        "smash_c4" => smash_product_c4(field),
        "radford_h4" => radford_h4(field),
        "bicrossproduct_s3" => bicrossproduct_s3(field),
        "twisted_v4" => twisted_v4(field),
        other => Err(LibraryError::UnknownExample(other.to_string())),
    }
}
