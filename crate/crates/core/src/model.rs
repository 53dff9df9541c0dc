//! The model type: primitive structure maps on two objects `B` and `F`,
//! plus the generators derived from them through catalog diagrams.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::catalog::{self, Definition, MODEL_OBJECTS};
use crate::diagram::{Diagram, DiagramError};
use crate::eval::{EvalError, Interpretation, DEFAULT_DIMENSION_CAP};
use crate::field::Field;
use crate::linear::{compose, equal, LinearError, LinearMap, ObjectSpace, ObjectTable, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("object `{found}` given where `{expected}` was required")]
    ObjectName { expected: &'static str, found: String },
    #[error("missing primitive generator `{0}`")]
    MissingGenerator(&'static str),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("`{name}` must map {expected_dom} -> {expected_cod}, got {dom} -> {cod}")]
    WrongBoundary {
        name: &'static str,
        expected_dom: Word,
        expected_cod: Word,
        dom: Word,
        cod: Word,
    },
    #[error("entry ({row}, {col}) is outside the {rows}x{cols} matrix of `{name}`")]
    IndexOutOfRange {
        name: String,
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("failed to derive `{name}`: {source}")]
    Derived { name: &'static str, source: EvalError },
}

/// The eighteen stored structure maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Primitive {
    MulB,
    UnitB,
    ComulB,
    CounitB,
    MulF,
    UnitF,
    ComulF,
    CounitF,
    LeftAction,
    RightAction,
    RightCoaction,
    LeftCoaction,
    Sigma,
    RhoPrime,
    TauBF,
    TauFB,
    TauBB,
    TauFF,
}

impl Primitive {
    pub const ALL: [Primitive; 18] = [
        Primitive::MulB,
        Primitive::UnitB,
        Primitive::ComulB,
        Primitive::CounitB,
        Primitive::MulF,
        Primitive::UnitF,
        Primitive::ComulF,
        Primitive::CounitF,
        Primitive::LeftAction,
        Primitive::RightAction,
        Primitive::RightCoaction,
        Primitive::LeftCoaction,
        Primitive::Sigma,
        Primitive::RhoPrime,
        Primitive::TauBF,
        Primitive::TauFB,
        Primitive::TauBB,
        Primitive::TauFF,
    ];

    pub fn name(self) -> &'static str {
        self.table().0
    }

    pub fn dom(self) -> Word {
        Word::parse(self.table().1)
    }

    pub fn cod(self) -> Word {
        Word::parse(self.table().2)
    }

    fn table(self) -> (&'static str, &'static str, &'static str) {
        use Primitive::*;
        match self {
            MulB => ("mul_B", "B B", "B"),
            UnitB => ("unit_B", "", "B"),
            ComulB => ("comul_B", "B", "B B"),
            CounitB => ("counit_B", "B", ""),
            MulF => ("mul_F", "F F", "F"),
            UnitF => ("unit_F", "", "F"),
            ComulF => ("comul_F", "F", "F F"),
            CounitF => ("counit_F", "F", ""),
            LeftAction => ("left_action", "B F", "F"),
            RightAction => ("right_action", "B F", "B"),
            RightCoaction => ("right_coaction", "B", "B F"),
            LeftCoaction => ("left_coaction", "F", "B F"),
            Sigma => ("sigma", "F F", "B"),
            RhoPrime => ("rho_prime", "F", "B B"),
            TauBF => ("tau_BF", "B F", "F B"),
            TauFB => ("tau_FB", "F B", "B F"),
            TauBB => ("tau_BB", "B B", "B B"),
            TauFF => ("tau_FF", "F F", "F F"),
        }
    }

    /// The decorations that have a distinguished trivial value.
    pub fn is_decoration(self) -> bool {
        catalog::TRIVIAL_FORMS.iter().any(|d| d.name == self.name())
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Primitive {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Primitive::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| ModelError::UnknownGenerator(s.to_string()))
    }
}

/// Names of the ambient symmetry generators available in every model.
pub const SWAPS: [(&str, &str); 4] = [
    ("swap_BF", "B F"),
    ("swap_FB", "F B"),
    ("swap_BB", "B B"),
    ("swap_FF", "F F"),
];

/// One half of a signature: two (co)action bits and a (co)cycle bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SignaturePart {
    pub first: bool,
    pub second: bool,
    pub twist: bool,
}

impl SignaturePart {
    pub const fn new(first: bool, second: bool, twist: bool) -> Self {
        Self { first, second, twist }
    }

    pub fn actions(&self) -> u32 {
        self.first as u32 + self.second as u32
    }
}

impl fmt::Display for SignaturePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),{})", self.first as u8, self.second as u8, self.twist as u8)
    }
}

/// Which decorations of a model are nontrivial. The monad part records
/// (left action, right action) and sigma; the comonad part records
/// (right coaction, left coaction) and rho_prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Signature {
    pub monad: SignaturePart,
    pub comonad: SignaturePart,
}

impl Signature {
    pub fn from_bits(bits: [bool; 6]) -> Self {
        Self {
            monad: SignaturePart::new(bits[0], bits[1], bits[2]),
            comonad: SignaturePart::new(bits[3], bits[4], bits[5]),
        }
    }

    pub fn bits(&self) -> [bool; 6] {
        [
            self.monad.first,
            self.monad.second,
            self.monad.twist,
            self.comonad.first,
            self.comonad.second,
            self.comonad.twist,
        ]
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.monad, self.comonad)
    }
}

/// Generators computed from the primitives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedGenerators<K: Field> {
    pub psi: LinearMap<K>,
    pub phi_prime: LinearMap<K>,
    pub eta_m: LinearMap<K>,
    pub epsilon_c_prime: LinearMap<K>,
    pub mu_m: LinearMap<K>,
    pub delta_c_prime: LinearMap<K>,
    pub lambda_b: LinearMap<K>,
    pub lambda_f: LinearMap<K>,
    pub lambda_rad: LinearMap<K>,
    pub lambda_left_b: LinearMap<K>,
    pub lambda_right_b: LinearMap<K>,
}

/// The four (co)actions read off from `psi` and `phi_prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Actions<K: Field> {
    pub left_action: LinearMap<K>,
    pub right_action: LinearMap<K>,
    pub right_coaction: LinearMap<K>,
    pub left_coaction: LinearMap<K>,
}

/// A finite-dimensional model: objects `B`, `F` and all primitive maps.
/// Models are immutable; every modification returns a new model.
#[derive(Debug, Clone)]
pub struct HopfDatumModel<K: Field> {
    field: K,
    b: ObjectSpace,
    f: ObjectSpace,
    maps: Vec<LinearMap<K>>,
    cap: usize,
    cache: OnceLock<Result<Interpretation<K>, ModelError>>,
}

impl<K: Field> PartialEq for HopfDatumModel<K> {
    fn eq(&self, other: &Self) -> bool {
        self.field.spec() == other.field.spec()
            && self.b == other.b
            && self.f == other.f
            && self.maps.iter().zip(&other.maps).all(|(a, b)| equal(a, b))
    }
}

impl<K: Field> HopfDatumModel<K> {
    /// Builds a model from all eighteen primitives, checking boundaries.
    pub fn new(
        field: K,
        b: ObjectSpace,
        f: ObjectSpace,
        maps: impl IntoIterator<Item = (Primitive, LinearMap<K>)>,
    ) -> Result<Self, ModelError> {
        for (space, expected) in [(&b, "B"), (&f, "F")] {
            if space.name != expected {
                return Err(ModelError::ObjectName {
                    expected,
                    found: space.name.clone(),
                });
            }
            space.validate()?;
        }
        let mut slots: Vec<Option<LinearMap<K>>> = vec![None; Primitive::ALL.len()];
        for (p, m) in maps {
            slots[p as usize] = Some(m);
        }
        let objects = vec![b.clone(), f.clone()];
        let mut out = Vec::with_capacity(slots.len());
        for (p, slot) in Primitive::ALL.into_iter().zip(slots) {
            let m = slot.ok_or(ModelError::MissingGenerator(p.name()))?;
            check_boundary(&objects, p, &m)?;
            out.push(m);
        }
        Ok(Self {
            field,
            b,
            f,
            maps: out,
            cap: DEFAULT_DIMENSION_CAP,
            cache: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn b(&self) -> &ObjectSpace {
        &self.b
    }

    pub fn f(&self) -> &ObjectSpace {
        &self.f
    }

    pub fn objects(&self) -> Vec<ObjectSpace> {
        vec![self.b.clone(), self.f.clone()]
    }

    pub fn map(&self, p: Primitive) -> &LinearMap<K> {
        &self.maps[p as usize]
    }

    pub fn primitives(&self) -> impl Iterator<Item = (Primitive, &LinearMap<K>)> {
        Primitive::ALL.into_iter().zip(&self.maps)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// The same model with a different evaluation dimension cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        Self {
            cap,
            cache: OnceLock::new(),
            ..self.clone()
        }
    }

    /// Replaces one primitive map.
    pub fn with_map(&self, p: Primitive, m: LinearMap<K>) -> Result<Self, ModelError> {
        check_boundary(&self.objects(), p, &m)?;
        let mut maps = self.maps.clone();
        maps[p as usize] = m;
        Ok(Self {
            maps,
            cache: OnceLock::new(),
            ..self.clone()
        })
    }

    /// Adds `delta` to one entry of a primitive map.
    pub fn with_entry_added(&self, name: &str, row: usize, col: usize, delta: &K::Elem) -> Result<Self, ModelError> {
        let p: Primitive = name.parse()?;
        let mut m = self.map(p).clone();
        if row >= m.rows() || col >= m.cols() {
            return Err(ModelError::IndexOutOfRange {
                name: name.to_string(),
                row,
                col,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let v = self.field.add(m.get(row, col), delta);
        m.set(row, col, v);
        self.with_map(p, m)
    }

    /// Primitives and ambient swaps only.
    pub fn base_interpretation(&self) -> Result<Interpretation<K>, ModelError> {
        let mut interp = Interpretation::new(self.field.clone(), self.objects()).with_cap(self.cap);
        for (p, m) in self.primitives() {
            interp.insert(p.name(), m.clone())?;
        }
        for (name, word) in SWAPS {
            let swap = LinearMap::reversal(&self.field, &interp, &Word::parse(word))?;
            interp.insert(name, swap)?;
        }
        Ok(interp)
    }

    /// Primitives, swaps and every derived generator. Cached.
    pub fn interpretation(&self) -> Result<&Interpretation<K>, ModelError> {
        self.cache
            .get_or_init(|| {
                let mut interp = self.base_interpretation()?;
                add_definitions(&mut interp, catalog::DERIVED)?;
                Ok(interp)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn evaluate(&self, d: &Diagram) -> Result<LinearMap<K>, ModelError> {
        Ok(self.interpretation()?.evaluate(d)?)
    }

    pub fn derive(&self) -> Result<DerivedGenerators<K>, ModelError> {
        let interp = self.interpretation()?;
        let get = |name: &str| interp.get(name).cloned().expect("derived generator present");
        Ok(DerivedGenerators {
            psi: get("psi"),
            phi_prime: get("phi_prime"),
            eta_m: get("eta_M"),
            epsilon_c_prime: get("epsilon_C_prime"),
            mu_m: get("mu_M"),
            delta_c_prime: get("delta_C_prime"),
            lambda_b: get("lambda_B"),
            lambda_f: get("lambda_F"),
            lambda_rad: get("lambda_rad"),
            lambda_left_b: get("lambda_left_B"),
            lambda_right_b: get("lambda_right_B"),
        })
    }

    /// The trivial value of a decoration, evaluated from its catalog form.
    pub fn trivial_form(&self, p: Primitive) -> Result<Option<LinearMap<K>>, ModelError> {
        let Some(def) = catalog::TRIVIAL_FORMS.iter().find(|d| d.name == p.name()) else {
            return Ok(None);
        };
        let interp = self.base_interpretation()?;
        let d = Diagram::from_layers(def.layers, MODEL_OBJECTS)?;
        Ok(Some(interp.evaluate(&d)?))
    }

    /// Compares each decoration with its trivial form.
    pub fn triviality_flags(&self) -> Result<Signature, ModelError> {
        let order = [
            Primitive::LeftAction,
            Primitive::RightAction,
            Primitive::Sigma,
            Primitive::RightCoaction,
            Primitive::LeftCoaction,
            Primitive::RhoPrime,
        ];
        let mut bits = [false; 6];
        for (bit, p) in bits.iter_mut().zip(order) {
            let trivial = self.trivial_form(p)?.expect("decoration has a trivial form");
            *bit = !equal(self.map(p), &trivial);
        }
        Ok(Signature::from_bits(bits))
    }

    /// Reads the four (co)actions off `psi` and `phi_prime`.
    pub fn extract_actions(&self, psi: &LinearMap<K>, phi_prime: &LinearMap<K>) -> Result<Actions<K>, ModelError> {
        let mut interp = self.base_interpretation()?;
        interp.insert("psi", psi.clone())?;
        interp.insert("phi_prime", phi_prime.clone())?;
        let mut got = evaluate_all(&interp, catalog::EXTRACTIONS)?.into_iter();
        let mut next = || got.next().expect("four extractions");
        Ok(Actions {
            left_action: next(),
            right_action: next(),
            right_coaction: next(),
            left_coaction: next(),
        })
    }

    /// Reads sigma and rho_prime off `mu_M` and `delta_C_prime`.
    pub fn recover_cocycles(
        &self,
        mu_m: &LinearMap<K>,
        delta_c_prime: &LinearMap<K>,
    ) -> Result<(LinearMap<K>, LinearMap<K>), ModelError> {
        let mut interp = self.base_interpretation()?;
        interp.insert("mu_M", mu_m.clone())?;
        interp.insert("delta_C_prime", delta_c_prime.clone())?;
        let mut got = evaluate_all(&interp, catalog::COCYCLE_EXTRACTIONS)?.into_iter();
        Ok((got.next().expect("sigma"), got.next().expect("rho_prime")))
    }

    /// Every generator together with a left-right mirrored partner named
    /// `<name>~`, so that mirrored diagrams can be evaluated.
    pub fn mirror_interpretation(&self) -> Result<Interpretation<K>, ModelError> {
        mirrored(self.interpretation()?)
    }

    /// SHA-256 over the field, the objects and every primitive entry.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.field.spec().to_string());
        for space in [&self.b, &self.f] {
            h.update([0]);
            h.update(&space.name);
            for label in &space.basis_labels {
                h.update([1]);
                h.update(label);
            }
        }
        for (p, m) in self.primitives() {
            h.update([2]);
            h.update(p.name());
            for e in m.entries() {
                h.update([3]);
                h.update(self.field.format(e));
            }
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Partner of a generator name under mirroring.
pub fn mirror_partner(name: &str) -> Option<String> {
    Some(match name.strip_suffix('~') {
        Some(base) => base.to_string(),
        None => format!("{name}~"),
    })
}

/// Adds `<name>~` for every generator of `interp`, conjugated by the wire
/// reversals of its boundary.
pub fn mirrored<K: Field>(interp: &Interpretation<K>) -> Result<Interpretation<K>, ModelError> {
    let field = interp.field().clone();
    let mut out = interp.clone();
    let names: Vec<String> = interp.generator_names().map(str::to_string).collect();
    for name in names {
        let m = interp.get(&name).expect("listed generator");
        let undo_dom = LinearMap::reversal(&field, interp, &m.dom().reversed())?;
        let redo_cod = LinearMap::reversal(&field, interp, m.cod())?;
        let partner = compose(&field, &compose(&field, &undo_dom, m)?, &redo_cod)?;
        out.insert(&format!("{name}~"), partner)?;
    }
    Ok(out)
}

fn check_boundary<K: Field>(objects: &[ObjectSpace], p: Primitive, m: &LinearMap<K>) -> Result<(), ModelError> {
    if *m.dom() != p.dom() || *m.cod() != p.cod() {
        return Err(ModelError::WrongBoundary {
            name: p.name(),
            expected_dom: p.dom(),
            expected_cod: p.cod(),
            dom: m.dom().clone(),
            cod: m.cod().clone(),
        });
    }
    let rows = objects.word_dim(m.cod())?;
    let cols = objects.word_dim(m.dom())?;
    if rows != m.rows() || cols != m.cols() {
        return Err(LinearError::Shape {
            rows: m.rows(),
            cols: m.cols(),
            expected_rows: rows,
            expected_cols: cols,
        }
        .into());
    }
    Ok(())
}

fn evaluate_all<K: Field>(interp: &Interpretation<K>, defs: &[Definition]) -> Result<Vec<LinearMap<K>>, ModelError> {
    defs.iter()
        .map(|def| {
            let d = Diagram::from_layers(def.layers, MODEL_OBJECTS)?;
            interp
                .evaluate(&d)
                .map_err(|source| ModelError::Derived { name: def.name, source })
        })
        .collect()
}

/// Evaluates each definition in turn and registers the result.
pub(crate) fn add_definitions<K: Field>(interp: &mut Interpretation<K>, defs: &[Definition]) -> Result<(), ModelError> {
    for def in defs {
        let d = Diagram::from_layers(def.layers, MODEL_OBJECTS)?;
        let m = interp
            .evaluate(&d)
            .map_err(|source| ModelError::Derived { name: def.name, source })?;
        interp.insert(def.name, m)?;
    }
    Ok(())
}

/// Unit, multiplication, counit and comultiplication of one object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bialgebra<K: Field> {
    pub space: ObjectSpace,
    pub mul: LinearMap<K>,
    pub unit: LinearMap<K>,
    pub comul: LinearMap<K>,
    pub counit: LinearMap<K>,
}

/// Assembles a model from two bialgebra-like objects, defaulting every
/// decoration to its trivial form and every tau to the symmetric flip.
#[derive(Debug, Clone)]
pub struct ModelBuilder<K: Field> {
    field: K,
    b: Bialgebra<K>,
    f: Bialgebra<K>,
    overrides: Vec<(Primitive, LinearMap<K>)>,
}

impl<K: Field> ModelBuilder<K> {
    /// `b` and `f` may carry any object names; they are relabelled.
    pub fn new(field: K, b: Bialgebra<K>, f: Bialgebra<K>) -> Self {
        Self {
            field,
            b: relabel(b, "B"),
            f: relabel(f, "F"),
            overrides: Vec::new(),
        }
    }

    pub fn set(mut self, p: Primitive, m: LinearMap<K>) -> Self {
        self.overrides.push((p, m));
        self
    }

    pub fn build(self) -> Result<HopfDatumModel<K>, ModelError> {
        let objects = vec![self.b.space.clone(), self.f.space.clone()];
        let mut maps: Vec<(Primitive, LinearMap<K>)> = vec![
            (Primitive::MulB, self.b.mul),
            (Primitive::UnitB, self.b.unit),
            (Primitive::ComulB, self.b.comul),
            (Primitive::CounitB, self.b.counit),
            (Primitive::MulF, self.f.mul),
            (Primitive::UnitF, self.f.unit),
            (Primitive::ComulF, self.f.comul),
            (Primitive::CounitF, self.f.counit),
        ];
        for p in [Primitive::TauBF, Primitive::TauFB, Primitive::TauBB, Primitive::TauFF] {
            maps.push((p, LinearMap::reversal(&self.field, &objects, &p.dom())?));
        }
        // Trivial forms only need the eight structure maps; placeholders
        // keep the constructor's completeness check happy.
        for p in Primitive::ALL.into_iter().filter(|p| p.is_decoration()) {
            let zero = LinearMap::from_entries(
                &objects,
                p.dom(),
                p.cod(),
                vec![self.field.zero(); objects.word_dim(&p.dom())? * objects.word_dim(&p.cod())?],
            )?;
            maps.push((p, zero));
        }
        let mut model = HopfDatumModel::new(self.field, self.b.space, self.f.space, maps)?;
        for p in Primitive::ALL.into_iter().filter(|p| p.is_decoration()) {
            let trivial = model.trivial_form(p)?.expect("decoration");
            model = model.with_map(p, trivial)?;
        }
        for (p, m) in self.overrides {
            model = model.with_map(p, m)?;
        }
        Ok(model)
    }
}

fn relabel<K: Field>(mut alg: Bialgebra<K>, name: &str) -> Bialgebra<K> {
    let old = alg.space.name.clone();
    let rename = |w: &Word| {
        Word(
            w.iter()
                .map(|n| if n == old { name.to_string() } else { n.to_string() })
                .collect(),
        )
    };
    for m in [&mut alg.mul, &mut alg.unit, &mut alg.comul, &mut alg.counit] {
        *m = m.retyped(rename(m.dom()), rename(m.cod()));
    }
    alg.space.name = name.to_string();
    alg
}
