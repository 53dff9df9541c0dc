//! The composite `FB` with its product and coproduct.

use crate::catalog::{self, Suite, MODEL_OBJECTS, PRODUCT_OBJECT};
use crate::check::{check_axiom, SuiteReport};
use crate::diagram::Diagram;
use crate::eval::Interpretation;
use crate::field::Field;
use crate::linear::{LinearMap, ObjectSpace, Word};
use crate::model::{Bialgebra, HopfDatumModel, ModelBuilder, ModelError, Primitive};

/// Structure maps on the single object `FB`, whose basis is the pairs
/// `(f, b)` with the `F` index most significant.
#[derive(Debug, Clone)]
pub struct ProductStructure<K: Field> {
    pub space: ObjectSpace,
    pub nabla: LinearMap<K>,
    pub eta: LinearMap<K>,
    pub delta: LinearMap<K>,
    pub epsilon: LinearMap<K>,
    pub tau_fbfb: LinearMap<K>,
    interp: Interpretation<K>,
}

impl<K: Field> ProductStructure<K> {
    /// Interpretation over the object `FB` holding the five maps.
    pub fn interpretation(&self) -> &Interpretation<K> {
        &self.interp
    }

    /// `FB` as a plain model: `F` carries the product structure, `B` is the
    /// one-dimensional unit object and every decoration is trivial.
    pub fn to_model(&self) -> Result<HopfDatumModel<K>, ModelError> {
        let field = self.interp.field().clone();
        let unit_space = ObjectSpace::new("B", &["1"])?;
        let objects = vec![unit_space.clone()];
        let one =
            |dom: &str, cod: &str| LinearMap::from_ints(&field, &objects, Word::parse(dom), Word::parse(cod), &[1]);
        let b = Bialgebra {
            space: unit_space.clone(),
            mul: one("B B", "B")?,
            unit: one("", "B")?,
            comul: one("B", "B B")?,
            counit: one("B", "")?,
        };
        let rename = |m: &LinearMap<K>| {
            let w = |x: &Word| Word(x.iter().map(|_| "F".to_string()).collect());
            m.retyped(w(m.dom()), w(m.cod()))
        };
        let mut space = self.space.clone();
        space.name = "F".to_string();
        let f = Bialgebra {
            space,
            mul: rename(&self.nabla),
            unit: rename(&self.eta),
            comul: rename(&self.delta),
            counit: rename(&self.epsilon),
        };
        ModelBuilder::new(field, b, f)
            .set(Primitive::TauFF, rename(&self.tau_fbfb))
            .build()
    }
}

/// Evaluates the product diagrams on `model` and packs the pair basis into
/// one object.
pub fn build_product<K: Field>(model: &HopfDatumModel<K>) -> Result<ProductStructure<K>, ModelError> {
    let interp = model.interpretation()?;
    let labels = model
        .f()
        .basis_labels
        .iter()
        .flat_map(|f| model.b().basis_labels.iter().map(move |b| format!("{f}.{b}")))
        .collect();
    let space = ObjectSpace::from_labels(PRODUCT_OBJECT, labels)?;
    let fb = |n: usize| Word(vec![PRODUCT_OBJECT.to_string(); n]);
    let mut maps = Vec::new();
    for def in catalog::PRODUCT {
        let d = Diagram::from_layers(def.layers, MODEL_OBJECTS)?;
        let m = interp
            .evaluate(&d)
            .map_err(|source| ModelError::Derived { name: def.name, source })?;
        let m = m.retyped(fb(m.dom().len() / 2), fb(m.cod().len() / 2));
        maps.push(m);
    }
    let mut product = Interpretation::new(model.field().clone(), vec![space.clone()]).with_cap(model.cap());
    for (def, m) in catalog::PRODUCT.iter().zip(&maps) {
        product.insert(def.name, m.clone())?;
    }
    let mut it = maps.into_iter();
    let mut next = || it.next().expect("five product maps");
    Ok(ProductStructure {
        space,
        nabla: next(),
        eta: next(),
        delta: next(),
        epsilon: next(),
        tau_fbfb: next(),
        interp: product,
    })
}

/// Runs the product suite on a built composite.
pub fn check_tau_bimonad<K: Field>(p: &ProductStructure<K>) -> SuiteReport {
    let results = catalog::suite_axioms(Suite::TauBimonadFb)
        .map(|a| check_axiom(a, p.interpretation()))
        .collect();
    SuiteReport::from_results(Suite::TauBimonadFb, results)
}
