//! Fixtures shared by the benchmarks.

use wreathforge_core::{library, HopfDatumModel, PrimeField, Rationals};

pub fn f7() -> PrimeField {
    PrimeField::new(7).expect("7 is prime")
}

/// The dimension-4 model used for the performance envelope.
pub fn smash_c4() -> HopfDatumModel<PrimeField> {
    library::smash_product_c4(f7()).expect("library model")
}

pub fn radford() -> HopfDatumModel<Rationals> {
    library::radford_h4(Rationals).expect("library model")
}
