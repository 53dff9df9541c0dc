//! Exact verification engine for finite-dimensional Hopf data, wreaths and
//! tau-bimonads, with identities stored as string diagrams.

pub mod catalog;
pub mod check;
pub mod classify;
pub mod diagram;
pub mod eval;
pub mod field;
pub mod library;
pub mod linear;
pub mod model;
pub mod model_file;
pub mod product;
pub mod sexpr;

pub use catalog::{Axiom, CatalogError, Suite};
pub use check::{CheckResult, Counterexample, Report, SuiteReport, Verdict};
pub use classify::{classify, ClassificationReport, NamedExample};
pub use diagram::{Diagram, DiagramError, GeneratorSignature, SignatureTable, Signatures};
pub use eval::{EvalError, Interpretation, Mismatch, DEFAULT_DIMENSION_CAP};
pub use field::{Field, FieldError, FieldSpec, PrimeField, Rationals, ScalarError};
pub use library::LibraryError;
pub use linear::{compose, equal, juxtapose, LinearError, LinearMap, ObjectSpace, ObjectTable, Word};
pub use model::{HopfDatumModel, ModelError, Primitive, Signature};
pub use model_file::{AnyModel, SchemaError};
pub use product::{build_product, check_tau_bimonad, ProductStructure};
