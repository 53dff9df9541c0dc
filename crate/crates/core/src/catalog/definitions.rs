//! Diagrams that define generators in terms of others.
//!
//! Every derived matrix in the engine is the evaluation of one of these
//! layer strings; nothing is hand-expanded into structure constants.

/// A named generator given by a layer diagram over `B` and `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Definition {
    pub name: &'static str,
    pub layers: &'static str,
}

const fn def(name: &'static str, layers: &'static str) -> Definition {
    Definition { name, layers }
}

/// Derived generators, in dependency order.
pub const DERIVED: &[Definition] = &[
    def("psi", "comul_B comul_F; B tau_BF F; left_action right_action"),
    def("phi_prime", "left_coaction right_coaction; B tau_FB F; mul_B mul_F"),
    def("eta_M", "unit_F unit_B"),
    def("epsilon_C_prime", "counit_F counit_B"),
    def(
        "mu_M",
        "comul_F comul_F; F left_coaction F F; F B tau_FF F; F left_action F F; mul_F sigma",
    ),
    def(
        "delta_C_prime",
        "rho_prime comul_B; B B right_coaction B; B tau_BB F B; B B right_action B; mul_B mul_B",
    ),
    def(
        "lambda_B",
        "B comul_B; B right_coaction B; tau_BB F B; B right_action B; B mul_B",
    ),
    def(
        "lambda_F",
        "comul_F F; F left_coaction F; F B tau_FF; F left_action F; mul_F F",
    ),
    // Same shape as lambda_F, but crossing through the ambient symmetry
    // instead of the stored tau_FF.
    def(
        "lambda_rad",
        "comul_F F; F left_coaction F; F B swap_FF; F left_action F; mul_F F",
    ),
    def("lambda_left_B", "comul_B B; B tau_BB; mul_B B"),
    def("lambda_right_B", "B comul_B; tau_BB B; B mul_B"),
];

/// The trivial value of each decoration, used both as a default when
/// building models and as the reference for triviality flags.
pub const TRIVIAL_FORMS: &[Definition] = &[
    def("left_action", "counit_B F"),
    def("right_action", "B counit_F"),
    def("sigma", "counit_F counit_F; unit_B"),
    def("right_coaction", "B unit_F"),
    def("left_coaction", "unit_B F"),
    def("rho_prime", "counit_F; unit_B unit_B"),
];

/// The four (co)actions recovered from `psi` and `phi_prime`.
pub const EXTRACTIONS: &[Definition] = &[
    def("left_action", "psi; F counit_B"),
    def("right_action", "psi; counit_F B"),
    def("right_coaction", "unit_F B; phi_prime"),
    def("left_coaction", "F unit_B; phi_prime"),
];

/// The cocycle and cycle recovered from `mu_M` and `delta_C_prime`.
pub const COCYCLE_EXTRACTIONS: &[Definition] = &[
    def("sigma", "mu_M; counit_F B"),
    def("rho_prime", "F unit_B; delta_C_prime"),
];

/// Structure of the composite `FB`, written at wire level over `B` and `F`.
pub const PRODUCT: &[Definition] = &[
    def("nabla", "F psi B; mu_M mul_B; F mul_B"),
    def("eta", "eta_M"),
    def("delta", "comul_F B; comul_F delta_C_prime; F phi_prime B"),
    def("epsilon", "epsilon_C_prime"),
    def("tau_FBFB", "F tau_BF B; tau_FF tau_BB; F tau_FB B"),
];

/// Looks up a derived or product definition by name.
pub fn definition(name: &str) -> Option<&'static Definition> {
    DERIVED.iter().chain(PRODUCT).find(|d| d.name == name)
}
