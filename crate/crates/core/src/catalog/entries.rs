//! The identity tables. Each row is `(id, lhs, rhs, note)` in layer syntax,
//! read top to bottom. `()` stands for the empty identity.

pub(super) type Row = (&'static str, &'static str, &'static str, &'static str);

pub(super) const BASE: &[Row] = &[
    (
        "base.mul-B-assoc",
        "B mul_B; mul_B",
        "mul_B B; mul_B",
        "associativity of the B multiplication",
    ),
    ("base.unit-B-left", "unit_B B; mul_B", "B", "left unit law for B"),
    ("base.unit-B-right", "B unit_B; mul_B", "B", "right unit law for B"),
    (
        "base.comul-F-coassoc",
        "comul_F; F comul_F",
        "comul_F; comul_F F",
        "coassociativity of the F comultiplication",
    ),
    (
        "base.counit-F-left",
        "comul_F; counit_F F",
        "F",
        "left counit law for F",
    ),
    (
        "base.counit-F-right",
        "comul_F; F counit_F",
        "F",
        "right counit law for F",
    ),
    (
        "base.counit-mul-B",
        "mul_B; counit_B",
        "counit_B counit_B",
        "counit of B is multiplicative",
    ),
    (
        "base.eta-eps-B",
        "unit_B; counit_B",
        "()",
        "unit followed by counit on B is the identity scalar",
    ),
    (
        "base.unit-comul-F",
        "unit_F; comul_F",
        "unit_F unit_F",
        "unit of F is group-like",
    ),
    (
        "base.eta-eps-F",
        "unit_F; counit_F",
        "()",
        "unit followed by counit on F is the identity scalar",
    ),
    (
        "base.unit-comul-B",
        "unit_B; comul_B",
        "unit_B unit_B",
        "unit of B is group-like",
    ),
    (
        "base.counit-mul-F",
        "mul_F; counit_F",
        "counit_F counit_F",
        "counit of F is multiplicative",
    ),
];

pub(super) const WREATH: &[Row] = &[
    (
        "wreath.psi-mul-B",
        "B psi; psi B; F mul_B",
        "mul_B F; psi",
        "psi respects the B multiplication",
    ),
    (
        "wreath.psi-unit-B",
        "unit_B F; psi",
        "F unit_B",
        "psi respects the B unit",
    ),
    (
        "wreath.phi-comul-F",
        "comul_F B; F phi_prime; phi_prime F",
        "phi_prime; B comul_F",
        "phi_prime respects the F comultiplication",
    ),
    (
        "wreath.phi-counit-F",
        "phi_prime; B counit_F",
        "counit_F B",
        "phi_prime respects the F counit",
    ),
    (
        "wreath.two-cell-mu-M",
        "psi F; F psi; mu_M B; F mul_B",
        "B mu_M; psi B; F mul_B",
        "mu_M is a 2-cell of the wreath",
    ),
    (
        "wreath.two-cell-eta-M",
        "eta_M B; F mul_B",
        "B eta_M; psi B; F mul_B",
        "eta_M is a 2-cell of the wreath",
    ),
    (
        "wreath.two-cell-delta-C",
        "comul_F B; F phi_prime; delta_C_prime F",
        "comul_F B; F delta_C_prime; phi_prime B; B phi_prime",
        "delta_C_prime is a 2-cell of the cowreath",
    ),
    (
        "wreath.two-cell-epsilon-C",
        "comul_F B; F phi_prime; epsilon_C_prime F",
        "comul_F B; F epsilon_C_prime",
        "epsilon_C_prime is a 2-cell of the cowreath",
    ),
    (
        "wreath.mu-M-assoc",
        "F mu_M; mu_M B; F mul_B",
        "mu_M F; F psi; mu_M B; F mul_B",
        "associativity of the wreath multiplication",
    ),
    (
        "wreath.eta-M-left",
        "eta_M F; F psi; mu_M B; F mul_B",
        "F unit_B",
        "left unit law of the wreath",
    ),
    (
        "wreath.eta-M-right",
        "F eta_M; mu_M B; F mul_B",
        "F unit_B",
        "right unit law of the wreath",
    ),
    (
        "wreath.delta-C-coassoc",
        "comul_F B; F delta_C_prime; phi_prime B; B delta_C_prime",
        "comul_F B; F delta_C_prime; delta_C_prime B",
        "coassociativity of the cowreath comultiplication",
    ),
    (
        "wreath.epsilon-C-right",
        "comul_F B; F delta_C_prime; phi_prime B; B epsilon_C_prime",
        "counit_F B",
        "right counit law of the cowreath",
    ),
    (
        "wreath.epsilon-C-left",
        "comul_F B; F delta_C_prime; epsilon_C_prime B",
        "counit_F B",
        "left counit law of the cowreath",
    ),
    (
        "wreath.trivial-phi-counit-B",
        "phi_prime; counit_B F",
        "F counit_B",
        "phi_prime against the B counit",
    ),
    (
        "wreath.trivial-psi-unit-B",
        "unit_B F; psi",
        "F unit_B",
        "psi against the B unit",
    ),
    (
        "wreath.trivial-psi-unit-F",
        "B unit_F; psi",
        "unit_F B",
        "psi against the F unit",
    ),
    (
        "wreath.trivial-phi-counit-F",
        "phi_prime; B counit_F",
        "counit_F B",
        "phi_prime against the F counit",
    ),
];

pub(super) const HOPF: &[Row] = &[
    (
        "hopf.mod-alg",
        "psi F; F left_action; mul_F",
        "B mul_F; left_action",
        "F is a B-module monad",
    ),
    (
        "hopf.mod-alg-unity",
        "B unit_F; left_action",
        "counit_B; unit_F",
        "the F unit is B-invariant",
    ),
    (
        "hopf.comod-coalg",
        "comul_B; right_coaction B; B phi_prime",
        "right_coaction; comul_B F",
        "B is an F-comodule comonad",
    ),
    (
        "hopf.comod-coalg-counity",
        "right_coaction; counit_B F",
        "counit_B; unit_F",
        "the B counit is F-coinvariant",
    ),
    (
        "hopf.weak-assoc",
        "F mul_F; mul_F",
        "mu_M F; F left_action; mul_F",
        "weak associativity of the F multiplication",
    ),
    (
        "hopf.weak-unity",
        "eta_M F; F left_action; mul_F",
        "F",
        "weak left unity of the F multiplication",
    ),
    (
        "hopf.pre-unit-right",
        "F unit_F; mul_F",
        "F",
        "right unity of the F multiplication",
    ),
    (
        "hopf.weak-coassoc",
        "comul_B; comul_B B",
        "comul_B; right_coaction B; B delta_C_prime",
        "weak coassociativity of the B comultiplication",
    ),
    (
        "hopf.weak-counity",
        "comul_B; right_coaction B; B epsilon_C_prime",
        "B",
        "weak right counity of the B comultiplication",
    ),
    (
        "hopf.pre-counit-left",
        "comul_B; counit_B B",
        "B",
        "left counity of the B comultiplication",
    ),
    (
        "hopf.F-mod-alg",
        "B psi; right_action B; mul_B",
        "mul_B F; right_action",
        "B is an F-module monad",
    ),
    (
        "hopf.F-mod-alg-unity",
        "unit_B F; right_action",
        "counit_F; unit_B",
        "the B unit is F-invariant",
    ),
    (
        "hopf.B-comod-coalg",
        "comul_F; F left_coaction; phi_prime F",
        "left_coaction; B comul_F",
        "F is a B-comodule comonad",
    ),
    (
        "hopf.B-comod-coalg-counity",
        "left_coaction; B counit_F",
        "counit_F; unit_B",
        "the F counit is B-coinvariant",
    ),
    (
        "hopf.twisted-action",
        "psi F; F psi; sigma B; mul_B",
        "B mu_M; right_action B; mul_B",
        "twisted action of F on B",
    ),
    (
        "hopf.twisted-action-unity",
        "eta_M B; counit_F mul_B",
        "B eta_M; right_action B; mul_B",
        "unity of the twisted action",
    ),
    (
        "hopf.twisted-coaction",
        "comul_F; F left_coaction; delta_C_prime F",
        "comul_F; F rho_prime; phi_prime B; B phi_prime",
        "twisted coaction of B on F",
    ),
    (
        "hopf.twisted-coaction-counity",
        "comul_F; F left_coaction; epsilon_C_prime F",
        "comul_F unit_B; F epsilon_C_prime",
        "counity of the twisted coaction",
    ),
    (
        "hopf.2-cocycle",
        "F mu_M; sigma B; mul_B",
        "mu_M F; F psi; sigma B; mul_B",
        "2-cocycle condition for sigma",
    ),
    (
        "hopf.normalized-2-cocycle",
        "eta_M F; F psi; sigma B; mul_B",
        "counit_F; unit_B",
        "sigma is normalized on the left",
    ),
    (
        "hopf.normalized-2-cocycle-right",
        "F eta_M; sigma B; mul_B",
        "counit_F; unit_B",
        "sigma is normalized on the right",
    ),
    (
        "hopf.2-cycle",
        "comul_F; F rho_prime; phi_prime B; B delta_C_prime",
        "comul_F; F rho_prime; delta_C_prime B",
        "2-cycle condition for rho_prime",
    ),
    (
        "hopf.normalized-2-cycle",
        "comul_F; F rho_prime; phi_prime B; B epsilon_C_prime",
        "counit_F; unit_B",
        "rho_prime is normalized on the right",
    ),
    (
        "hopf.normalized-2-cycle-right",
        "comul_F; F rho_prime; epsilon_C_prime B",
        "counit_F; unit_B",
        "rho_prime is normalized on the left",
    ),
    (
        "hopf.epsilon-to-sigma",
        "sigma; counit_B",
        "counit_F counit_F",
        "the B counit against sigma",
    ),
    (
        "hopf.unit-to-rho-prime",
        "unit_F; rho_prime",
        "unit_B unit_B",
        "the F unit against rho_prime",
    ),
    (
        "hopf.psi-counit-B",
        "psi; F counit_B",
        "left_action",
        "psi recovers the left action",
    ),
    (
        "hopf.psi-counit-F",
        "psi; counit_F B",
        "right_action",
        "psi recovers the right action",
    ),
    (
        "hopf.phi-unit-B",
        "F unit_B; phi_prime",
        "left_coaction",
        "phi_prime recovers the left coaction",
    ),
    (
        "hopf.phi-unit-F",
        "unit_F B; phi_prime",
        "right_coaction",
        "phi_prime recovers the right coaction",
    ),
    ("hopf.psi-unit-B", "unit_B F; psi", "F unit_B", "psi against the B unit"),
    (
        "hopf.phi-counit-F",
        "phi_prime; B counit_F",
        "counit_F B",
        "phi_prime against the F counit",
    ),
    (
        "hopf.left-action-counit",
        "left_action; counit_F",
        "counit_B counit_F",
        "the left action preserves the counit",
    ),
    (
        "hopf.right-coaction-unit",
        "unit_B; right_coaction",
        "unit_B unit_F",
        "the right coaction preserves the unit",
    ),
    (
        "hopf.right-action-counit",
        "right_action; counit_B",
        "counit_B counit_F",
        "the right action preserves the counit",
    ),
    (
        "hopf.left-coaction-unit",
        "unit_F; left_coaction",
        "unit_B unit_F",
        "the left coaction preserves the unit",
    ),
    (
        "hopf.left-module-assoc",
        "mul_B F; left_action",
        "B left_action; left_action",
        "F is a left B-module",
    ),
    (
        "hopf.left-module-unit",
        "unit_B F; left_action",
        "F",
        "unit law of the left B-module",
    ),
    (
        "hopf.right-comodule-coassoc",
        "right_coaction; right_coaction F",
        "right_coaction; B comul_F",
        "B is a right F-comodule",
    ),
    (
        "hopf.right-comodule-counit",
        "right_coaction; B counit_F",
        "B",
        "counit law of the right F-comodule",
    ),
    (
        "hopf.eq-1-3-third",
        "left_action; comul_F",
        "comul_B comul_F; right_coaction tau_BF F; B tau_FF left_action; left_action mul_F",
        "the left action against the F comultiplication",
    ),
    (
        "hopf.eq-4-6-third",
        "mul_B; right_coaction",
        "comul_B right_coaction; right_coaction tau_BB F; B tau_FB left_action; mul_B mul_F",
        "the B multiplication against the right coaction",
    ),
    (
        "hopf.proj-B-bialg",
        "mul_B; comul_B",
        "comul_B comul_B; B B right_coaction B; B tau_BB F B; B B right_action B; mul_B mul_B",
        "bialgebra-type identity on B",
    ),
    (
        "hopf.proj-F-bialg",
        "mul_F; comul_F",
        "comul_F comul_F; F left_coaction F F; F B tau_FF F; F left_action F F; mul_F mul_F",
        "bialgebra-type identity on F",
    ),
];

/// Biproduct identities whose right side is the bialgebra condition on `FB`
/// cut down by units on the input and counits on the output:
/// `(id, lhs, input, output, note)`.
pub(super) const BIPRODUCT_PROJECTIONS: &[(&str, &str, &str, &str, &str)] = &[
    (
        "hopf.eq-1-3-first",
        "psi; phi_prime",
        "unit_F B F unit_B",
        "counit_F B F counit_B",
        "psi followed by phi_prime",
    ),
    (
        "hopf.eq-1-3-second",
        "psi; delta_C_prime",
        "unit_F B F unit_B",
        "counit_F B counit_F B",
        "psi followed by delta_C_prime",
    ),
    (
        "hopf.eq-4-6-first",
        "mu_M; phi_prime",
        "F unit_B F unit_B",
        "counit_F B F counit_B",
        "mu_M followed by phi_prime",
    ),
    (
        "hopf.eq-4-6-second",
        "mu_M; delta_C_prime",
        "F unit_B F unit_B",
        "counit_F B counit_F B",
        "mu_M followed by delta_C_prime",
    ),
];

/// The bialgebra condition on `FB`, right side, at wire level over `FBFB`.
pub(super) const BIPRODUCT_BODY: &str = "comul_F B comul_F B; \
     comul_F delta_C_prime comul_F delta_C_prime; \
     F phi_prime B F phi_prime B; \
     F B F tau_BF B F B; \
     F B tau_FF tau_BB F B; \
     F B F tau_FB B F B; \
     F psi B F psi B; \
     mu_M mul_B mu_M mul_B; \
     F mul_B F mul_B";

pub(super) const PAIRED: &[Row] = &[
    (
        "hopf.proj-B",
        "comul_B B; B lambda_B",
        "comul_B comul_B; right_coaction B right_coaction B; B F tau_BB F B; B tau_FB psi B; B B sigma B B; B B mul_B B; B B mul_B",
        "lambda_B through the cocycle",
    ),
    (
        "hopf.proj-F",
        "lambda_F F; F mul_F",
        "comul_F F F; F comul_F F F; F F rho_prime F F; F phi_prime tau_BF F; F B tau_FF left_action; F left_action mul_F; mul_F F",
        "lambda_F through the cycle",
    ),
    ("hopf.mu-M-paired", "mu_M", "F comul_F; lambda_F F; F sigma", "mu_M in terms of lambda_F"),
    ("hopf.delta-C-paired", "delta_C_prime", "rho_prime B; B lambda_B; mul_B B", "delta_C_prime in terms of lambda_B"),
    ("hopf.psi-unital-counit", "psi; counit_F counit_B", "counit_B counit_F", "psi preserves the joint counit"),
    ("hopf.phi-unital-unit", "unit_F unit_B; phi_prime", "unit_B unit_F", "phi_prime preserves the joint unit"),
];

pub(super) const YBE: &[Row] = &[
    (
        "ybe.fbf",
        "F tau_BF; tau_FF B; F tau_FB",
        "tau_FB F; B tau_FF; tau_BF F",
        "braid relation on F B F",
    ),
    (
        "ybe.bfb",
        "tau_BF B; F tau_BB; tau_FB B",
        "B tau_FB; tau_BB F; B tau_BF",
        "braid relation on B F B",
    ),
    (
        "ybe.bff",
        "B tau_FF; tau_BF F; F tau_BF",
        "tau_BF F; F tau_BF; tau_FF B",
        "braid relation on B F F",
    ),
    (
        "ybe.fbb",
        "tau_FB B; B tau_FB; tau_BB F",
        "F tau_BB; tau_FB B; B tau_FB",
        "braid relation on F B B",
    ),
    (
        "ybe.bb",
        "B tau_BB; tau_BB B; B tau_BB",
        "tau_BB B; B tau_BB; tau_BB B",
        "braid relation on B B B",
    ),
    (
        "ybe.ff",
        "tau_FF F; F tau_FF; tau_FF F",
        "F tau_FF; tau_FF F; F tau_FF",
        "braid relation on F F F",
    ),
];

pub(super) const NATURALITY: &[Row] = &[
    (
        "nat.rm",
        "right_action F; tau_BF",
        "B tau_FF; tau_BF F; F right_action",
        "tau_BF is natural in the right action",
    ),
    (
        "nat.rm-BB",
        "right_action B; tau_BB",
        "B tau_FB; tau_BB F; B right_action",
        "tau_BB is natural in the right action",
    ),
    (
        "nat.lm",
        "B left_action; tau_BF",
        "tau_BB F; B tau_BF; left_action B",
        "tau_BF is natural in the left action",
    ),
    (
        "nat.lm-FF",
        "F left_action; tau_FF",
        "tau_FB F; B tau_FF; left_action F",
        "tau_FF is natural in the left action",
    ),
    (
        "nat.sigma",
        "F tau_FF; tau_FF F; F sigma",
        "sigma F; tau_BF",
        "tau_FF is natural in sigma",
    ),
    (
        "nat.sigma-BB",
        "F tau_FB; tau_FB F; B sigma",
        "sigma B; tau_BB",
        "tau_FB is natural in sigma",
    ),
    (
        "nat.lcm",
        "tau_FB; B left_coaction",
        "left_coaction B; B tau_FB; tau_BB F",
        "tau_FB is natural in the left coaction",
    ),
    (
        "nat.lcm-FF",
        "tau_FF; F left_coaction",
        "left_coaction F; B tau_FF; tau_BF F",
        "tau_FF is natural in the left coaction",
    ),
    (
        "nat.rcm",
        "tau_FB; right_coaction F",
        "F right_coaction; tau_FB F; B tau_FF",
        "tau_FB is natural in the right coaction",
    ),
    (
        "nat.rcm-BB",
        "tau_BB; right_coaction B",
        "B right_coaction; tau_BB F; B tau_BF",
        "tau_BB is natural in the right coaction",
    ),
    (
        "nat.rho",
        "rho_prime B; B tau_BB; tau_BB B",
        "tau_FB; B rho_prime",
        "tau_FB is natural in rho_prime",
    ),
    (
        "nat.rho-FF",
        "rho_prime F; B tau_BF; tau_BF B",
        "tau_FF; F rho_prime",
        "tau_BF is natural in rho_prime",
    ),
];

pub(super) const FB_BIMONAD: &[Row] = &[
    (
        "fb.assoc",
        "FB nabla; nabla",
        "nabla FB; nabla",
        "associativity of the FB multiplication",
    ),
    ("fb.unit-left", "eta FB; nabla", "FB", "left unit law for FB"),
    ("fb.unit-right", "FB eta; nabla", "FB", "right unit law for FB"),
    (
        "fb.coassoc",
        "delta; FB delta",
        "delta; delta FB",
        "coassociativity of the FB comultiplication",
    ),
    ("fb.counit-left", "delta; epsilon FB", "FB", "left counit law for FB"),
    ("fb.counit-right", "delta; FB epsilon", "FB", "right counit law for FB"),
    (
        "fb.counit-mul",
        "nabla; epsilon",
        "epsilon epsilon",
        "the FB counit is multiplicative",
    ),
    ("fb.unit-comul", "eta; delta", "eta eta", "the FB unit is group-like"),
    (
        "fb.unit-counit",
        "eta; epsilon",
        "()",
        "unit followed by counit on FB is the identity scalar",
    ),
    (
        "fb.bimonad",
        "nabla; delta",
        "delta delta; FB tau_FBFB FB; nabla nabla",
        "multiplication against comultiplication on FB",
    ),
];

pub(super) const LAMBDA: &[Row] = &[
    (
        "lambda.F-left-monadic",
        "F lambda_F; lambda_F F; F mul_F",
        "mul_F F; lambda_F",
        "lambda_F is a left monadic distributive law",
    ),
    (
        "lambda.F-left-monadic-unit",
        "unit_F F; lambda_F",
        "F unit_F",
        "lambda_F against the F unit",
    ),
    (
        "lambda.F-left-comonadic",
        "F comul_F; lambda_F F; F lambda_F",
        "lambda_F; comul_F F",
        "lambda_F is a left comonadic distributive law",
    ),
    (
        "lambda.F-left-comonadic-counit",
        "lambda_F; counit_F F",
        "F counit_F",
        "lambda_F against the F counit",
    ),
    (
        "lambda.B-right-monadic",
        "lambda_B B; B lambda_B; mul_B B",
        "B mul_B; lambda_B",
        "lambda_B is a right monadic distributive law",
    ),
    (
        "lambda.B-right-monadic-unit",
        "B unit_B; lambda_B",
        "unit_B B",
        "lambda_B against the B unit",
    ),
    (
        "lambda.B-right-comonadic",
        "comul_B B; B lambda_B; lambda_B B",
        "lambda_B; B comul_B",
        "lambda_B is a right comonadic distributive law",
    ),
    (
        "lambda.B-right-comonadic-counit",
        "lambda_B; B counit_B",
        "counit_B B",
        "lambda_B against the B counit",
    ),
    (
        "lambda.F-equals-rad",
        "lambda_F",
        "lambda_rad",
        "lambda_F agrees with the symmetric form",
    ),
    (
        "lambda.rad-left-monadic",
        "F lambda_rad; lambda_rad F; F mul_F",
        "mul_F F; lambda_rad",
        "the symmetric form is a left monadic distributive law",
    ),
    (
        "lambda.rad-left-monadic-unit",
        "unit_F F; lambda_rad",
        "F unit_F",
        "the symmetric form against the F unit",
    ),
    (
        "lambda.rad-left-comonadic",
        "F comul_F; lambda_rad F; F lambda_rad",
        "lambda_rad; comul_F F",
        "the symmetric form is a left comonadic distributive law",
    ),
    (
        "lambda.rad-left-comonadic-counit",
        "lambda_rad; counit_F F",
        "F counit_F",
        "the symmetric form against the F counit",
    ),
    (
        "lambda.B-counit-left",
        "lambda_B; counit_B B",
        "mul_B",
        "lambda_B recovers the B multiplication",
    ),
    (
        "lambda.B-unit-left",
        "unit_B B; lambda_B",
        "comul_B",
        "lambda_B recovers the B comultiplication",
    ),
    (
        "lambda.F-counit-right",
        "lambda_F; F counit_F",
        "mul_F",
        "lambda_F recovers the F multiplication",
    ),
    (
        "lambda.F-unit-right",
        "F unit_F; lambda_F",
        "comul_F",
        "lambda_F recovers the F comultiplication",
    ),
    (
        "lambda.B-left-bimonad",
        "mul_B; comul_B",
        "B comul_B; lambda_left_B B; B mul_B",
        "B is a left bimonad through tau_BB",
    ),
    (
        "lambda.B-right-bimonad",
        "mul_B; comul_B",
        "comul_B B; B lambda_right_B; mul_B B",
        "B is a right bimonad through tau_BB",
    ),
];

/// Pairs of identities exchanged by the left-right symmetry that swaps the
/// roles of `B` and `F`; each side keeps its verdict when both cocycles are
/// trivial.
pub const ALPHA_PARTNERS: &[(&str, &str)] = &[
    ("hopf.mod-alg", "hopf.F-mod-alg"),
    ("hopf.mod-alg-unity", "hopf.F-mod-alg-unity"),
    ("hopf.comod-coalg", "hopf.B-comod-coalg"),
    ("hopf.comod-coalg-counity", "hopf.B-comod-coalg-counity"),
    ("hopf.twisted-action", "hopf.left-module-assoc"),
    ("hopf.twisted-action-unity", "hopf.left-module-unit"),
    ("hopf.twisted-coaction", "hopf.right-comodule-coassoc"),
    ("hopf.twisted-coaction-counity", "hopf.right-comodule-counit"),
    ("hopf.weak-assoc", "base.mul-B-assoc"),
    ("hopf.weak-unity", "base.unit-B-left"),
    ("hopf.weak-coassoc", "base.comul-F-coassoc"),
    ("hopf.weak-counity", "base.counit-F-right"),
    ("hopf.eq-1-3-second", "hopf.eq-1-3-third"),
    ("hopf.eq-4-6-first", "hopf.eq-4-6-third"),
    ("hopf.proj-B-bialg", "hopf.proj-F-bialg"),
    ("hopf.eq-1-3-first", "hopf.eq-1-3-first"),
];

/// Identities that hold for free once sigma and rho_prime are trivial.
pub const COLLAPSE_SET: &[&str] = &[
    "hopf.2-cocycle",
    "hopf.normalized-2-cocycle",
    "hopf.2-cycle",
    "hopf.normalized-2-cycle",
    "hopf.eq-4-6-second",
];

/// Informational dependencies, `(id, hypotheses)`.
pub(super) const HYPOTHESES: &[(&str, &[&str])] = &[
    ("hopf.epsilon-to-sigma", &["base.counit-mul-B"]),
    ("hopf.unit-to-rho-prime", &["base.unit-comul-F"]),
    ("wreath.mu-M-assoc", &["wreath.psi-mul-B", "wreath.two-cell-mu-M"]),
    ("wreath.eta-M-left", &["wreath.psi-unit-B", "wreath.two-cell-eta-M"]),
    (
        "wreath.delta-C-coassoc",
        &["wreath.phi-comul-F", "wreath.two-cell-delta-C"],
    ),
    (
        "wreath.epsilon-C-right",
        &["wreath.phi-counit-F", "wreath.two-cell-epsilon-C"],
    ),
    ("hopf.mu-M-paired", &["hopf.proj-F"]),
    ("hopf.delta-C-paired", &["hopf.proj-B"]),
    ("lambda.F-equals-rad", &["nat.lm-FF", "nat.lcm-FF", "ybe.ff"]),
    (
        "fb.bimonad",
        &[
            "hopf.eq-1-3-first",
            "hopf.eq-1-3-second",
            "hopf.eq-4-6-first",
            "hopf.eq-4-6-second",
        ],
    ),
];
