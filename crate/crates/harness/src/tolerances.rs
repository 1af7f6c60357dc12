//! Tolerances and thresholds used by the verification suites.
//!
//! Exact gamma-algebra identities are checked at machine precision;
//! exponential-mediated identities allow for Padé/squaring rounding; fuzz
//! properties over random transformations allow further accumulation. The
//! drift thresholds split "preserved up to numerical noise" from "visibly
//! broken" by six orders of magnitude.

/// Exact algebraic identities among gamma-matrix constants (entries are
/// 0, ±1, ±i, ±1/2, so products are exact in f64).
pub const EXACT_ALGEBRA: f64 = 1e-15;

/// Identities mediated by one matrix exponential.
pub const EXP_IDENTITY: f64 = 1e-12;

/// Fuzzed kernel/representation identities over random Lorentz parameters.
pub const LORENTZ_FUZZ: f64 = 1e-10;

/// Relative agreement of invariant values under local transformations.
pub const INVARIANCE_REL: f64 = 1e-10;

/// Agreement between independent evaluation routes of the same invariant.
pub const ROUTE_AGREEMENT: f64 = 1e-13;

/// Catalog regression against documented magnitudes.
pub const CATALOG: f64 = 1e-12;

/// Invariant magnitudes on product states.
pub const PRODUCT_VANISH: f64 = 1e-14;

/// Extremal-value bounds on unit-normalized states.
pub const EXTREMAL_BOUND: f64 = 1e-9;

/// Magnitude drift allowed for preserved invariants over long evolutions.
pub const DRIFT_PRESERVED: f64 = 1e-9;

/// Magnitude drift a broken invariant must exhibit (existential check).
pub const DRIFT_BROKEN_MIN: f64 = 1e-3;

/// U(1) phase-law agreement for I₂ under constant scalar potentials.
pub const U1_PHASE: f64 = 1e-9;

/// Two-segment time-ordering identity.
pub const ORDERING: f64 = 1e-12;

/// Step-halving error ratio window for the order-2 midpoint stepper.
pub const RATIO_LOW: f64 = 3.5;
pub const RATIO_HIGH: f64 = 4.5;

/// Closed-form I₁ against direct evolution on a time grid.
pub const CLOSED_FORM: f64 = 1e-9;

/// Relative error of fitted oscillation periods.
pub const PERIOD_FIT_REL: f64 = 1e-4;

/// Foldy-Wouthuysen generator intertwining identities.
pub const FW_INTERTWINE: f64 = 1e-13;

/// FW-picture invariants against original-picture values.
pub const FW_IDENTITY: f64 = 1e-10;

/// H_FW(2) upper block against the Pauli Hamiltonian.
pub const FW_PAULI_BLOCK: f64 = 1e-12;

/// Weyl-sector reduction to the concurrence polynomial.
pub const WEYL_REDUCTION: f64 = 1e-12;

/// |I₃| ceiling on Weyl-projected states.
pub const WEYL_I3: f64 = 1e-14;

/// Hermiticity of built Hamiltonians.
pub const HAMILTONIAN_HERMITICITY: f64 = 1e-13;
