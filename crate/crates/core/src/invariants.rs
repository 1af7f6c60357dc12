//! The five candidate entanglement invariants of a two-spinor state, in
//! coefficient-expansion, trace, and determinant forms.
//!
//! The coefficient expansions are the normative definitions here; the trace
//! forms ½Tr[ΨᵀXΨY] with X, Y built from C and Cγ⁵, the block-determinant
//! form of I₁ and the LU determinant behind I₃ are kept as independent
//! cross-checks (they guard against kernel-placement sign errors between
//! Alice's and Bob's kernels). All five polynomials vanish identically on
//! product states; the degree-2 family is invariant under local spinor
//! representations of proper orthochronous Lorentz transformations, and
//! I₃ = det Ψ under any local SL(4, C) pair.

use num_complex::Complex64 as C64;

use crate::algebra::{c_gamma5, conjugation_c};
use crate::cmat::CMat4;
use crate::error::Result;
use crate::states::{weyl_hand, Side, TwoSpinorState};

/// Values of the five invariants. Degree-2 entries scale as c² and `i3` as
/// c⁴ under Ψ → cΨ; complex values (with phase) are returned because U(1)
/// phase evolution is part of what gets tested downstream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantRecord {
    pub i1: C64,
    pub i2: C64,
    pub i2a: C64,
    pub i2b: C64,
    pub i3: C64,
}

/// Extremal magnitudes on unit-normalized states: ½ for the degree-2
/// invariants, 1/16 for I₃. Checked as a sanity bound, never clamped.
pub const MAX_DEGREE2: f64 = 0.5;
pub const MAX_I3: f64 = 0.0625;

/// I₁ = ψ₀₀ψ₁₁ - ψ₀₁ψ₁₀ + ψ₀₂ψ₁₃ - ψ₀₃ψ₁₂ + ψ₂₀ψ₃₁ - ψ₂₁ψ₃₀ + ψ₂₂ψ₃₃ - ψ₂₃ψ₃₂.
///
/// Equals ½Tr[ΨᵀCΨC] and the sum of the determinants of the four 2×2 blocks
/// of Ψ. Parity-even in both labs; its magnitude is preserved by evolutions
/// generated by zero-mass Dirac Hamiltonians on either side.
pub fn i1(state: &TwoSpinorState) -> C64 {
    let p = |j, k| state.coeff(j, k);
    p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0) + p(0, 2) * p(1, 3) - p(0, 3) * p(1, 2)
        + p(2, 0) * p(3, 1)
        - p(2, 1) * p(3, 0)
        + p(2, 2) * p(3, 3)
        - p(2, 3) * p(3, 2)
}

/// I₂ = ψ₁₃ψ₂₀ - ψ₁₀ψ₂₃ + ψ₁₁ψ₂₂ - ψ₁₂ψ₂₁ + ψ₀₂ψ₃₁ - ψ₀₁ψ₃₂ + ψ₀₀ψ₃₃ - ψ₀₃ψ₃₀.
///
/// Equals ½Tr[ΨᵀCγ⁵ΨCγ⁵]. Flips sign under parity in either lab; its
/// magnitude survives arbitrary-mass Dirac evolution on both sides.
pub fn i2(state: &TwoSpinorState) -> C64 {
    let p = |j, k| state.coeff(j, k);
    p(1, 3) * p(2, 0) - p(1, 0) * p(2, 3) + p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)
        + p(0, 2) * p(3, 1)
        - p(0, 1) * p(3, 2)
        + p(0, 0) * p(3, 3)
        - p(0, 3) * p(3, 0)
}

/// I₂A = ψ₀₀ψ₁₃ - ψ₀₃ψ₁₀ + ψ₀₂ψ₁₁ - ψ₀₁ψ₁₂ + ψ₂₂ψ₃₁ - ψ₂₁ψ₃₂ + ψ₂₀ψ₃₃ - ψ₂₃ψ₃₀.
///
/// Equals ½Tr[ΨᵀCΨCγ⁵]. Parity-even in Alice's lab only; needs zero mass on
/// Alice's side but tolerates arbitrary mass on Bob's.
pub fn i2a(state: &TwoSpinorState) -> C64 {
    let p = |j, k| state.coeff(j, k);
    p(0, 0) * p(1, 3) - p(0, 3) * p(1, 0) + p(0, 2) * p(1, 1) - p(0, 1) * p(1, 2)
        + p(2, 2) * p(3, 1)
        - p(2, 1) * p(3, 2)
        + p(2, 0) * p(3, 3)
        - p(2, 3) * p(3, 0)
}

/// I₂B = ψ₁₁ψ₂₀ - ψ₁₀ψ₂₁ + ψ₁₃ψ₂₂ - ψ₁₂ψ₂₃ + ψ₀₀ψ₃₁ - ψ₀₁ψ₃₀ + ψ₀₂ψ₃₃ - ψ₀₃ψ₃₂.
///
/// Equals ½Tr[ΨᵀCγ⁵ΨC]; the mirror image of I₂A with the labs swapped.
pub fn i2b(state: &TwoSpinorState) -> C64 {
    let p = |j, k| state.coeff(j, k);
    p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1) + p(1, 3) * p(2, 2) - p(1, 2) * p(2, 3)
        + p(0, 0) * p(3, 1)
        - p(0, 1) * p(3, 0)
        + p(0, 2) * p(3, 3)
        - p(0, 3) * p(3, 2)
}

/// I₃ = det Ψ, written out as the cofactor expansion along the first row
/// (grouped by ψ₀₁, ψ₀₀, ψ₀₃, ψ₀₂). Invariant under any local SL(4, C)
/// pair, and in magnitude under any local unitary evolution.
pub fn i3(state: &TwoSpinorState) -> C64 {
    let p = |j, k| state.coeff(j, k);
    p(0, 1)
        * (p(3, 0) * (p(1, 3) * p(2, 2) - p(1, 2) * p(2, 3))
            + p(3, 2) * (p(1, 0) * p(2, 3) - p(1, 3) * p(2, 0))
            + p(3, 3) * (p(1, 2) * p(2, 0) - p(1, 0) * p(2, 2)))
        + p(0, 0)
            * (p(3, 1) * (p(1, 2) * p(2, 3) - p(1, 3) * p(2, 2))
                + p(3, 2) * (p(1, 3) * p(2, 1) - p(1, 1) * p(2, 3))
                + p(3, 3) * (p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)))
        + p(0, 3)
            * (p(3, 0) * (p(1, 2) * p(2, 1) - p(1, 1) * p(2, 2))
                + p(3, 1) * (p(1, 0) * p(2, 2) - p(1, 2) * p(2, 0))
                + p(3, 2) * (p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1)))
        + p(0, 2)
            * (p(3, 0) * (p(1, 1) * p(2, 3) - p(1, 3) * p(2, 1))
                + p(3, 1) * (p(1, 3) * p(2, 0) - p(1, 0) * p(2, 3))
                + p(3, 3) * (p(1, 0) * p(2, 1) - p(1, 1) * p(2, 0)))
}

/// All five invariants of a state.
pub fn all_invariants(state: &TwoSpinorState) -> InvariantRecord {
    let rec = InvariantRecord {
        i1: i1(state),
        i2: i2(state),
        i2a: i2a(state),
        i2b: i2b(state),
        i3: i3(state),
    };
    debug_assert!(
        {
            let n = state.norm();
            (n - 1.0).abs() > 1e-12
                || (rec.i1.norm() <= MAX_DEGREE2 + 1e-9
                    && rec.i2.norm() <= MAX_DEGREE2 + 1e-9
                    && rec.i2a.norm() <= MAX_DEGREE2 + 1e-9
                    && rec.i2b.norm() <= MAX_DEGREE2 + 1e-9
                    && rec.i3.norm() <= MAX_I3 + 1e-9)
        },
        "extremal-value bound violated on a unit-norm state: {rec:?}"
    );
    rec
}

/// ½Tr[Ψᵀ X Ψ Y] with X acting on Alice's index and Y on Bob's.
fn half_trace_form(state: &TwoSpinorState, x: &CMat4, y: &CMat4) -> C64 {
    let psi = state.coeffs();
    (psi.transpose() * *x * *psi * *y).trace() * C64::new(0.5, 0.0)
}

/// Trace form ½Tr[ΨᵀCΨC] of I₁.
pub fn i1_trace(state: &TwoSpinorState) -> C64 {
    let c = conjugation_c();
    half_trace_form(state, &c, &c)
}

/// Trace form ½Tr[ΨᵀCγ⁵ΨCγ⁵] of I₂.
pub fn i2_trace(state: &TwoSpinorState) -> C64 {
    let cg5 = c_gamma5();
    half_trace_form(state, &cg5, &cg5)
}

/// Trace form ½Tr[ΨᵀCΨCγ⁵] of I₂A.
pub fn i2a_trace(state: &TwoSpinorState) -> C64 {
    half_trace_form(state, &conjugation_c(), &c_gamma5())
}

/// Trace form ½Tr[ΨᵀCγ⁵ΨC] of I₂B.
pub fn i2b_trace(state: &TwoSpinorState) -> C64 {
    half_trace_form(state, &c_gamma5(), &conjugation_c())
}

/// Determinants of the four 2×2 blocks of Ψ, in the order upper-left,
/// upper-right, lower-left, lower-right. Their sum is I₁; under pure mass
/// evolution each picks up its own phase, which is the closed-form route to
/// the I₁ oscillation.
pub fn block_determinants(state: &TwoSpinorState) -> [C64; 4] {
    let p = |j, k| state.coeff(j, k);
    let block = |r: usize, c: usize| p(r, c) * p(r + 1, c + 1) - p(r, c + 1) * p(r + 1, c);
    [block(0, 0), block(0, 2), block(2, 0), block(2, 2)]
}

/// Block-determinant form of I₁.
pub fn i1_blocks(state: &TwoSpinorState) -> C64 {
    block_determinants(state).into_iter().sum()
}

/// Plain LU determinant of the coefficient matrix; third route to I₃.
pub fn i3_det(state: &TwoSpinorState) -> C64 {
    state.coeffs().det()
}

/// Trace form -¼Tr[(ΨᵀCΨC)²] + ½I₁² of I₃.
pub fn i3_trace_c(state: &TwoSpinorState) -> C64 {
    let c = conjugation_c();
    let m = state.coeffs().transpose() * c * *state.coeffs() * c;
    let v1 = i1(state);
    (m * m).trace() * C64::new(-0.25, 0.0) + v1 * v1 * C64::new(0.5, 0.0)
}

/// Trace form -¼Tr[(ΨᵀCγ⁵ΨCγ⁵)²] + ½I₂² of I₃.
pub fn i3_trace_cg5(state: &TwoSpinorState) -> C64 {
    let k = c_gamma5();
    let m = state.coeffs().transpose() * k * *state.coeffs() * k;
    let v2 = i2(state);
    (m * m).trace() * C64::new(-0.25, 0.0) + v2 * v2 * C64::new(0.5, 0.0)
}

/// Parity behavior of a degree-4 product under single-lab inversions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    /// Invariant under P in both labs.
    BothLabs,
    /// Invariant under P in Alice's lab only.
    AliceOnly,
    /// Invariant under P in Bob's lab only.
    BobOnly,
    /// Not invariant under P in either lab.
    Neither,
}

impl ParityClass {
    pub fn label(&self) -> &'static str {
        match self {
            ParityClass::BothLabs => "P invariant in both labs",
            ParityClass::AliceOnly => "P invariant in Alice's lab only",
            ParityClass::BobOnly => "P invariant in Bob's lab only",
            ParityClass::Neither => "not P invariant in either lab",
        }
    }
}

/// One of the ten degree-4 products of degree-2 invariants. Every product is
/// CPT invariant in both labs; the parity class varies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Degree4Product {
    pub name: &'static str,
    pub value: C64,
    pub parity: ParityClass,
}

/// The ten degree-4 products with their parity classification.
pub fn degree4_products(record: &InvariantRecord) -> [Degree4Product; 10] {
    let d = |name, value, parity| Degree4Product {
        name,
        value,
        parity,
    };
    [
        d("i1_sq", record.i1 * record.i1, ParityClass::BothLabs),
        d("i2_sq", record.i2 * record.i2, ParityClass::BothLabs),
        d("i2a_sq", record.i2a * record.i2a, ParityClass::BothLabs),
        d("i2b_sq", record.i2b * record.i2b, ParityClass::BothLabs),
        d("i1_i2a", record.i1 * record.i2a, ParityClass::AliceOnly),
        d("i2_i2b", record.i2 * record.i2b, ParityClass::AliceOnly),
        d("i1_i2b", record.i1 * record.i2b, ParityClass::BobOnly),
        d("i2_i2a", record.i2 * record.i2a, ParityClass::BobOnly),
        d("i1_i2", record.i1 * record.i2, ParityClass::Neither),
        d("i2a_i2b", record.i2a * record.i2b, ParityClass::Neither),
    ]
}

/// Wootters concurrence polynomial ψ₀₀ψ₁₁ - ψ₀₁ψ₁₀ of a both-sides Weyl
/// state. Each degree-2 invariant of such a state equals ±4 times this
/// value; the input is rejected unless the Weyl index symmetry holds on both
/// sides.
pub fn wootters_weyl(state: &TwoSpinorState) -> Result<C64> {
    weyl_hand(state, Side::A, 1e-10)?;
    weyl_hand(state, Side::B, 1e-10)?;
    Ok(state.coeff(0, 0) * state.coeff(1, 1) - state.coeff(0, 1) * state.coeff(1, 0))
}
