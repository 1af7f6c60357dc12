//! Spinor representation of the proper orthochronous Lorentz group, its
//! vector-representation cross-check, and the discrete P, T, C, CP, CPT maps.
//!
//! Finite transformations are S(Λ) = exp(½ Σ_{ρσ} ω_{ρσ} S^{ρσ}) with
//! generators S^{ρσ} = ¼[γ^ρ, γ^σ]. The vector representation Λ is recovered
//! from S by trace projection, so the pair is consistent by construction and
//! the metric check Λᵀ g Λ = g stays an independent property.

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{c_gamma5, conjugation_c, gamma, gamma5, metric};
use crate::cmat::{mat_exp, random_matrix, CMat4, CVec4};

/// Maximum magnitude accepted for a single ω component.
pub const OMEGA_BOUND: f64 = 10.0;

/// Antisymmetric parameter matrix ω_{ρσ} of a proper orthochronous Lorentz
/// transformation. Stored as the six independent components, so the
/// antisymmetry invariant holds by construction.
///
/// Component order: (0,1), (0,2), (0,3), (1,2), (1,3), (2,3); the first three
/// are boost rapidities, the last three rotation angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzParams {
    upper: [f64; 6],
}

/// Index of (rho, sigma) with rho < sigma in the component order above.
fn upper_index(rho: usize, sigma: usize) -> usize {
    match (rho, sigma) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!(),
    }
}

impl LorentzParams {
    /// Build from the six independent upper-triangle components.
    pub fn from_upper(upper: [f64; 6]) -> Self {
        assert!(
            upper.iter().all(|w| w.is_finite() && w.abs() <= OMEGA_BOUND),
            "omega components must be finite with |w| <= {OMEGA_BOUND}"
        );
        Self { upper }
    }

    pub fn zero() -> Self {
        Self { upper: [0.0; 6] }
    }

    /// A single boost along spatial axis 1..=3 with rapidity `eta`.
    pub fn boost(axis: usize, eta: f64) -> Self {
        assert!((1..=3).contains(&axis), "boost axis out of range 1..=3");
        let mut upper = [0.0; 6];
        upper[upper_index(0, axis)] = eta;
        Self::from_upper(upper)
    }

    /// A single rotation in the (i, j) plane, 1 <= i < j <= 3.
    pub fn rotation(i: usize, j: usize, angle: f64) -> Self {
        assert!(i >= 1 && i < j && j <= 3, "rotation plane out of range");
        let mut upper = [0.0; 6];
        upper[upper_index(i, j)] = angle;
        Self::from_upper(upper)
    }

    /// ω_{ρσ}, antisymmetric in its indices.
    pub fn omega(&self, rho: usize, sigma: usize) -> f64 {
        assert!(rho < 4 && sigma < 4, "omega index out of range 0..=3");
        use std::cmp::Ordering;
        match rho.cmp(&sigma) {
            Ordering::Equal => 0.0,
            Ordering::Less => self.upper[upper_index(rho, sigma)],
            Ordering::Greater => -self.upper[upper_index(sigma, rho)],
        }
    }

    pub fn components(&self) -> &[f64; 6] {
        &self.upper
    }
}

/// Lie-algebra generator S^{ρσ} = ¼[γ^ρ, γ^σ] of the spinor representation.
pub fn generator(rho: usize, sigma: usize) -> CMat4 {
    assert!(rho < 4 && sigma < 4, "generator index out of range 0..=3");
    let quarter = C64::new(0.25, 0.0);
    (gamma(rho) * gamma(sigma) - gamma(sigma) * gamma(rho)).scale(quarter)
}

/// Finite spinor transformation S(Λ) = exp(½ Σ ω_{ρσ} S^{ρσ}).
pub fn spinor_rep(params: &LorentzParams) -> CMat4 {
    let mut k = CMat4::zero();
    for rho in 0..4 {
        for sigma in 0..4 {
            let w = params.omega(rho, sigma);
            if w != 0.0 {
                k = k + generator(rho, sigma).scale(C64::new(0.5 * w, 0.0));
            }
        }
    }
    // |omega| <= 10 keeps the generator sum well inside the exp norm bound.
    mat_exp(&k).expect("spinor_rep exponent within norm bound")
}

/// Vector representation Λ^μ_ν recovered from the spinor representation by
/// trace projection: Λ^μ_σ = g^{σσ} ¼ Tr(S⁻¹ γ^μ S γ^σ).
pub fn vector_rep(params: &LorentzParams) -> [[f64; 4]; 4] {
    let s = spinor_rep(params);
    let s_inv = s.inverse().expect("spinor representation is invertible");
    let mut lambda = [[0.0; 4]; 4];
    for mu in 0..4 {
        let conj = s_inv * gamma(mu) * s;
        for sigma in 0..4 {
            let tr = (conj * gamma(sigma)).trace();
            lambda[mu][sigma] = 0.25 * metric(sigma, sigma) * tr.re;
        }
    }
    lambda
}

/// Discrete spacetime transformation tags.
///
/// T, C and CP are antiunitary (they conjugate the spinor), so they are
/// exposed only as vector-level maps. Phase conventions: S(P) = γ⁰,
/// T: ψ → Cψ*, C: ψ → iγ²ψ*, CP: ψ → -iCγ⁵ψ*, S(CPT) = -iγ⁵. The overall
/// phases of the antiunitary maps are conventional; these are the common
/// textbook choices and all kernel identities in this crate refer to them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscreteTransform {
    /// Parity inversion, ψ → γ⁰ψ.
    P,
    /// Time reversal, ψ → Cψ*.
    T,
    /// Charge conjugation, ψ → iγ²ψ*.
    Ccharge,
    /// Charge-parity, ψ → -iCγ⁵ψ*.
    CP,
    /// Full CPT, ψ → -iγ⁵ψ.
    CPT,
}

/// Apply a discrete transformation to a spinor amplitude vector.
pub fn discrete_apply(t: DiscreteTransform, psi: &CVec4) -> CVec4 {
    let i = C64::new(0.0, 1.0);
    match t {
        DiscreteTransform::P => gamma(0).mul_vec(psi),
        DiscreteTransform::T => conjugation_c().mul_vec(&psi.conj()),
        DiscreteTransform::Ccharge => gamma(2).mul_vec(&psi.conj()).scale(i),
        DiscreteTransform::CP => c_gamma5().mul_vec(&psi.conj()).scale(-i),
        DiscreteTransform::CPT => gamma5().mul_vec(psi).scale(-i),
    }
}

/// Deterministic random Lorentz parameters: each independent component
/// uniform in [-scale, scale]. `scale` must lie in (0, 2].
pub fn random_lorentz(seed: u64, scale: f64) -> LorentzParams {
    assert!(
        scale > 0.0 && scale <= 2.0,
        "random_lorentz scale must lie in (0, 2]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut upper = [0.0; 6];
    for w in &mut upper {
        *w = rng.gen_range(-scale..=scale);
    }
    LorentzParams { upper }
}

/// Deterministic random determinant-one matrix (not generally a Lorentz
/// transformation); fuzz source for SL(4, C) invariance checks.
pub fn random_sl4(seed: u64) -> CMat4 {
    // Shift towards the identity so the determinant stays well away from 0.
    let m = random_matrix(seed, 0.4) + CMat4::identity();
    let det = m.det();
    let root = det.powf(0.25);
    m.scale(C64::new(1.0, 0.0) / root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn generator_of_equal_indices_vanishes() {
        assert!(generator(0, 0).approx_eq(&CMat4::zero(), 1e-15));
        assert!(generator(2, 2).approx_eq(&CMat4::zero(), 1e-15));
    }

    #[test]
    fn generator_is_antisymmetric_in_indices() {
        for rho in 0..4 {
            for sigma in 0..4 {
                let lhs = generator(rho, sigma);
                let rhs = -generator(sigma, rho);
                assert!(lhs.approx_eq(&rhs, 1e-15));
            }
        }
    }

    #[test]
    fn generator_12_is_half_gamma1_gamma2() {
        // γ¹ and γ² anticommute and g^{12} = 0, so ¼[γ¹,γ²] = ½γ¹γ².
        let want = (gamma(1) * gamma(2)).scale(c(0.5, 0.0));
        assert!(generator(1, 2).approx_eq(&want, 1e-15));
    }

    #[test]
    fn generator_equals_half_product_minus_metric() {
        for rho in 0..4 {
            for sigma in 0..4 {
                let want = (gamma(rho) * gamma(sigma)).scale(c(0.5, 0.0))
                    - CMat4::identity().scale(c(0.5 * metric(rho, sigma), 0.0));
                assert!(generator(rho, sigma).approx_eq(&want, 1e-15));
            }
        }
    }

    #[test]
    fn spinor_rep_of_zero_is_identity() {
        assert!(spinor_rep(&LorentzParams::zero()).approx_eq(&CMat4::identity(), 1e-15));
    }

    #[test]
    fn spinor_rep_intertwines_c_with_inverse_transpose() {
        // S(Λ)ᵀ C = C S(Λ)⁻¹, checked against an explicit inverse.
        let cc = conjugation_c();
        for seed in 0..50u64 {
            let s = spinor_rep(&random_lorentz(seed, 0.5));
            let lhs = s.transpose() * cc;
            let rhs = cc * s.inverse().unwrap();
            assert!(lhs.approx_eq(&rhs, 1e-11), "seed {seed}");
        }
    }

    #[test]
    fn spinor_rep_commutes_with_gamma5() {
        for seed in 0..50u64 {
            let s = spinor_rep(&random_lorentz(seed, 0.5));
            let comm = s * gamma5() - gamma5() * s;
            assert!(comm.approx_eq(&CMat4::zero(), 1e-12), "seed {seed}");
        }
    }

    #[test]
    fn vector_rep_of_zero_is_identity() {
        let l = vector_rep(&LorentzParams::zero());
        for mu in 0..4 {
            for nu in 0..4 {
                let want = if mu == nu { 1.0 } else { 0.0 };
                assert!((l[mu][nu] - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn vector_rep_conjugation_identity() {
        // S⁻¹ γ^μ S = Σ_ν Λ^μ_ν γ^ν for random parameters.
        for seed in 0..25u64 {
            let params = random_lorentz(seed, 0.5);
            let s = spinor_rep(&params);
            let s_inv = s.inverse().unwrap();
            let lambda = vector_rep(&params);
            for mu in 0..4 {
                let lhs = s_inv * gamma(mu) * s;
                let mut rhs = CMat4::zero();
                for nu in 0..4 {
                    rhs = rhs + gamma(nu).scale(c(lambda[mu][nu], 0.0));
                }
                assert!(lhs.approx_eq(&rhs, 1e-10), "seed {seed} mu {mu}");
            }
        }
    }

    #[test]
    fn vector_rep_preserves_metric_and_is_proper() {
        for seed in 0..25u64 {
            let lambda = vector_rep(&random_lorentz(seed, 0.5));
            // Λᵀ g Λ = g entrywise.
            for a in 0..4 {
                for b in 0..4 {
                    let mut acc = 0.0;
                    for mu in 0..4 {
                        acc += lambda[mu][a] * metric(mu, mu) * lambda[mu][b];
                    }
                    assert!((acc - metric(a, b)).abs() < 1e-10, "seed {seed} ({a},{b})");
                }
            }
            // det Λ = +1 via LU on a promoted complex matrix.
            let lm = CMat4::from_fn(|i, j| c(lambda[i][j], 0.0));
            assert!((lm.det() - c(1.0, 0.0)).norm() < 1e-10, "seed {seed}");
        }
    }

    #[test]
    fn boost_matches_closed_form() {
        // Boost along axis 1: Λ⁰₀ = cosh η, Λ⁰₁ = -sinh η for this sign
        // convention (fixed by the generator definition).
        let eta = 0.73;
        let l = vector_rep(&LorentzParams::boost(1, eta));
        assert!((l[0][0] - eta.cosh()).abs() < 1e-12);
        assert!((l[1][1] - eta.cosh()).abs() < 1e-12);
        assert!(
            (l[0][1].abs() - eta.sinh().abs()).abs() < 1e-12,
            "off-diagonal boost entry"
        );
        assert!((l[2][2] - 1.0).abs() < 1e-12);
        assert!((l[3][3] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn parity_on_basis_vectors() {
        // γ⁰ = diag(1,1,-1,-1) flips the lower components.
        let phi2 = CVec4::basis(2);
        let got = discrete_apply(DiscreteTransform::P, &phi2);
        assert!(got.max_abs_diff(&phi2.scale(c(-1.0, 0.0))) < 1e-15);
        let phi0 = CVec4::basis(0);
        assert!(discrete_apply(DiscreteTransform::P, &phi0).max_abs_diff(&phi0) < 1e-15);
    }

    #[test]
    fn time_reversal_squares_to_minus_one() {
        for j in 0..4 {
            let v = CVec4::basis(j);
            let tt = discrete_apply(
                DiscreteTransform::T,
                &discrete_apply(DiscreteTransform::T, &v),
            );
            assert!(tt.max_abs_diff(&v.scale(c(-1.0, 0.0))) < 1e-15, "j = {j}");
        }
    }

    #[test]
    fn cpt_on_phi0_gives_minus_i_phi2() {
        let got = discrete_apply(DiscreteTransform::CPT, &CVec4::basis(0));
        let want = CVec4::basis(2).scale(c(0.0, -1.0));
        assert!(got.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn cp_matches_i_gamma0_gamma2_conjugation() {
        // -iCγ⁵ψ* = iγ⁰γ²ψ*.
        let alt = (gamma(0) * gamma(2)).scale(c(0.0, 1.0));
        for j in 0..4 {
            let v = CVec4::basis(j).scale(c(0.4, -0.8));
            let got = discrete_apply(DiscreteTransform::CP, &v);
            let want = alt.mul_vec(&v.conj());
            assert!(got.max_abs_diff(&want) < 1e-15, "j = {j}");
        }
    }

    #[test]
    fn random_lorentz_is_deterministic_and_bounded() {
        let a = random_lorentz(1, 0.5);
        let b = random_lorentz(1, 0.5);
        assert_eq!(a, b);
        assert!(a.components().iter().all(|w| w.abs() <= 0.5));
        let other = random_lorentz(2, 0.5);
        assert_ne!(a, other);
    }

    #[test]
    #[should_panic(expected = "scale")]
    fn random_lorentz_rejects_bad_scale() {
        let _ = random_lorentz(0, 3.0);
    }

    #[test]
    fn random_sl4_has_unit_determinant() {
        for seed in 0..40u64 {
            let m = random_sl4(seed);
            assert!((m.det() - c(1.0, 0.0)).norm() < 1e-12, "seed {seed}");
        }
    }
}
