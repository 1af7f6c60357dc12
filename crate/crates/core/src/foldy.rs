//! The first two Foldy-Wouthuysen transformations on fixed-momentum
//! subspaces, the transformed two-spinor picture, compensated invariant
//! forms in that picture, and the block-diagonal H_FW(2) / Pauli cross-check.
//!
//! Generators (for the minimally-coupled Dirac Hamiltonian; extra terms in a
//! spec do not enter):
//!
//!   S₁ = (i/2m) Σ_{μ=1..3} γ^μ (-k_μ - qA_μ),
//!   S₂ = (q/4m²) γ⁰ Σ_{μ=1..3} γ^μ (∂_μA₀ + ∂₀A_μ),
//!
//! both Hermitian, so each e^{iS} is unitary with unit determinant. Against
//! the kernels they intertwine as Cγ⁵S₁ = -S₁ᵀCγ⁵, Cγ⁵S₂ = -S₂ᵀCγ⁵ and
//! CS₁ = +S₁ᵀC, CS₂ = -S₂ᵀC, which is why I₂ and I₃ keep their plain form in
//! the FW picture while I₁, I₂A, I₂B need the exact compensator
//! e^{iS₂}e^{-2iS₁}e^{-iS₂} on the affected side.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::algebra::{c_gamma5, conjugation_c, gamma, pauli};
use crate::cmat::{mat_exp, CMat2, CMat4};
use crate::error::{Error, Result};
use crate::evolution::HamiltonianSpec;
use crate::invariants::InvariantRecord;
use crate::states::{apply_local, TwoSpinorState};

/// Constant field derivatives on the fixed-momentum subspace. True spatial
/// dependence would leave the subspace, so the derivatives entering S₂ and
/// the magnetic term of H_FW(2) are user-supplied constants.
///
/// `grad_a[i][j]` holds ∂_{x_{j+1}} A_{i+1} (row = potential component,
/// column = derivative direction); only its off-diagonal entries enter the
/// magnetic terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
pub struct FWFieldData {
    /// (∂₁A₀, ∂₂A₀, ∂₃A₀).
    pub grad_a0: [f64; 3],
    /// (∂₀A₁, ∂₀A₂, ∂₀A₃).
    pub dt_a: [f64; 3],
    /// Spatial Jacobian ∂_νA_μ as described above.
    #[serde(default)]
    pub grad_a: [[f64; 3]; 3],
}

impl FWFieldData {
    pub fn zero() -> Self {
        Self::default()
    }

    fn is_finite(&self) -> bool {
        self.grad_a0.iter().all(|x| x.is_finite())
            && self.dt_a.iter().all(|x| x.is_finite())
            && self.grad_a.iter().flatten().all(|x| x.is_finite())
    }
}

/// One lab's Foldy-Wouthuysen data: the spec, the field constants and the
/// two generators, rebuilt deterministically on construction.
#[derive(Debug, Clone)]
pub struct FWContext {
    pub spec: HamiltonianSpec,
    pub fields: FWFieldData,
    s1: CMat4,
    s2: CMat4,
}

impl FWContext {
    pub fn new(spec: HamiltonianSpec, fields: FWFieldData) -> Result<Self> {
        let s1 = fw_generator(1, &spec, &fields)?;
        let s2 = fw_generator(2, &spec, &fields)?;
        Ok(Self {
            spec,
            fields,
            s1,
            s2,
        })
    }

    pub fn s1(&self) -> &CMat4 {
        &self.s1
    }

    pub fn s2(&self) -> &CMat4 {
        &self.s2
    }

    /// The unitary e^{iS_n} of one transformation step.
    fn step_unitary(&self, n: usize) -> CMat4 {
        let s = match n {
            1 => self.s1,
            2 => self.s2,
            _ => panic!("FW step {n} out of range 1..=2"),
        };
        mat_exp(&s.scale(C64::i())).expect("FW generator within exp norm bound")
    }

    /// Composite unitary e^{iS_n}···e^{iS₁} taking the original picture to
    /// order `order`.
    pub fn picture_unitary(&self, order: usize) -> CMat4 {
        assert!(order <= 2, "FW order {order} out of range 0..=2");
        let mut u = CMat4::identity();
        for n in 1..=order {
            u = self.step_unitary(n) * u;
        }
        u
    }

    /// Compensator G with ψᵀCφ = ψ_{(n)}ᵀ C G φ_{(n)}: the identity at order
    /// 0, e^{-2iS₁} at order 1, e^{iS₂}e^{-2iS₁}e^{-iS₂} at order 2. With
    /// zero momentum and fields every factor is the identity and the kernels
    /// reduce to plain C and Cγ⁵.
    pub fn compensator(&self, order: usize) -> CMat4 {
        assert!(order <= 2, "FW order {order} out of range 0..=2");
        if order == 0 {
            return CMat4::identity();
        }
        let e_m2is1 = mat_exp(&self.s1.scale(C64::new(0.0, -2.0)))
            .expect("FW generator within exp norm bound");
        if order == 1 {
            return e_m2is1;
        }
        let e_is2 = self.step_unitary(2);
        let e_mis2 = mat_exp(&self.s2.scale(-C64::i())).expect("FW generator within norm bound");
        e_is2 * e_m2is1 * e_mis2
    }
}

/// Foldy-Wouthuysen generator S₁ or S₂. Requires mass > 0.
pub fn fw_generator(n: usize, spec: &HamiltonianSpec, fields: &FWFieldData) -> Result<CMat4> {
    if spec.mass <= 0.0 {
        return Err(Error::ZeroMass { mass: spec.mass });
    }
    if !fields.is_finite() {
        return Err(Error::NonFinite {
            context: "FW field data",
        });
    }
    let m = spec.mass;
    match n {
        1 => {
            let pi = spec.kinetic_momentum();
            let mut s = CMat4::zero();
            for mu in 1..=3 {
                // (i/2m) γ^μ (-k_μ - qA_μ)
                let coeff = C64::new(0.0, -pi[mu - 1] / (2.0 * m));
                if coeff.norm_sqr() != 0.0 {
                    s = s + gamma(mu).scale(coeff);
                }
            }
            Ok(s)
        }
        2 => {
            let g0 = gamma(0);
            let mut s = CMat4::zero();
            for mu in 1..=3 {
                let field = fields.grad_a0[mu - 1] + fields.dt_a[mu - 1];
                let coeff = spec.charge / (4.0 * m * m) * field;
                if coeff != 0.0 {
                    s = s + (g0 * gamma(mu)).scale(C64::new(coeff, 0.0));
                }
            }
            Ok(s)
        }
        _ => panic!("FW generator index {n} out of range 1..=2"),
    }
}

/// Transform a two-spinor state into the (n_a, n_b) Foldy-Wouthuysen
/// picture: Ψ^{(n)} = e^{iS^A_n}···e^{iS^A_1} Ψ (e^{iS^B_1})ᵀ···(e^{iS^B_n})ᵀ.
pub fn fw_transform_state(
    state: &TwoSpinorState,
    ctx_a: &FWContext,
    ctx_b: &FWContext,
    n_a: usize,
    n_b: usize,
) -> TwoSpinorState {
    let u_a = ctx_a.picture_unitary(n_a);
    let u_b = ctx_b.picture_unitary(n_b);
    apply_local(state, &u_a, &u_b)
}

/// Evaluate the five invariants on a state already in the (n_a, n_b) FW
/// picture. I₁, I₂A, I₂B carry the exact compensators on the transformed
/// sides; I₂ and I₃ keep their plain polynomial form. The results equal the
/// original-picture invariants exactly (not perturbatively).
pub fn fw_invariants(
    state_fw: &TwoSpinorState,
    ctx_a: &FWContext,
    ctx_b: &FWContext,
    n_a: usize,
    n_b: usize,
) -> InvariantRecord {
    let c = conjugation_c();
    let cg5 = c_gamma5();
    let ka = c * ctx_a.compensator(n_a);
    let kb = c * ctx_b.compensator(n_b);
    let psi = state_fw.coeffs();
    let half = C64::new(0.5, 0.0);
    let tr = |x: CMat4, y: CMat4| (psi.transpose() * x * *psi * y).trace() * half;
    InvariantRecord {
        i1: tr(ka, kb),
        i2: tr(cg5, cg5),
        i2a: tr(ka, cg5),
        i2b: tr(cg5, kb),
        i3: psi.det(),
    }
}

/// H_FW(2): the Hamiltonian after the first two transformations, kept
/// through order 1/m,
///
///   qA₀ I + m γ⁰ + (1/2m) γ⁰ Σ(k+qA)² - (iq/2m) γ⁰ Σ_{μ≠ν} γ^μγ^ν ∂_νA_μ,
///
/// block-diagonal (commutes with γ⁰ exactly at this order).
pub fn fw_hamiltonian2(spec: &HamiltonianSpec, fields: &FWFieldData) -> Result<CMat4> {
    if spec.mass <= 0.0 {
        return Err(Error::ZeroMass { mass: spec.mass });
    }
    if !fields.is_finite() {
        return Err(Error::NonFinite {
            context: "FW field data",
        });
    }
    let m = spec.mass;
    let g0 = gamma(0);
    let pi = spec.kinetic_momentum();
    let kinetic = pi.iter().map(|x| x * x).sum::<f64>() / (2.0 * m);
    let mut h = CMat4::identity().scale(C64::new(spec.charge * spec.potential[0], 0.0))
        + g0.scale(C64::new(m + 0.0, 0.0))
        + g0.scale(C64::new(kinetic, 0.0));
    for mu in 1..=3 {
        for nu in 1..=3 {
            if mu == nu {
                continue;
            }
            let d_nu_a_mu = fields.grad_a[mu - 1][nu - 1];
            if d_nu_a_mu != 0.0 {
                let coeff = C64::new(0.0, -spec.charge / (2.0 * m) * d_nu_a_mu);
                h = h + (g0 * gamma(mu) * gamma(nu)).scale(coeff);
            }
        }
    }
    Ok(h)
}

/// Non-relativistic Pauli Hamiltonian on two components,
///
///   (qA₀ + m + (k+qA)²/2m) I - (iq/2m) Σ_{μ≠ν} σ^μσ^ν ∂_μA_ν,
///
/// which matches the upper-left block of [`fw_hamiltonian2`].
pub fn pauli_hamiltonian(spec: &HamiltonianSpec, fields: &FWFieldData) -> Result<CMat2> {
    if spec.mass <= 0.0 {
        return Err(Error::ZeroMass { mass: spec.mass });
    }
    if !fields.is_finite() {
        return Err(Error::NonFinite {
            context: "FW field data",
        });
    }
    let m = spec.mass;
    let pi = spec.kinetic_momentum();
    let scalar = spec.charge * spec.potential[0] + m + pi.iter().map(|x| x * x).sum::<f64>() / (2.0 * m);
    let mut h = CMat2::identity().scale(C64::new(scalar, 0.0));
    for mu in 1..=3 {
        for nu in 1..=3 {
            if mu == nu {
                continue;
            }
            let d_mu_a_nu = fields.grad_a[nu - 1][mu - 1];
            if d_mu_a_nu != 0.0 {
                let coeff = C64::new(0.0, -spec.charge / (2.0 * m) * d_mu_a_nu);
                h = h + (pauli(mu) * pauli(nu)).scale(coeff);
            }
        }
    }
    Ok(h)
}

/// Upper-left 2×2 block of a 4×4 matrix.
pub fn upper_block(m: &CMat4) -> CMat2 {
    CMat2::new([m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::all_invariants;
    use crate::states::{catalog, random_state};

    fn sample_spec(seed: u64) -> HamiltonianSpec {
        // Deterministic spread of masses, momenta and potentials.
        let f = |k: u64| ((seed.wrapping_mul(2654435761).wrapping_add(k * 97)) % 1000) as f64;
        HamiltonianSpec::dirac(
            0.6 + f(1) / 1000.0,
            0.5 + f(2) / 500.0,
            [
                f(3) / 1000.0 - 0.5,
                f(4) / 1000.0 - 0.5,
                f(5) / 1000.0 - 0.5,
            ],
            [
                f(6) / 1000.0 - 0.5,
                f(7) / 1000.0 - 0.5,
                f(8) / 1000.0 - 0.5,
                f(9) / 1000.0 - 0.5,
            ],
        )
    }

    fn sample_fields(seed: u64) -> FWFieldData {
        let f = |k: u64| ((seed.wrapping_mul(40503).wrapping_add(k * 131)) % 1000) as f64 / 1000.0 - 0.5;
        FWFieldData {
            grad_a0: [f(1), f(2), f(3)],
            dt_a: [f(4), f(5), f(6)],
            grad_a: [
                [f(7), f(8), f(9)],
                [f(10), f(11), f(12)],
                [f(13), f(14), f(15)],
            ],
        }
    }

    #[test]
    fn s1_vanishes_without_momentum_or_potential() {
        let spec = HamiltonianSpec::mass_only(1.0);
        let s1 = fw_generator(1, &spec, &FWFieldData::zero()).unwrap();
        assert!(s1.approx_eq(&CMat4::zero(), 1e-15));
    }

    #[test]
    fn s2_vanishes_without_fields() {
        let spec = HamiltonianSpec::dirac(1.0, 1.0, [0.3, 0.1, 0.0], [0.2, 0.0, 0.0, 0.0]);
        let s2 = fw_generator(2, &spec, &FWFieldData::zero()).unwrap();
        assert!(s2.approx_eq(&CMat4::zero(), 1e-15));
    }

    #[test]
    fn generators_are_hermitian() {
        for seed in 0..20u64 {
            let spec = sample_spec(seed);
            let fields = sample_fields(seed);
            for n in 1..=2 {
                let s = fw_generator(n, &spec, &fields).unwrap();
                assert!(s.hermiticity_defect() < 1e-15, "S{n} seed {seed}");
            }
        }
    }

    #[test]
    fn zero_mass_is_rejected() {
        let spec = HamiltonianSpec::mass_only(0.0);
        assert!(matches!(
            fw_generator(1, &spec, &FWFieldData::zero()),
            Err(Error::ZeroMass { .. })
        ));
        assert!(fw_hamiltonian2(&spec, &FWFieldData::zero()).is_err());
        assert!(pauli_hamiltonian(&spec, &FWFieldData::zero()).is_err());
    }

    #[test]
    fn generator_kernel_intertwining_signs() {
        let c = conjugation_c();
        let cg5 = c_gamma5();
        for seed in 0..30u64 {
            let spec = sample_spec(seed);
            let fields = sample_fields(seed.wrapping_add(999));
            let s1 = fw_generator(1, &spec, &fields).unwrap();
            let s2 = fw_generator(2, &spec, &fields).unwrap();
            // Cγ⁵ S = -Sᵀ Cγ⁵ for both generators.
            assert!((cg5 * s1 + s1.transpose() * cg5).max_abs() < 1e-13, "seed {seed}");
            assert!((cg5 * s2 + s2.transpose() * cg5).max_abs() < 1e-13, "seed {seed}");
            // C S₁ = +S₁ᵀ C but C S₂ = -S₂ᵀ C.
            assert!((c * s1 - s1.transpose() * c).max_abs() < 1e-13, "seed {seed}");
            assert!((c * s2 + s2.transpose() * c).max_abs() < 1e-13, "seed {seed}");
        }
    }

    #[test]
    fn order_zero_transform_is_identity() {
        let ctx = FWContext::new(sample_spec(3), sample_fields(3)).unwrap();
        let state = random_state(8);
        let out = fw_transform_state(&state, &ctx, &ctx, 0, 0);
        assert!(out.max_abs_diff(&state) < 1e-15);
    }

    #[test]
    fn trivial_context_transform_is_identity_at_any_order() {
        let ctx = FWContext::new(HamiltonianSpec::mass_only(1.0), FWFieldData::zero()).unwrap();
        let state = random_state(9);
        for (na, nb) in [(1, 1), (2, 2), (2, 0)] {
            let out = fw_transform_state(&state, &ctx, &ctx, na, nb);
            assert!(out.max_abs_diff(&state) < 1e-15);
        }
        assert!(ctx.compensator(2).approx_eq(&CMat4::identity(), 1e-15));
    }

    #[test]
    fn transform_preserves_norm() {
        let ctx_a = FWContext::new(sample_spec(5), sample_fields(5)).unwrap();
        let ctx_b = FWContext::new(sample_spec(6), sample_fields(6)).unwrap();
        let state = random_state(10);
        let out = fw_transform_state(&state, &ctx_a, &ctx_b, 2, 2);
        assert!((out.norm() - state.norm()).abs() < 1e-13);
    }

    #[test]
    fn fw_invariants_match_original_picture() {
        for seed in 0..15u64 {
            let ctx_a = FWContext::new(sample_spec(seed), sample_fields(seed)).unwrap();
            let ctx_b =
                FWContext::new(sample_spec(seed + 100), sample_fields(seed + 100)).unwrap();
            let state = random_state(seed + 50);
            let original = all_invariants(&state);
            for (na, nb) in [(1, 1), (2, 2), (2, 1), (0, 2)] {
                let fw_state = fw_transform_state(&state, &ctx_a, &ctx_b, na, nb);
                let rec = fw_invariants(&fw_state, &ctx_a, &ctx_b, na, nb);
                for (name, got, want) in [
                    ("i1", rec.i1, original.i1),
                    ("i2", rec.i2, original.i2),
                    ("i2a", rec.i2a, original.i2a),
                    ("i2b", rec.i2b, original.i2b),
                    ("i3", rec.i3, original.i3),
                ] {
                    assert!(
                        (got - want).norm() < 1e-10,
                        "{name} at order ({na},{nb}) seed {seed}: {got} vs {want}"
                    );
                }
            }
        }
    }

    #[test]
    fn i3_determinant_agreement_with_unit_determinant_factors() {
        let ctx = FWContext::new(sample_spec(7), sample_fields(7)).unwrap();
        let u = ctx.picture_unitary(2);
        assert!((u.det() - C64::new(1.0, 0.0)).norm() < 1e-12);
        let state = catalog("decay_symmetric").unwrap().state;
        let fw_state = fw_transform_state(&state, &ctx, &ctx, 2, 2);
        assert!((fw_state.coeffs().det() - state.coeffs().det()).norm() < 1e-12);
    }

    #[test]
    fn hfw2_reduces_to_static_terms_without_momentum_and_fields() {
        let spec = HamiltonianSpec::dirac(1.4, 0.9, [0.0; 3], [0.6, 0.0, 0.0, 0.0]);
        let h = fw_hamiltonian2(&spec, &FWFieldData::zero()).unwrap();
        let want = CMat4::identity().scale(C64::new(0.9 * 0.6, 0.0))
            + gamma(0).scale(C64::new(1.4, 0.0));
        assert!(h.approx_eq(&want, 1e-15));
    }

    #[test]
    fn hfw2_commutes_with_gamma0() {
        for seed in 0..20u64 {
            let spec = sample_spec(seed);
            let fields = sample_fields(seed);
            let h = fw_hamiltonian2(&spec, &fields).unwrap();
            let comm = h * gamma(0) - gamma(0) * h;
            assert!(comm.max_abs() < 1e-15, "seed {seed}");
        }
    }

    #[test]
    fn hfw2_upper_block_matches_pauli_hamiltonian() {
        for seed in 0..20u64 {
            let spec = sample_spec(seed);
            let fields = sample_fields(seed);
            let h4 = fw_hamiltonian2(&spec, &fields).unwrap();
            let h2 = pauli_hamiltonian(&spec, &fields).unwrap();
            assert!(
                upper_block(&h4).max_abs_diff(&h2) < 1e-12,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn pauli_hamiltonian_static_case_and_hermiticity() {
        let spec = HamiltonianSpec::dirac(1.1, 0.8, [0.0; 3], [0.5, 0.0, 0.0, 0.0]);
        let h = pauli_hamiltonian(&spec, &FWFieldData::zero()).unwrap();
        let want = CMat2::identity().scale(C64::new(0.8 * 0.5 + 1.1, 0.0));
        assert!(h.max_abs_diff(&want) < 1e-15);
        for seed in 0..10u64 {
            let h = pauli_hamiltonian(&sample_spec(seed), &sample_fields(seed)).unwrap();
            assert!(h.hermiticity_defect() < 1e-15);
        }
    }
}
