//! Gamma matrices in the Dirac basis, the charge-conjugation kernel C = iγ¹γ³,
//! the chirality operator γ⁵ = iγ⁰γ¹γ²γ³, and the chiral projectors.
//!
//! Conventions: Minkowski signature (+,-,-,-); {γ^μ, γ^ν} = 2 g^{μν} I.
//! All constants are exact (entries are 0, ±1, ±i, or ±1/2), so algebraic
//! identities among them hold to machine precision entrywise.

use num_complex::Complex64 as C64;

use crate::cmat::{CMat2, CMat4};

const O: C64 = C64::new(0.0, 0.0);
const P1: C64 = C64::new(1.0, 0.0);
const M1: C64 = C64::new(-1.0, 0.0);
const PI_: C64 = C64::new(0.0, 1.0);
const MI: C64 = C64::new(0.0, -1.0);

/// Chirality label for the projectors ½(1 ∓ γ⁵).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hand {
    Left,
    Right,
}

/// Minkowski metric diag(+1, -1, -1, -1).
pub fn metric(mu: usize, nu: usize) -> f64 {
    assert!(mu < 4 && nu < 4, "metric index out of range 0..=3");
    if mu != nu {
        0.0
    } else if mu == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Pauli matrix σ^i for i in 1..=3.
pub fn pauli(i: usize) -> CMat2 {
    match i {
        1 => CMat2::new([O, P1, P1, O]),
        2 => CMat2::new([O, MI, PI_, O]),
        3 => CMat2::new([P1, O, O, M1]),
        _ => panic!("Pauli index {i} out of range 1..=3"),
    }
}

/// Gamma matrix γ^μ in the Dirac basis.
///
/// γ⁰ = diag(I, -I); γ^i = [[0, σ^i], [-σ^i, 0]] for i = 1, 2, 3.
#[rustfmt::skip]
pub fn gamma(mu: usize) -> CMat4 {
    match mu {
        0 => CMat4::new([
            P1,  O,  O,  O,
             O, P1,  O,  O,
             O,  O, M1,  O,
             O,  O,  O, M1,
        ]),
        1 => CMat4::new([
             O,  O,  O, P1,
             O,  O, P1,  O,
             O, M1,  O,  O,
            M1,  O,  O,  O,
        ]),
        2 => CMat4::new([
             O,  O,  O, MI,
             O,  O, PI_,  O,
             O, PI_,  O,  O,
            MI,  O,  O,  O,
        ]),
        3 => CMat4::new([
             O,  O, P1,  O,
             O,  O,  O, M1,
            M1,  O,  O,  O,
             O, P1,  O,  O,
        ]),
        _ => panic!("gamma index {mu} out of range 0..=3"),
    }
}

/// γ⁵ = iγ⁰γ¹γ²γ³ = [[0, I], [I, 0]]; Hermitian and self-inverse, and it
/// anticommutes with every γ^μ.
#[rustfmt::skip]
pub fn gamma5() -> CMat4 {
    CMat4::new([
         O,  O, P1,  O,
         O,  O,  O, P1,
        P1,  O,  O,  O,
         O, P1,  O,  O,
    ])
}

/// Charge-conjugation kernel C = iγ¹γ³ = diag(-σ², -σ²).
///
/// Satisfies C = C† = C⁻¹, Cᵀ = -C, and γ^{μT} = C γ^μ C.
#[rustfmt::skip]
pub fn conjugation_c() -> CMat4 {
    CMat4::new([
         O, PI_,  O,  O,
        MI,  O,  O,  O,
         O,  O,  O, PI_,
         O,  O, MI,  O,
    ])
}

/// The antisymmetric kernel Cγ⁵.
pub fn c_gamma5() -> CMat4 {
    conjugation_c() * gamma5()
}

/// Chiral projector P_L = ½(1 - γ⁵) or P_R = ½(1 + γ⁵).
pub fn chiral_projector(hand: Hand) -> CMat4 {
    let half = C64::new(0.5, 0.0);
    let sign = match hand {
        Hand::Left => M1,
        Hand::Right => P1,
    };
    (CMat4::identity() + gamma5().scale(sign)).scale(half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmat::CVec4;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn gamma0_is_diag_1_1_m1_m1() {
        let want = CMat4::diag([c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(gamma(0), want);
    }

    #[test]
    fn clifford_relations_hold_exactly() {
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
                let want = CMat4::identity().scale(c(2.0 * metric(mu, nu), 0.0));
                assert!(
                    anti.approx_eq(&want, 1e-15),
                    "Clifford relation failed for ({mu},{nu})"
                );
            }
        }
    }

    #[test]
    fn gamma1_squares_to_minus_identity() {
        let m = gamma(1) * gamma(1);
        assert!(m.approx_eq(&-CMat4::identity(), 1e-15));
    }

    #[test]
    fn gamma1_gamma2_anticommute() {
        let m = gamma(1) * gamma(2) + gamma(2) * gamma(1);
        assert!(m.approx_eq(&CMat4::zero(), 1e-15));
    }

    #[test]
    fn gamma5_matches_product_definition() {
        let prod = (gamma(0) * gamma(1) * gamma(2) * gamma(3)).scale(c(0.0, 1.0));
        assert!(gamma5().approx_eq(&prod, 1e-15));
    }

    #[test]
    fn gamma5_is_hermitian_self_inverse() {
        assert!(gamma5().approx_eq(&gamma5().dagger(), 1e-15));
        assert!((gamma5() * gamma5()).approx_eq(&CMat4::identity(), 1e-15));
    }

    #[test]
    fn gamma5_anticommutes_with_all_gammas() {
        for mu in 0..4 {
            let anti = gamma5() * gamma(mu) + gamma(mu) * gamma5();
            assert!(anti.approx_eq(&CMat4::zero(), 1e-15), "mu = {mu}");
        }
    }

    #[test]
    fn c_matches_product_definition() {
        let prod = (gamma(1) * gamma(3)).scale(c(0.0, 1.0));
        assert!(conjugation_c().approx_eq(&prod, 1e-15));
    }

    #[test]
    fn c_is_hermitian_self_inverse_antisymmetric() {
        let cc = conjugation_c();
        assert!(cc.approx_eq(&cc.dagger(), 1e-15));
        assert!((cc * cc).approx_eq(&CMat4::identity(), 1e-15));
        assert!(cc.transpose().approx_eq(&-cc, 1e-15));
    }

    #[test]
    fn c_gamma5_is_antisymmetric() {
        let k = c_gamma5();
        assert!(k.transpose().approx_eq(&-k, 1e-15));
    }

    #[test]
    fn gamma_transpose_is_c_conjugation() {
        let cc = conjugation_c();
        for mu in 0..4 {
            let want = cc * gamma(mu) * cc;
            assert!(gamma(mu).transpose().approx_eq(&want, 1e-15), "mu = {mu}");
        }
    }

    #[test]
    fn chiral_projectors_complete_and_idempotent() {
        let pl = chiral_projector(Hand::Left);
        let pr = chiral_projector(Hand::Right);
        assert!((pl + pr).approx_eq(&CMat4::identity(), 1e-15));
        assert!((pl * pl).approx_eq(&pl, 1e-15));
        assert!((pr * pr).approx_eq(&pr, 1e-15));
        assert!((pl * pr).approx_eq(&CMat4::zero(), 1e-15));
    }

    #[test]
    fn right_handed_spinor_is_fixed_by_pr_and_killed_by_pl() {
        // (a, b, a, b) is the right-handed form.
        let a = c(0.3, -0.1);
        let b = c(-0.7, 0.2);
        let v = CVec4::new([a, b, a, b]);
        let pr_v = chiral_projector(Hand::Right).mul_vec(&v);
        let pl_v = chiral_projector(Hand::Left).mul_vec(&v);
        assert!(pr_v.max_abs_diff(&v) < 1e-15);
        assert!(pl_v.max_abs_diff(&CVec4::zero()) < 1e-15);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn gamma_index_out_of_range_panics() {
        let _ = gamma(4);
    }

    #[test]
    fn pauli_blocks_embed_in_gammas() {
        // γ^i upper-right block is σ^i.
        for i in 1..=3 {
            let g = gamma(i);
            let s = pauli(i);
            for r in 0..2 {
                for cidx in 0..2 {
                    assert_eq!(g[(r, 2 + cidx)], s[(r, cidx)], "i={i}");
                }
            }
        }
    }
}
