//! Single- and two-spinor states on fixed-momentum subspaces, local
//! transformation action, Weyl projections, and the example-state catalog.
//!
//! Two-spinor coefficients ψ_{jk} are kept as a 4×4 matrix with the row index
//! j belonging to Alice and the column index k to Bob; local transformations
//! act as Ψ → S_A Ψ S_Bᵀ.

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{chiral_projector, Hand};
use crate::cmat::{CMat4, CVec4};
use crate::error::{Error, Result};
use crate::invariants::InvariantRecord;

/// Which laboratory a local operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// One particle's spinor amplitudes in the fixed-momentum basis φ_0..φ_3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    amps: CVec4,
}

impl Spinor {
    pub fn new(amps: CVec4) -> Self {
        Self { amps }
    }

    /// Basis spinor φ_j.
    pub fn basis(j: usize) -> Self {
        Self::new(CVec4::basis(j))
    }

    pub fn amps(&self) -> &CVec4 {
        &self.amps
    }

    pub fn scale(&self, z: C64) -> Self {
        Self::new(self.amps.scale(z))
    }

    pub fn add(&self, other: &Spinor) -> Self {
        Self::new(self.amps + other.amps)
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }
}

/// Fixed-momentum inner product (ψ, φ)_k = ψ†φ, conjugate-linear in `psi`.
pub fn inner_fixed_k(psi: &Spinor, phi: &Spinor) -> C64 {
    psi.amps.inner(&phi.amps)
}

/// Joint state of two spinors: coefficient matrix ψ_{jk}, row j = Alice,
/// column k = Bob.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinorState {
    coeffs: CMat4,
}

impl TwoSpinorState {
    pub fn new(coeffs: CMat4) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(CMat4::zero())
    }

    /// Build from a list of (alice index, bob index, amplitude) terms.
    pub fn from_terms(terms: &[(usize, usize, C64)]) -> Self {
        let mut m = CMat4::zero();
        for &(j, k, z) in terms {
            m[(j, k)] += z;
        }
        Self::new(m)
    }

    pub fn coeffs(&self) -> &CMat4 {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize, k: usize) -> C64 {
        self.coeffs[(j, k)]
    }

    /// √(Σ |ψ_{jk}|²).
    pub fn norm(&self) -> f64 {
        self.coeffs
            .entries()
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn scale(&self, z: C64) -> Self {
        Self::new(self.coeffs.scale(z))
    }

    pub fn add(&self, other: &TwoSpinorState) -> Self {
        Self::new(self.coeffs + *other.coeffs())
    }

    /// Rescaled to unit norm. Panics on the zero state.
    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero state");
        self.scale(C64::new(1.0 / n, 0.0))
    }

    pub fn max_abs_diff(&self, other: &TwoSpinorState) -> f64 {
        self.coeffs.max_abs_diff(other.coeffs())
    }
}

/// Product state ψ_{jk} = a_j b_k; its coefficient matrix has rank one.
pub fn product_state(a: &Spinor, b: &Spinor) -> TwoSpinorState {
    TwoSpinorState::new(CMat4::from_fn(|j, k| a.amps()[j] * b.amps()[k]))
}

/// Local action Ψ → S_A Ψ S_Bᵀ.
pub fn apply_local(state: &TwoSpinorState, s_a: &CMat4, s_b: &CMat4) -> TwoSpinorState {
    TwoSpinorState::new(*s_a * *state.coeffs() * s_b.transpose())
}

/// Apply the chiral projector P_hand on one side.
pub fn weyl_project(state: &TwoSpinorState, side: Side, hand: Hand) -> TwoSpinorState {
    let p = chiral_projector(hand);
    match side {
        Side::A => apply_local(state, &p, &CMat4::identity()),
        Side::B => apply_local(state, &CMat4::identity(), &p),
    }
}

/// Check the Weyl index symmetry ψ_{jk} = ±ψ_{(j+2 mod 4) k} on side A (or
/// the column version on side B); returns the matching chirality.
///
/// The sign is + for right-handed and - for left-handed states.
pub fn weyl_hand(state: &TwoSpinorState, side: Side, tol: f64) -> Result<Hand> {
    let scale = state.coeffs().max_abs().max(1.0);
    let mut worst_r: f64 = 0.0;
    let mut worst_l: f64 = 0.0;
    for j in 0..2 {
        for k in 0..4 {
            let (a, b) = match side {
                Side::A => (state.coeff(j, k), state.coeff(j + 2, k)),
                Side::B => (state.coeff(k, j), state.coeff(k, j + 2)),
            };
            worst_r = worst_r.max((a - b).norm());
            worst_l = worst_l.max((a + b).norm());
        }
    }
    if worst_r <= tol * scale {
        Ok(Hand::Right)
    } else if worst_l <= tol * scale {
        Ok(Hand::Left)
    } else {
        Err(Error::NotWeylSymmetric {
            side: match side {
                Side::A => 'A',
                Side::B => 'B',
            },
            deviation: worst_r.min(worst_l),
        })
    }
}

/// Documented invariant magnitudes of a catalog state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectedMagnitudes {
    pub i1: f64,
    pub i2: f64,
    pub i2a: f64,
    pub i2b: f64,
    pub i3: f64,
}

/// A named example state with its documented invariant magnitudes.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub state: TwoSpinorState,
    pub expected: ExpectedMagnitudes,
}

impl CatalogEntry {
    /// Invariants of the stored state, for regression checks.
    pub fn computed(&self) -> InvariantRecord {
        crate::invariants::all_invariants(&self.state)
    }
}

/// Valid catalog names, in documentation order.
pub const CATALOG_NAMES: [&str; 8] = [
    "epr",
    "i2_max",
    "i2a_max",
    "i2b_max",
    "i3_max",
    "chiral_epr",
    "decay",
    "decay_symmetric",
];

/// p/√q rendered to floating point; catalog amplitudes are all of this form
/// so the stored states are bit-stable across builds.
fn rq(p: i64, q: u64) -> f64 {
    p as f64 / (q as f64).sqrt()
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn im(x: f64) -> C64 {
    C64::new(0.0, x)
}

/// Look up a catalog state by name.
///
/// Magnitude profiles: `epr`, `decay` are pure-I₁ states at the extremal
/// value ½; `i2_max`, `i2a_max`, `i2b_max` single out the other degree-2
/// invariants; `i3_max` has all degree-2 invariants zero with |I₃| = 1/16;
/// `chiral_epr` saturates all four degree-2 invariants with I₃ = 0;
/// `decay_symmetric` has I₂A = I₂B = 0 and |I₁| = |I₂| = ½, |I₃| = 1/16.
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let h = rq(1, 2); // 1/√2
    let q = rq(1, 4); // 1/2
    let e = rq(1, 8); // 1/√8
    let entry = |state: TwoSpinorState, expected: ExpectedMagnitudes, name: &'static str| {
        CatalogEntry {
            name,
            state,
            expected,
        }
    };
    match name {
        // (φ₀⊗φ₁ - iφ₁⊗φ₀)/√2
        "epr" => Ok(entry(
            TwoSpinorState::from_terms(&[(0, 1, re(h)), (1, 0, im(-h))]),
            ExpectedMagnitudes {
                i1: 0.5,
                i2: 0.0,
                i2a: 0.0,
                i2b: 0.0,
                i3: 0.0,
            },
            "epr",
        )),
        // (φ₁⊗φ₃ - φ₂⊗φ₀)/√2
        "i2_max" => Ok(entry(
            TwoSpinorState::from_terms(&[(1, 3, re(h)), (2, 0, re(-h))]),
            ExpectedMagnitudes {
                i1: 0.0,
                i2: 0.5,
                i2a: 0.0,
                i2b: 0.0,
                i3: 0.0,
            },
            "i2_max",
        )),
        // (φ₀⊗φ₀ - φ₁⊗φ₃)/√2
        "i2a_max" => Ok(entry(
            TwoSpinorState::from_terms(&[(0, 0, re(h)), (1, 3, re(-h))]),
            ExpectedMagnitudes {
                i1: 0.0,
                i2: 0.0,
                i2a: 0.5,
                i2b: 0.0,
                i3: 0.0,
            },
            "i2a_max",
        )),
        // (φ₁⊗φ₁ - φ₂⊗φ₀)/√2
        "i2b_max" => Ok(entry(
            TwoSpinorState::from_terms(&[(1, 1, re(h)), (2, 0, re(-h))]),
            ExpectedMagnitudes {
                i1: 0.0,
                i2: 0.0,
                i2a: 0.0,
                i2b: 0.5,
                i3: 0.0,
            },
            "i2b_max",
        )),
        // (φ₀⊗φ₁ + iφ₁⊗φ₂ - φ₂⊗φ₃ + iφ₃⊗φ₀)/2: the unique-support shape
        // with every degree-2 invariant zero and |det| at its extremal 1/16.
        "i3_max" => Ok(entry(
            TwoSpinorState::from_terms(&[
                (0, 1, re(q)),
                (1, 2, im(q)),
                (2, 3, re(-q)),
                (3, 0, im(q)),
            ]),
            ExpectedMagnitudes {
                i1: 0.0,
                i2: 0.0,
                i2a: 0.0,
                i2b: 0.0,
                i3: 0.0625,
            },
            "i3_max",
        )),
        // [(φ₁+φ₃)⊗(φ₀+φ₂) - i(φ₀+φ₂)⊗(φ₁+φ₃)]/√8
        "chiral_epr" => Ok(entry(
            TwoSpinorState::from_terms(&[
                (1, 0, re(e)),
                (1, 2, re(e)),
                (3, 0, re(e)),
                (3, 2, re(e)),
                (0, 1, im(-e)),
                (0, 3, im(-e)),
                (2, 1, im(-e)),
                (2, 3, im(-e)),
            ]),
            ExpectedMagnitudes {
                i1: 0.5,
                i2: 0.5,
                i2a: 0.5,
                i2b: 0.5,
                i3: 0.0,
            },
            "chiral_epr",
        )),
        // (φ₀⊗φ₃ - iφ₁⊗φ₂)/√2
        "decay" => Ok(entry(
            TwoSpinorState::from_terms(&[(0, 3, re(h)), (1, 2, im(-h))]),
            ExpectedMagnitudes {
                i1: 0.5,
                i2: 0.0,
                i2a: 0.0,
                i2b: 0.0,
                i3: 0.0,
            },
            "decay",
        )),
        // (φ₀⊗φ₃ + φ₃⊗φ₀ - φ₁⊗φ₂ - φ₂⊗φ₁)/2
        "decay_symmetric" => Ok(entry(
            TwoSpinorState::from_terms(&[
                (0, 3, re(q)),
                (3, 0, re(q)),
                (1, 2, re(-q)),
                (2, 1, re(-q)),
            ]),
            ExpectedMagnitudes {
                i1: 0.5,
                i2: 0.5,
                i2a: 0.0,
                i2b: 0.0,
                i3: 0.0625,
            },
            "decay_symmetric",
        )),
        _ => Err(Error::UnknownCatalog {
            name: name.to_string(),
            valid: "epr, i2_max, i2a_max, i2b_max, i3_max, chiral_epr, decay, decay_symmetric",
        }),
    }
}

/// Deterministic random unit-norm spinor.
pub fn random_spinor(seed: u64) -> Spinor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut amps = CVec4::zero();
    for j in 0..4 {
        amps[j] = C64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
    }
    let n = amps.norm();
    Spinor::new(amps.scale(C64::new(1.0 / n, 0.0)))
}

/// Deterministic random unit-norm two-spinor state.
pub fn random_state(seed: u64) -> TwoSpinorState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = CMat4::from_fn(|_, _| {
        C64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
    });
    TwoSpinorState::new(coeffs).normalized()
}
