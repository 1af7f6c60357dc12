//! Dirac-type Hamiltonians on fixed-momentum subspaces, kernel-preservation
//! classification, constant and time-ordered evolution, gauge stripping, and
//! the closed-form I₁ oscillation for pure mass terms.
//!
//! Momentum substitution follows i∂_μ → -k_μ on plane waves e^{ik·x}, which
//! makes the base Dirac Hamiltonian
//!
//!   H = Σ_{μ=1..3} γ⁰γ^μ (k_μ + qA_μ) + qA₀ I + m γ⁰,
//!
//! with eigenvalues qA₀ ± √(Σ(k+qA)² + m²). Time dependence is realized as
//! piecewise-constant schedules; the ordered exponential 𝒯_← exp(-i∫H) is
//! evaluated by a per-step midpoint exponential, left-multiplied so later
//! times sit leftmost.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::algebra::{c_gamma5, conjugation_c, gamma, gamma5};
use crate::cmat::{mat_exp, CMat4};
use crate::error::{Error, Result};
use crate::states::{apply_local, TwoSpinorState};

/// Sign of the chirality part in a chiral vector coupling γ⁰γ^μ(I ± γ⁵)Z_μ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiralSign {
    Plus,
    Minus,
}

/// Extra Hamiltonian terms beyond the minimally-coupled Dirac part.
///
/// Every term is Hermitian for real inputs. Degrees in gamma matrices decide
/// which bilinear kernels survive the generated evolution: degree 1 and 2
/// preserve Cγ⁵, degree 2 and 3 preserve C, and the identity piece is pure
/// U(1) phase.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExtraTerm {
    /// Scalar Yukawa coupling gφ·γ⁰ (degree 1, like a mass shift).
    YukawaScalar { strength: f64 },
    /// Pseudoscalar Yukawa coupling gφ·iγ⁰γ⁵ (degree 3).
    YukawaPseudoscalar { strength: f64 },
    /// Pauli coupling i γ⁰γ^μγ^ν ∂_νA_μ (degree 3). `grad[mu][nu]` holds the
    /// constant ∂_νA_μ; only spatial entries with μ ≠ ν enter, which keeps
    /// the term Hermitian and purely cubic.
    PauliCoupling { grad: [[f64; 4]; 4] },
    /// Electroweak-style chiral coupling Σ_μ γ⁰γ^μ(I ± γ⁵)Z_μ with the
    /// coupling constant absorbed into Z. A nonzero time component Z₀
    /// contributes γ⁵ (degree 4), which breaks both kernels.
    ChiralCoupling { z: [f64; 4], sign: ChiralSign },
    /// Semenoff mass M_S γ⁰γ³ (degree 2).
    Semenoff { m_s: f64 },
    /// Haldane mass M_H γ⁵γ⁰γ³ (degree 2).
    Haldane { m_h: f64 },
    /// 2D Dirac-semimetal kinetic term -v_D Σ_{μ=1,2} k_μ γ⁰γ^μ - μ_P I
    /// (the sign comes from the same i∂ → -k substitution as the base part).
    Semimetal2d { v_d: f64, mu_p: f64 },
    /// 3D Dirac-semimetal kinetic term -v_D Σ_{μ=1..3} k_μ γ⁰γ^μ.
    Semimetal3d { v_d: f64 },
}

/// Declarative description of one lab's Hamiltonian on a fixed-momentum
/// subspace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianSpec {
    /// Particle mass m ≥ 0 (natural units).
    pub mass: f64,
    /// Charge q.
    pub charge: f64,
    /// Wave vector (k₁, k₂, k₃) of the subspace.
    pub momentum: [f64; 3],
    /// Constant four-potential (A₀, A₁, A₂, A₃).
    pub potential: [f64; 4],
    /// Additional terms.
    #[serde(default)]
    pub extras: Vec<ExtraTerm>,
}

impl HamiltonianSpec {
    /// Free particle of mass m at rest.
    pub fn mass_only(mass: f64) -> Self {
        Self {
            mass,
            charge: 0.0,
            momentum: [0.0; 3],
            potential: [0.0; 4],
            extras: Vec::new(),
        }
    }

    /// Minimally-coupled Dirac spec without extras.
    pub fn dirac(mass: f64, charge: f64, momentum: [f64; 3], potential: [f64; 4]) -> Self {
        Self {
            mass,
            charge,
            momentum,
            potential,
            extras: Vec::new(),
        }
    }

    pub fn with_extra(mut self, term: ExtraTerm) -> Self {
        self.extras.push(term);
        self
    }

    fn is_finite(&self) -> bool {
        let base = self.mass.is_finite()
            && self.charge.is_finite()
            && self.momentum.iter().all(|x| x.is_finite())
            && self.potential.iter().all(|x| x.is_finite());
        let extras = self.extras.iter().all(|t| match t {
            ExtraTerm::YukawaScalar { strength } | ExtraTerm::YukawaPseudoscalar { strength } => {
                strength.is_finite()
            }
            ExtraTerm::PauliCoupling { grad } => {
                grad.iter().flatten().all(|x| x.is_finite())
            }
            ExtraTerm::ChiralCoupling { z, .. } => z.iter().all(|x| x.is_finite()),
            ExtraTerm::Semenoff { m_s } => m_s.is_finite(),
            ExtraTerm::Haldane { m_h } => m_h.is_finite(),
            ExtraTerm::Semimetal2d { v_d, mu_p } => v_d.is_finite() && mu_p.is_finite(),
            ExtraTerm::Semimetal3d { v_d } => v_d.is_finite(),
        });
        base && extras
    }

    /// Kinetic momentum k_μ + qA_μ for μ = 1..3.
    pub fn kinetic_momentum(&self) -> [f64; 3] {
        [
            self.momentum[0] + self.charge * self.potential[1],
            self.momentum[1] + self.charge * self.potential[2],
            self.momentum[2] + self.charge * self.potential[3],
        ]
    }
}

/// Which antisymmetric kernels a Hamiltonian preserves under the generated
/// evolution, decided by the X H = -Hᵀ X test after removing the identity
/// component (which only contributes a global U(1) phase).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BilinearFlags {
    pub preserves_c: bool,
    pub preserves_cg5: bool,
}

/// Build the 4×4 Hamiltonian matrix of a spec.
pub fn build_hamiltonian(spec: &HamiltonianSpec) -> Result<CMat4> {
    if !spec.is_finite() {
        return Err(Error::NonFinite {
            context: "Hamiltonian spec",
        });
    }
    let re = |x: f64| C64::new(x, 0.0);
    let im = |x: f64| C64::new(0.0, x);
    let g0 = gamma(0);
    let mut h = CMat4::zero();

    // Base Dirac part: Σ γ⁰γ^μ(k_μ + qA_μ) + qA₀ I + m γ⁰.
    let pi = spec.kinetic_momentum();
    for mu in 1..=3 {
        if pi[mu - 1] != 0.0 {
            h = h + (g0 * gamma(mu)).scale(re(pi[mu - 1]));
        }
    }
    h = h + CMat4::identity().scale(re(spec.charge * spec.potential[0]));
    h = h + g0.scale(re(spec.mass));

    for term in &spec.extras {
        match term {
            ExtraTerm::YukawaScalar { strength } => {
                h = h + g0.scale(re(*strength));
            }
            ExtraTerm::YukawaPseudoscalar { strength } => {
                h = h + (g0 * gamma5()).scale(im(*strength));
            }
            ExtraTerm::PauliCoupling { grad } => {
                for mu in 1..=3 {
                    for nu in 1..=3 {
                        if mu != nu && grad[mu][nu] != 0.0 {
                            h = h + (g0 * gamma(mu) * gamma(nu)).scale(im(grad[mu][nu]));
                        }
                    }
                }
            }
            ExtraTerm::ChiralCoupling { z, sign } => {
                let s = match sign {
                    ChiralSign::Plus => 1.0,
                    ChiralSign::Minus => -1.0,
                };
                let chir = CMat4::identity() + gamma5().scale(re(s));
                for mu in 0..4 {
                    if z[mu] != 0.0 {
                        h = h + (g0 * gamma(mu) * chir).scale(re(z[mu]));
                    }
                }
            }
            ExtraTerm::Semenoff { m_s } => {
                h = h + (g0 * gamma(3)).scale(re(*m_s));
            }
            ExtraTerm::Haldane { m_h } => {
                h = h + (gamma5() * g0 * gamma(3)).scale(re(*m_h));
            }
            ExtraTerm::Semimetal2d { v_d, mu_p } => {
                for mu in 1..=2 {
                    if spec.momentum[mu - 1] != 0.0 {
                        h = h + (g0 * gamma(mu)).scale(re(-v_d * spec.momentum[mu - 1]));
                    }
                }
                h = h + CMat4::identity().scale(re(-mu_p));
            }
            ExtraTerm::Semimetal3d { v_d } => {
                for mu in 1..=3 {
                    if spec.momentum[mu - 1] != 0.0 {
                        h = h + (g0 * gamma(mu)).scale(re(-v_d * spec.momentum[mu - 1]));
                    }
                }
            }
        }
    }
    Ok(h)
}

/// Tolerance for the kernel-preservation test.
const PRESERVE_TOL: f64 = 1e-12;

/// Classify which kernels a Hamiltonian matrix preserves.
pub fn preserved_bilinears(h: &CMat4) -> BilinearFlags {
    // Remove the identity component: it commutes with both kernels and only
    // produces a U(1) phase on the bilinears.
    let id_coeff = h.trace() * C64::new(0.25, 0.0);
    let stripped = *h - CMat4::identity().scale(id_coeff);
    let scale = stripped.max_abs().max(1.0);
    let c = conjugation_c();
    let cg5 = c_gamma5();
    let c_defect = (c * stripped + stripped.transpose() * c).max_abs();
    let cg5_defect = (cg5 * stripped + stripped.transpose() * cg5).max_abs();
    BilinearFlags {
        preserves_c: c_defect <= PRESERVE_TOL * scale,
        preserves_cg5: cg5_defect <= PRESERVE_TOL * scale,
    }
}

/// Remove the scalar (identity) pieces a spec contributes through qA₀ and
/// the semimetal chemical potential μ_P, returning the stripped spec and the
/// removed rate: U(spec) = e^{-i·rate·t} U(spec').
///
/// A chiral coupling with nonzero time component also carries an identity
/// piece, but that piece is inseparable from its γ⁵ partner at the spec
/// level, so chiral terms are left untouched; `preserved_bilinears` exempts
/// the identity component structurally either way.
pub fn gauge_strip(spec: &HamiltonianSpec) -> (HamiltonianSpec, f64) {
    let mut stripped = spec.clone();
    let mut rate = spec.charge * spec.potential[0];
    stripped.potential[0] = 0.0;
    for term in &mut stripped.extras {
        if let ExtraTerm::Semimetal2d { mu_p, .. } = term {
            rate -= *mu_p;
            *mu_p = 0.0;
        }
    }
    (stripped, rate)
}

/// exp(-iHt) for a constant Hermitian H; unitary by construction.
///
/// Large values of ‖H‖·|t| are handled by splitting the interval so each
/// factor stays well inside the matrix-exponential accuracy range.
pub fn evolve_constant(h: &CMat4, t: f64) -> Result<CMat4> {
    let defect = h.hermiticity_defect();
    if defect > 1e-10 * h.max_abs().max(1.0) {
        return Err(Error::NonHermitian { deviation: defect });
    }
    let norm = h.norm_spectral() * t.abs();
    let pieces = (norm / 8.0).ceil().max(1.0) as u64;
    let exponent = h.scale(C64::new(0.0, -t / pieces as f64));
    let factor = mat_exp(&exponent)?;
    Ok(factor.powi(pieces))
}

/// One segment of a piecewise-constant schedule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    /// Duration Δt > 0.
    pub duration: f64,
    /// Hamiltonian active during this segment.
    pub spec: HamiltonianSpec,
}

/// Piecewise-constant time dependence H(t): segments are consumed in order,
/// and the final segment extends past the nominal total duration when an
/// evolution is asked to run longer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    pub segments: Vec<Segment>,
}

impl Schedule {
    pub fn new(segments: Vec<Segment>) -> Self {
        Self { segments }
    }

    /// Single constant Hamiltonian over `duration`.
    pub fn constant(spec: HamiltonianSpec, duration: f64) -> Self {
        Self::new(vec![Segment { duration, spec }])
    }

    pub fn total_duration(&self) -> f64 {
        self.segments.iter().map(|s| s.duration).sum()
    }

    fn validated(&self) -> Result<()> {
        let durations_ok = self
            .segments
            .iter()
            .all(|s| s.duration.is_finite() && s.duration >= 0.0);
        if self.segments.is_empty() || !durations_ok {
            return Err(Error::EmptySchedule);
        }
        Ok(())
    }

    /// Spec active at time t (final segment extended indefinitely).
    pub fn spec_at(&self, t: f64) -> &HamiltonianSpec {
        let mut acc = 0.0;
        for seg in &self.segments {
            acc += seg.duration;
            if t < acc {
                return &seg.spec;
            }
        }
        &self.segments.last().expect("validated schedule").spec
    }
}

/// Time-ordered midpoint stepper for an arbitrary matrix-valued H(t):
/// U = Π_k exp(-i H(t_mid,k) h) with later factors multiplied on the left.
///
/// Exact for H constant on each step; global order 2 on smooth H(t).
pub fn evolve_midpoint(
    h_of_t: impl Fn(f64) -> CMat4,
    t0: f64,
    t1: f64,
    steps: usize,
) -> Result<CMat4> {
    assert!(steps >= 1, "midpoint stepper needs at least one step");
    let dt = (t1 - t0) / steps as f64;
    let mut u = CMat4::identity();
    for k in 0..steps {
        let t_mid = t0 + (k as f64 + 0.5) * dt;
        let factor = evolve_constant(&h_of_t(t_mid), dt)?;
        u = factor * u;
    }
    Ok(u)
}

/// Ordered evolution over a piecewise-constant schedule, `steps_per_segment`
/// midpoint steps inside each segment. For piecewise-constant schedules the
/// per-segment stepper is exact, so any step count reproduces the product of
/// segment exponentials.
pub fn evolve_ordered(schedule: &Schedule, steps_per_segment: usize) -> Result<CMat4> {
    schedule.validated()?;
    assert!(steps_per_segment >= 1, "steps_per_segment must be >= 1");
    let mut u = CMat4::identity();
    for seg in &schedule.segments {
        if seg.duration == 0.0 {
            continue;
        }
        let h = build_hamiltonian(&seg.spec)?;
        let seg_u = evolve_midpoint(|_| h, 0.0, seg.duration, steps_per_segment)?;
        u = seg_u * u;
    }
    Ok(u)
}

/// Evolve a schedule up to an arbitrary time t ≥ 0; the final segment is
/// extended as a constant tail when t exceeds the nominal total duration.
pub fn evolve_until(schedule: &Schedule, t: f64) -> Result<CMat4> {
    schedule.validated()?;
    let mut u = CMat4::identity();
    let mut remaining = t;
    for (idx, seg) in schedule.segments.iter().enumerate() {
        if remaining <= 0.0 {
            break;
        }
        let last = idx + 1 == schedule.segments.len();
        let span = if last {
            remaining
        } else {
            seg.duration.min(remaining)
        };
        if span > 0.0 {
            let h = build_hamiltonian(&seg.spec)?;
            u = evolve_constant(&h, span)? * u;
        }
        remaining -= span;
    }
    Ok(u)
}

/// Two-lab evolution: Ψ → U_A Ψ U_Bᵀ with each U = 𝒯_← exp(-i∫H).
pub fn evolve_two_lab(
    state: &TwoSpinorState,
    sched_a: &Schedule,
    sched_b: &Schedule,
    steps_per_segment: usize,
) -> Result<TwoSpinorState> {
    let u_a = evolve_ordered(sched_a, steps_per_segment)?;
    let u_b = evolve_ordered(sched_b, steps_per_segment)?;
    Ok(apply_local(state, &u_a, &u_b))
}

/// Closed-form I₁(t_A, t_B) for pure mass terms (zero momenta and
/// potentials): the four block determinants of the initial state weighted by
/// their mass phases,
///
///   I₁ = e^{-2i(m_A t_A + m_B t_B)} D_UL + e^{-2i(m_A t_A - m_B t_B)} D_UR
///      + e^{+2i(m_A t_A - m_B t_B)} D_LL + e^{+2i(m_A t_A + m_B t_B)} D_LR.
///
/// Each constituent determinant keeps a constant magnitude, so states with a
/// single nonzero block (such as the EPR state) have |I₁| constant in time.
/// For an electron the oscillation frequency 2m is the Zitterbewegung value,
/// about 1.55e21 rad/s.
pub fn i1_closed_form(state0: &TwoSpinorState, m_a: f64, m_b: f64, t_a: f64, t_b: f64) -> C64 {
    let [d_ul, d_ur, d_ll, d_lr] = crate::invariants::block_determinants(state0);
    let phase = |x: f64| C64::new(0.0, x).exp();
    phase(-2.0 * (m_a * t_a + m_b * t_b)) * d_ul
        + phase(-2.0 * (m_a * t_a - m_b * t_b)) * d_ur
        + phase(2.0 * (m_a * t_a - m_b * t_b)) * d_ll
        + phase(2.0 * (m_a * t_a + m_b * t_b)) * d_lr
}

/// Oscillation periods π/√(Σ(k+qA)² + m²) of the invariant values under
/// constant Dirac evolution in each lab; `None` marks the aperiodic
/// (massless, zero kinetic momentum) case.
pub fn predict_periods(
    spec_a: &HamiltonianSpec,
    spec_b: &HamiltonianSpec,
) -> (Option<f64>, Option<f64>) {
    let period = |spec: &HamiltonianSpec| {
        let pi = spec.kinetic_momentum();
        let e2 = pi.iter().map(|x| x * x).sum::<f64>() + spec.mass * spec.mass;
        if e2 > 0.0 {
            Some(std::f64::consts::PI / e2.sqrt())
        } else {
            None
        }
    };
    (period(spec_a), period(spec_b))
}
