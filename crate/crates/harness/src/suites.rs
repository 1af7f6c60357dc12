//! Property suites: executable forms of the library's invariance claims,
//! runnable via `dent verify` and reused by the acceptance tests.
//!
//! A suite is a list of named properties, each reporting its worst-case
//! deviation. Reports are deterministic in (suite, seed, trials, tolerance):
//! identical arguments produce byte-identical text.

use dirac_entanglement::algebra::{c_gamma5, chiral_projector, conjugation_c, gamma, gamma5, Hand};
use dirac_entanglement::cmat::{mat_exp, random_hermitian, random_matrix, CMat4};
use dirac_entanglement::evolution::{
    build_hamiltonian, evolve_constant, evolve_midpoint, evolve_ordered, gauge_strip,
    preserved_bilinears, ChiralSign, ExtraTerm, HamiltonianSpec, Schedule, Segment,
};
use dirac_entanglement::foldy::{
    fw_generator, fw_hamiltonian2, fw_invariants, fw_transform_state, pauli_hamiltonian,
    upper_block, FWContext, FWFieldData,
};
use dirac_entanglement::invariants::{
    all_invariants, block_determinants, i1, i1_blocks, i2, i2a, i2b, i3, i3_det, i3_trace_c,
    i3_trace_cg5, wootters_weyl,
};
use dirac_entanglement::lorentz::{random_lorentz, random_sl4, spinor_rep, vector_rep};
use dirac_entanglement::states::{
    apply_local, catalog, product_state, random_spinor, random_state, weyl_project, Side,
    TwoSpinorState, CATALOG_NAMES,
};
use dirac_entanglement::Complex64 as C64;

use crate::tolerances as tol;
use crate::{period::fit_period, HarnessError, Result};

/// How a property's worst-case deviation compares against its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Pass when worst <= tolerance (agreement checks).
    AtMost,
    /// Pass when worst >= tolerance (existential "visibly broken" checks).
    AtLeast,
}

/// Outcome of one property.
#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub worst: f64,
    pub tolerance: f64,
    pub direction: Direction,
    pub counterexample: Option<String>,
}

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub tolerance: f64,
    pub properties: Vec<PropertyResult>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    /// Deterministic text rendering; identical inputs give identical bytes.
    pub fn render(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "suite: {}", self.suite).unwrap();
        writeln!(out, "seed: {}", self.seed).unwrap();
        writeln!(out, "trials: {}", self.trials).unwrap();
        writeln!(out, "runner tolerance: {:.17e}", self.tolerance).unwrap();
        writeln!(out, "properties:").unwrap();
        for p in &self.properties {
            let status = if p.passed { "PASS" } else { "FAIL" };
            let rule = match p.direction {
                Direction::AtMost => "<=",
                Direction::AtLeast => ">=",
            };
            writeln!(
                out,
                "  {status} {:<44} worst {:.17e}  required {rule} {:.17e}",
                p.name, p.worst, p.tolerance
            )
            .unwrap();
            if !p.passed {
                if let Some(ce) = &p.counterexample {
                    writeln!(out, "       counterexample: {ce}").unwrap();
                }
            }
        }
        let passed = self.properties.iter().filter(|p| p.passed).count();
        writeln!(
            out,
            "result: {} ({passed}/{} properties)",
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.properties.len()
        )
        .unwrap();
        out
    }
}

/// Worst-deviation tracker that keeps a dump of the extremal case.
struct Worst {
    dev: f64,
    dump: Option<String>,
    largest_is_worst: bool,
}

impl Worst {
    fn largest() -> Self {
        Self {
            dev: 0.0,
            dump: None,
            largest_is_worst: true,
        }
    }

    /// For AtLeast checks the *smallest* observation is the binding one.
    fn smallest() -> Self {
        Self {
            dev: f64::INFINITY,
            dump: None,
            largest_is_worst: false,
        }
    }

    fn update(&mut self, dev: f64, dump: impl FnOnce() -> String) {
        let binding = if self.largest_is_worst {
            dev > self.dev
        } else {
            dev < self.dev
        };
        if binding {
            self.dev = dev;
            self.dump = Some(dump());
        }
    }
}

/// Bilinear kernels used by the kernel-sensitive properties. Tests inject a
/// corrupted kernel here to prove the suites catch real defects.
#[derive(Clone, Copy)]
pub(crate) struct Kernels {
    pub c: CMat4,
    pub cg5: CMat4,
}

impl Kernels {
    pub(crate) fn standard() -> Self {
        Self {
            c: conjugation_c(),
            cg5: c_gamma5(),
        }
    }
}

fn result(
    name: &'static str,
    worst: Worst,
    pinned: f64,
    direction: Direction,
    runner_tol: f64,
) -> PropertyResult {
    let tolerance = match direction {
        Direction::AtMost => pinned.min(runner_tol),
        Direction::AtLeast => pinned,
    };
    let passed = match direction {
        Direction::AtMost => worst.dev <= tolerance,
        Direction::AtLeast => worst.dev >= tolerance,
    };
    PropertyResult {
        name,
        passed,
        worst: worst.dev,
        tolerance,
        direction,
        counterexample: if passed { None } else { worst.dump },
    }
}

fn mix(seed: u64, salt: u64, i: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(salt.wrapping_mul(0x1000_0000_01B3))
        .wrapping_add(i.wrapping_mul(7919))
}

// ---------------------------------------------------------------------------
// algebra suite
// ---------------------------------------------------------------------------

/// All ordered products of 1..=4 distinct gamma matrices.
fn distinct_gamma_products() -> Vec<(Vec<usize>, CMat4)> {
    let mut out = Vec::new();
    let mut build = |indices: &[usize]| {
        let mut m = CMat4::identity();
        for &mu in indices {
            m = m * gamma(mu);
        }
        out.push((indices.to_vec(), m));
    };
    for a in 0..4 {
        build(&[a]);
        for b in 0..4 {
            if b == a {
                continue;
            }
            build(&[a, b]);
            for c in 0..4 {
                if c == a || c == b {
                    continue;
                }
                build(&[a, b, c]);
                for d in 0..4 {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    build(&[a, b, c, d]);
                }
            }
        }
    }
    out
}

fn algebra_suite(seed: u64, trials: u64, runner_tol: f64) -> Vec<PropertyResult> {
    let mut props = Vec::new();
    let metric = dirac_entanglement::algebra::metric;

    // {γ^μ, γ^ν} = 2 g^{μν} I, all sixteen pairs.
    let mut w = Worst::largest();
    for mu in 0..4 {
        for nu in 0..4 {
            let anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
            let want = CMat4::identity().scale(C64::new(2.0 * metric(mu, nu), 0.0));
            w.update(anti.max_abs_diff(&want), || format!("pair ({mu},{nu})"));
        }
    }
    props.push(result(
        "clifford_relations",
        w,
        tol::EXACT_ALGEBRA,
        Direction::AtMost,
        runner_tol,
    ));

    // γ^{μT} = C γ^μ C.
    let c = conjugation_c();
    let mut w = Worst::largest();
    for mu in 0..4 {
        w.update(
            gamma(mu).transpose().max_abs_diff(&(c * gamma(mu) * c)),
            || format!("mu = {mu}"),
        );
    }
    props.push(result(
        "gamma_transpose_conjugation",
        w,
        tol::EXACT_ALGEBRA,
        Direction::AtMost,
        runner_tol,
    ));

    // Antisymmetry of both kernels.
    let cg5 = c_gamma5();
    let mut w = Worst::largest();
    w.update((c.transpose() + c).max_abs(), || "C".to_string());
    w.update((cg5.transpose() + cg5).max_abs(), || "Cg5".to_string());
    props.push(result(
        "kernel_antisymmetry",
        w,
        tol::EXACT_ALGEBRA,
        Direction::AtMost,
        runner_tol,
    ));

    // Transpose tables: (Π γ)ᵀ C = s C (Π γ) with s = +,-,-,+ by length, and
    // (Π γ)ᵀ Cγ⁵ = s' Cγ⁵ (Π γ) with s' = -,-,+,+.
    let sign_c = [1.0, -1.0, -1.0, 1.0];
    let sign_cg5 = [-1.0, -1.0, 1.0, 1.0];
    let mut w_c = Worst::largest();
    let mut w_cg5 = Worst::largest();
    for (indices, prod) in distinct_gamma_products() {
        let len = indices.len();
        let lhs_c = prod.transpose() * c;
        let rhs_c = (c * prod).scale(C64::new(sign_c[len - 1], 0.0));
        w_c.update(lhs_c.max_abs_diff(&rhs_c), || format!("product {indices:?}"));
        let lhs_g = prod.transpose() * cg5;
        let rhs_g = (cg5 * prod).scale(C64::new(sign_cg5[len - 1], 0.0));
        w_cg5.update(lhs_g.max_abs_diff(&rhs_g), || format!("product {indices:?}"));
    }
    props.push(result(
        "transpose_table_c",
        w_c,
        tol::EXACT_ALGEBRA,
        Direction::AtMost,
        runner_tol,
    ));
    props.push(result(
        "transpose_table_c_gamma5",
        w_cg5,
        tol::EXACT_ALGEBRA,
        Direction::AtMost,
        runner_tol,
    ));

    // γ⁵ construction and involution properties.
    let mut w = Worst::largest();
    let g5 = gamma5();
    let prod = (gamma(0) * gamma(1) * gamma(2) * gamma(3)).scale(C64::new(0.0, 1.0));
    w.update(g5.max_abs_diff(&prod), || "iγ⁰γ¹γ²γ³".to_string());
    w.update((g5 * g5).max_abs_diff(&CMat4::identity()), || "γ⁵²".to_string());
    for mu in 0..4 {
        w.update((g5 * gamma(mu) + gamma(mu) * g5).max_abs(), || {
            format!("anticommutator mu = {mu}")
        });
    }
    let pl = chiral_projector(Hand::Left);
    let pr = chiral_projector(Hand::Right);
    w.update((pl + pr).max_abs_diff(&CMat4::identity()), || {
        "projector completeness".to_string()
    });
    props.push(result(
        "gamma5_and_projectors",
        w,
        tol::EXACT_ALGEBRA,
        Direction::AtMost,
        runner_tol,
    ));

    // exp(A)·exp(-A) = I on random matrices with spectral norm <= 5.
    let mut w = Worst::largest();
    for i in 0..trials {
        let m = random_matrix(mix(seed, 11, i), 0.9);
        let e = mat_exp(&m).expect("norm within bound");
        let e_neg = mat_exp(&m.scale(C64::new(-1.0, 0.0))).expect("norm within bound");
        w.update((e * e_neg).max_abs_diff(&CMat4::identity()), || {
            format!("trial {i}")
        });
    }
    props.push(result(
        "mat_exp_inverse_pairing",
        w,
        tol::EXP_IDENTITY,
        Direction::AtMost,
        runner_tol,
    ));

    // exp against an independent scaled Taylor reference, norms up to ~8.
    let mut w = Worst::largest();
    for i in 0..(trials / 10).max(10) {
        let m = random_matrix(mix(seed, 12, i), 1.4);
        let got = mat_exp(&m).expect("norm within bound");
        let want = taylor_exp_reference(&m);
        let rel = got.max_abs_diff(&want) / want.max_abs().max(1.0);
        w.update(rel, || format!("trial {i}"));
    }
    props.push(result(
        "mat_exp_vs_series_reference",
        w,
        tol::EXP_IDENTITY,
        Direction::AtMost,
        runner_tol,
    ));

    props
}

/// Independent matrix-exponential reference: scale to norm <= 1/2, Taylor to
/// order 30, square back up.
fn taylor_exp_reference(m: &CMat4) -> CMat4 {
    let norm = m.norm_one();
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let a = m.scale(C64::new(1.0 / f64::powi(2.0, s as i32), 0.0));
    let mut term = CMat4::identity();
    let mut sum = CMat4::identity();
    for k in 1..=30 {
        term = (term * a).scale(C64::new(1.0 / k as f64, 0.0));
        sum = sum + term;
    }
    let mut r = sum;
    for _ in 0..s {
        r = r * r;
    }
    r
}

// ---------------------------------------------------------------------------
// lorentz suite
// ---------------------------------------------------------------------------

fn lorentz_suite(seed: u64, trials: u64, runner_tol: f64) -> Vec<PropertyResult> {
    let mut props = Vec::new();
    let c = conjugation_c();
    let cg5 = c_gamma5();
    let metric = dirac_entanglement::algebra::metric;

    // S(Λ)ᵀ X S(Λ) = X for both kernels over random parameters.
    let mut w_c = Worst::largest();
    let mut w_g = Worst::largest();
    for i in 0..trials {
        let params = random_lorentz(mix(seed, 21, i), 0.5);
        let s = spinor_rep(&params);
        w_c.update((s.transpose() * c * s).max_abs_diff(&c), || {
            format!("trial {i}, omega = {:?}", params.components())
        });
        w_g.update((s.transpose() * cg5 * s).max_abs_diff(&cg5), || {
            format!("trial {i}, omega = {:?}", params.components())
        });
    }
    props.push(result(
        "spinor_rep_preserves_c",
        w_c,
        tol::LORENTZ_FUZZ,
        Direction::AtMost,
        runner_tol,
    ));
    props.push(result(
        "spinor_rep_preserves_c_gamma5",
        w_g,
        tol::LORENTZ_FUZZ,
        Direction::AtMost,
        runner_tol,
    ));

    // S⁻¹ γ^μ S = Σ Λ^μ_ν γ^ν and Λᵀ g Λ = g, det Λ = 1.
    let vec_trials = trials;
    let mut w_conj = Worst::largest();
    let mut w_metric = Worst::largest();
    for i in 0..vec_trials {
        let params = random_lorentz(mix(seed, 22, i), 0.5);
        let s = spinor_rep(&params);
        let s_inv = s.inverse().expect("invertible");
        let lambda = vector_rep(&params);
        for mu in 0..4 {
            let lhs = s_inv * gamma(mu) * s;
            let mut rhs = CMat4::zero();
            for nu in 0..4 {
                rhs = rhs + gamma(nu).scale(C64::new(lambda[mu][nu], 0.0));
            }
            w_conj.update(lhs.max_abs_diff(&rhs), || format!("trial {i}, mu = {mu}"));
        }
        for a in 0..4 {
            for b in 0..4 {
                let mut acc = 0.0;
                for mu in 0..4 {
                    acc += lambda[mu][a] * metric(mu, mu) * lambda[mu][b];
                }
                w_metric.update((acc - metric(a, b)).abs(), || {
                    format!("trial {i}, entry ({a},{b})")
                });
            }
        }
        let det = CMat4::from_fn(|r, cidx| C64::new(lambda[r][cidx], 0.0)).det();
        w_metric.update((det - C64::new(1.0, 0.0)).norm(), || {
            format!("trial {i}, det Λ")
        });
    }
    props.push(result(
        "vector_spinor_consistency",
        w_conj,
        tol::LORENTZ_FUZZ,
        Direction::AtMost,
        runner_tol,
    ));
    props.push(result(
        "vector_rep_metric_and_det",
        w_metric,
        tol::LORENTZ_FUZZ,
        Direction::AtMost,
        runner_tol,
    ));

    // Discrete kernel signs: γ⁰ᵀ C γ⁰ = C, γ⁰ᵀ Cγ⁵ γ⁰ = -Cγ⁵ and the CPT
    // versions with -iγ⁵.
    let g0 = gamma(0);
    let cpt = gamma5().scale(C64::new(0.0, -1.0));
    let mut w = Worst::largest();
    w.update((g0.transpose() * c * g0).max_abs_diff(&c), || "P on C".into());
    w.update((g0.transpose() * cg5 * g0).max_abs_diff(&-cg5), || {
        "P on Cγ⁵".into()
    });
    w.update((cpt.transpose() * c * cpt).max_abs_diff(&-c), || {
        "CPT on C".into()
    });
    w.update((cpt.transpose() * cg5 * cpt).max_abs_diff(&-cg5), || {
        "CPT on Cγ⁵".into()
    });
    props.push(result(
        "discrete_kernel_signs",
        w,
        tol::EXACT_ALGEBRA,
        Direction::AtMost,
        runner_tol,
    ));

    props
}

// ---------------------------------------------------------------------------
// invariance suite
// ---------------------------------------------------------------------------

fn invariance_suite(
    kernels: &Kernels,
    seed: u64,
    trials: u64,
    runner_tol: f64,
) -> Vec<PropertyResult> {
    let mut props = Vec::new();

    // Catalog regression against documented magnitudes.
    let mut w = Worst::largest();
    for name in CATALOG_NAMES {
        let entry = catalog(name).expect("catalog name");
        let rec = all_invariants(&entry.state);
        for (label, got, want) in [
            ("i1", rec.i1.norm(), entry.expected.i1),
            ("i2", rec.i2.norm(), entry.expected.i2),
            ("i2a", rec.i2a.norm(), entry.expected.i2a),
            ("i2b", rec.i2b.norm(), entry.expected.i2b),
            ("i3", rec.i3.norm(), entry.expected.i3),
        ] {
            w.update((got - want).abs(), || format!("{name}: |{label}|"));
        }
    }
    props.push(result(
        "catalog_regression",
        w,
        tol::CATALOG,
        Direction::AtMost,
        runner_tol,
    ));

    // Product states carry zero in every invariant.
    let mut w = Worst::largest();
    for i in 0..trials {
        let s = product_state(
            &random_spinor(mix(seed, 31, i)),
            &random_spinor(mix(seed, 32, i)),
        );
        let rec = all_invariants(&s);
        for (label, v) in [
            ("i1", rec.i1),
            ("i2", rec.i2),
            ("i2a", rec.i2a),
            ("i2b", rec.i2b),
            ("i3", rec.i3),
        ] {
            w.update(v.norm(), || format!("trial {i}: {label}"));
        }
    }
    props.push(result(
        "product_state_vanishing",
        w,
        tol::PRODUCT_VANISH,
        Direction::AtMost,
        runner_tol,
    ));

    // Exact invariance (value, not just magnitude) under random local
    // Lorentz pairs.
    let mut w = Worst::largest();
    for i in 0..trials {
        let state = random_state(mix(seed, 33, i));
        let pa = random_lorentz(mix(seed, 34, i), 0.5);
        let pb = random_lorentz(mix(seed, 35, i), 0.5);
        let transformed = apply_local(&state, &spinor_rep(&pa), &spinor_rep(&pb));
        let before = all_invariants(&state);
        let after = all_invariants(&transformed);
        for (label, b, a) in [
            ("i1", before.i1, after.i1),
            ("i2", before.i2, after.i2),
            ("i2a", before.i2a, after.i2a),
            ("i2b", before.i2b, after.i2b),
            ("i3", before.i3, after.i3),
        ] {
            let rel = (b - a).norm() / b.norm().max(1e-2);
            w.update(rel, || format!("trial {i}: {label} moved {b} -> {a}"));
        }
    }
    props.push(result(
        "local_lorentz_invariance",
        w,
        tol::INVARIANCE_REL,
        Direction::AtMost,
        runner_tol,
    ));

    // det Ψ under arbitrary determinant-one local pairs.
    let sl4_trials = (trials / 5).max(20);
    let mut w = Worst::largest();
    for i in 0..sl4_trials {
        let state = random_state(mix(seed, 36, i));
        let m_a = random_sl4(mix(seed, 37, i));
        let m_b = random_sl4(mix(seed, 38, i));
        let before = i3(&state);
        let after = i3(&apply_local(&state, &m_a, &m_b));
        let rel = (before - after).norm() / before.norm().max(1e-2);
        w.update(rel, || format!("trial {i}"));
    }
    props.push(result(
        "sl4_determinant_invariance",
        w,
        tol::INVARIANCE_REL,
        Direction::AtMost,
        runner_tol,
    ));

    // Coefficient expansions vs trace forms (with the injected kernels) vs
    // block/LU determinant routes.
    let mut w = Worst::largest();
    let half = C64::new(0.5, 0.0);
    for i in 0..trials {
        let s = random_state(mix(seed, 39, i));
        let psi = s.coeffs();
        let tr = |x: CMat4, y: CMat4| (psi.transpose() * x * *psi * y).trace() * half;
        let pairs = [
            ("i1", i1(&s), tr(kernels.c, kernels.c)),
            ("i2", i2(&s), tr(kernels.cg5, kernels.cg5)),
            ("i2a", i2a(&s), tr(kernels.c, kernels.cg5)),
            ("i2b", i2b(&s), tr(kernels.cg5, kernels.c)),
            ("i1_blocks", i1(&s), i1_blocks(&s)),
            ("i3_lu", i3(&s), i3_det(&s)),
            ("i3_trace_c", i3(&s), i3_trace_c(&s)),
            ("i3_trace_cg5", i3(&s), i3_trace_cg5(&s)),
        ];
        for (label, a, b) in pairs {
            w.update((a - b).norm(), || {
                format!("trial {i}: {label} routes disagree: {a} vs {b}")
            });
        }
    }
    props.push(result(
        "evaluation_route_agreement",
        w,
        tol::ROUTE_AGREEMENT,
        Direction::AtMost,
        runner_tol,
    ));

    // Parity sign table under single-lab γ⁰.
    let g0 = gamma(0);
    let id = CMat4::identity();
    let mut w = Worst::largest();
    for i in 0..trials.min(100) {
        let s = random_state(mix(seed, 40, i));
        let pa = apply_local(&s, &g0, &id);
        let pb = apply_local(&s, &id, &g0);
        for (label, dev) in [
            ("alice: i1 fixed", (i1(&pa) - i1(&s)).norm()),
            ("alice: i2a fixed", (i2a(&pa) - i2a(&s)).norm()),
            ("alice: i2 flips", (i2(&pa) + i2(&s)).norm()),
            ("alice: i2b flips", (i2b(&pa) + i2b(&s)).norm()),
            ("bob: i1 fixed", (i1(&pb) - i1(&s)).norm()),
            ("bob: i2b fixed", (i2b(&pb) - i2b(&s)).norm()),
            ("bob: i2 flips", (i2(&pb) + i2(&s)).norm()),
            ("bob: i2a flips", (i2a(&pb) + i2a(&s)).norm()),
        ] {
            w.update(dev, || format!("trial {i}: {label}"));
        }
    }
    props.push(result(
        "parity_sign_table",
        w,
        tol::ROUTE_AGREEMENT,
        Direction::AtMost,
        runner_tol,
    ));

    // One-sided CPT flips all four degree-2 values and fixes i3.
    let cpt = gamma5().scale(C64::new(0.0, -1.0));
    let mut w = Worst::largest();
    for i in 0..trials.min(100) {
        let s = random_state(mix(seed, 41, i));
        for (side, t) in [
            ("alice", apply_local(&s, &cpt, &id)),
            ("bob", apply_local(&s, &id, &cpt)),
        ] {
            w.update((i1(&t) + i1(&s)).norm(), || format!("trial {i} {side}: i1"));
            w.update((i2(&t) + i2(&s)).norm(), || format!("trial {i} {side}: i2"));
            w.update((i2a(&t) + i2a(&s)).norm(), || format!("trial {i} {side}: i2a"));
            w.update((i2b(&t) + i2b(&s)).norm(), || format!("trial {i} {side}: i2b"));
            w.update((i3(&t) - i3(&s)).norm(), || format!("trial {i} {side}: i3"));
        }
    }
    props.push(result(
        "one_sided_cpt_signs",
        w,
        tol::ROUTE_AGREEMENT,
        Direction::AtMost,
        runner_tol,
    ));

    // Weyl reduction to the concurrence polynomial.
    let weyl_trials = (trials / 5).max(20);
    let hands = [Hand::Right, Hand::Left];
    let mut w = Worst::largest();
    let mut w_i3 = Worst::largest();
    let mut produced = 0u64;
    let mut i = 0u64;
    while produced < weyl_trials && i < weyl_trials * 4 {
        let sseed = mix(seed, 42, i);
        i += 1;
        let projected = weyl_project(
            &weyl_project(&random_state(sseed), Side::A, hands[(i % 2) as usize]),
            Side::B,
            hands[((i / 2) % 2) as usize],
        );
        if projected.norm() < 1e-3 {
            continue;
        }
        produced += 1;
        let s = projected.normalized();
        let four_c = wootters_weyl(&s).expect("projected state is Weyl") * C64::new(4.0, 0.0);
        for (label, v) in [("i1", i1(&s)), ("i2", i2(&s)), ("i2a", i2a(&s)), ("i2b", i2b(&s))] {
            let dev = (v - four_c).norm().min((v + four_c).norm());
            w.update(dev, || format!("sample {i}: {label} vs ±4·concurrence"));
        }
        w_i3.update(i3(&s).norm(), || format!("sample {i}: i3"));
    }
    props.push(result(
        "weyl_reduction_to_concurrence",
        w,
        tol::WEYL_REDUCTION,
        Direction::AtMost,
        runner_tol,
    ));
    props.push(result(
        "weyl_i3_vanishes",
        w_i3,
        tol::WEYL_I3,
        Direction::AtMost,
        runner_tol,
    ));

    // Extremal-value bounds on unit-norm states.
    let mut w = Worst::largest();
    let mut states: Vec<(String, TwoSpinorState)> = (0..trials.min(300))
        .map(|i| (format!("random {i}"), random_state(mix(seed, 43, i))))
        .collect();
    for name in CATALOG_NAMES {
        states.push((name.to_string(), catalog(name).expect("name").state));
    }
    for (label, s) in &states {
        let rec = all_invariants(s);
        for v in [rec.i1, rec.i2, rec.i2a, rec.i2b] {
            w.update((v.norm() - 0.5).max(0.0), || format!("{label}: degree-2 bound"));
        }
        w.update((rec.i3.norm() - 0.0625).max(0.0), || format!("{label}: i3 bound"));
    }
    props.push(result(
        "extremal_value_bounds",
        w,
        tol::EXTREMAL_BOUND,
        Direction::AtMost,
        runner_tol,
    ));

    props
}

// ---------------------------------------------------------------------------
// evolution suite
// ---------------------------------------------------------------------------

fn massless_spec() -> HamiltonianSpec {
    HamiltonianSpec::dirac(0.0, 1.0, [0.4, -0.3, 0.2], [0.6, 0.1, -0.2, 0.3])
}

fn massive_spec() -> HamiltonianSpec {
    HamiltonianSpec::dirac(1.0, 1.0, [0.5, 0.0, 0.0], [0.2, 0.0, 0.1, 0.0])
}

fn term_class_specs() -> Vec<(&'static str, HamiltonianSpec, bool, bool)> {
    vec![
        ("massless_dirac", massless_spec(), true, true),
        ("mass_only", HamiltonianSpec::mass_only(1.3), false, true),
        (
            "yukawa_scalar",
            HamiltonianSpec::dirac(0.0, 0.0, [0.2, 0.0, 0.0], [0.0; 4])
                .with_extra(ExtraTerm::YukawaScalar { strength: 0.9 }),
            false,
            true,
        ),
        (
            "yukawa_pseudoscalar",
            HamiltonianSpec::mass_only(0.0)
                .with_extra(ExtraTerm::YukawaPseudoscalar { strength: 0.8 }),
            true,
            false,
        ),
        (
            "pauli_coupling",
            HamiltonianSpec::mass_only(0.0).with_extra(ExtraTerm::PauliCoupling {
                grad: [
                    [0.0; 4],
                    [0.0, 0.0, 0.4, -0.2],
                    [0.0, 0.3, 0.0, 0.1],
                    [0.0, -0.1, 0.2, 0.0],
                ],
            }),
            true,
            false,
        ),
        (
            "chiral_coupling",
            HamiltonianSpec::mass_only(0.0).with_extra(ExtraTerm::ChiralCoupling {
                z: [0.6, 0.3, 0.0, -0.2],
                sign: ChiralSign::Plus,
            }),
            false,
            false,
        ),
        (
            "mass_plus_pseudoscalar",
            HamiltonianSpec::mass_only(1.0)
                .with_extra(ExtraTerm::YukawaPseudoscalar { strength: 0.8 }),
            false,
            false,
        ),
        (
            "semenoff",
            HamiltonianSpec::dirac(0.0, 0.0, [0.3, 0.2, 0.0], [0.0; 4])
                .with_extra(ExtraTerm::Semenoff { m_s: 0.7 }),
            true,
            true,
        ),
        (
            "haldane",
            HamiltonianSpec::dirac(0.0, 0.0, [0.3, 0.2, 0.0], [0.0; 4])
                .with_extra(ExtraTerm::Haldane { m_h: 0.4 }),
            true,
            true,
        ),
        (
            "semimetal_2d",
            HamiltonianSpec::dirac(0.0, 0.0, [0.5, -0.4, 0.0], [0.0; 4])
                .with_extra(ExtraTerm::Semimetal2d { v_d: 0.8, mu_p: 0.3 }),
            true,
            true,
        ),
        (
            "semimetal_3d",
            HamiltonianSpec::dirac(0.0, 0.0, [0.5, -0.4, 0.6], [0.0; 4])
                .with_extra(ExtraTerm::Semimetal3d { v_d: 1.2 }),
            true,
            true,
        ),
    ]
}

/// Max drift of each invariant magnitude over [0, t_max].
fn magnitude_drift(
    state: &TwoSpinorState,
    spec_a: &HamiltonianSpec,
    spec_b: &HamiltonianSpec,
    t_max: f64,
    samples: usize,
) -> [f64; 5] {
    let h_a = build_hamiltonian(spec_a).expect("finite spec");
    let h_b = build_hamiltonian(spec_b).expect("finite spec");
    let base = all_invariants(state);
    let base_mags = [
        base.i1.norm(),
        base.i2.norm(),
        base.i2a.norm(),
        base.i2b.norm(),
        base.i3.norm(),
    ];
    let mut drift = [0.0f64; 5];
    for k in 1..=samples {
        let t = t_max * k as f64 / samples as f64;
        let u_a = evolve_constant(&h_a, t).expect("hermitian");
        let u_b = evolve_constant(&h_b, t).expect("hermitian");
        let rec = all_invariants(&apply_local(state, &u_a, &u_b));
        let mags = [
            rec.i1.norm(),
            rec.i2.norm(),
            rec.i2a.norm(),
            rec.i2b.norm(),
            rec.i3.norm(),
        ];
        for i in 0..5 {
            drift[i] = drift[i].max((mags[i] - base_mags[i]).abs());
        }
    }
    drift
}

fn evolution_suite(seed: u64, trials: u64, runner_tol: f64) -> Vec<PropertyResult> {
    let mut props = Vec::new();

    // Hermiticity over the term-class table plus random Dirac specs.
    let mut w = Worst::largest();
    for (label, spec, _, _) in term_class_specs() {
        let h = build_hamiltonian(&spec).expect("finite spec");
        w.update(h.hermiticity_defect(), || label.to_string());
    }
    for i in 0..trials.min(200) {
        let m = random_hermitian(mix(seed, 51, i), 0.5);
        let defect = m.hermiticity_defect();
        w.update(defect, || format!("random hermitian {i}"));
    }
    props.push(result(
        "hamiltonian_hermiticity",
        w,
        tol::HAMILTONIAN_HERMITICITY,
        Direction::AtMost,
        runner_tol,
    ));

    // (H - qA₀)² = E² I for minimally-coupled specs.
    let mut w = Worst::largest();
    for i in 0..trials.min(200) {
        let f = |k: u64| ((mix(seed, 52, i).wrapping_add(k * 7717) % 2000) as f64) / 1000.0 - 1.0;
        let spec = HamiltonianSpec::dirac(
            f(1).abs(),
            f(2),
            [f(3), f(4), f(5)],
            [f(6), f(7), f(8), f(9)],
        );
        let h = build_hamiltonian(&spec).expect("finite");
        let shifted = h - CMat4::identity().scale(C64::new(spec.charge * spec.potential[0], 0.0));
        let pi = spec.kinetic_momentum();
        let e2 = pi.iter().map(|x| x * x).sum::<f64>() + spec.mass * spec.mass;
        let dev = (shifted * shifted).max_abs_diff(&CMat4::identity().scale(C64::new(e2, 0.0)));
        w.update(dev, || format!("trial {i}: {spec:?}"));
    }
    props.push(result(
        "dirac_energy_identity",
        w,
        tol::EXP_IDENTITY,
        Direction::AtMost,
        runner_tol,
    ));

    // Kernel classification table.
    let mut w = Worst::largest();
    let mut mismatches = 0.0;
    for (label, spec, want_c, want_cg5) in term_class_specs() {
        let flags = preserved_bilinears(&build_hamiltonian(&spec).expect("finite"));
        if flags.preserves_c != want_c || flags.preserves_cg5 != want_cg5 {
            mismatches += 1.0;
            w.update(mismatches, || {
                format!(
                    "{label}: got (C: {}, Cγ⁵: {}), want (C: {want_c}, Cγ⁵: {want_cg5})",
                    flags.preserves_c, flags.preserves_cg5
                )
            });
        }
    }
    w.dev = mismatches;
    props.push(result(
        "kernel_classification_table",
        w,
        0.5,
        Direction::AtMost,
        runner_tol.max(0.5),
    ));

    // Preserved magnitudes: massless both sides moves nothing.
    let state = random_state(mix(seed, 53, 0));
    let drift = magnitude_drift(&state, &massless_spec(), &massless_spec(), 10.0, 40);
    let mut w = Worst::largest();
    for (i, d) in drift.iter().enumerate() {
        w.update(*d, || format!("invariant {i} under massless evolution"));
    }
    props.push(result(
        "massless_preserves_all_magnitudes",
        w,
        tol::DRIFT_PRESERVED,
        Direction::AtMost,
        runner_tol,
    ));

    // Massive both sides: |I₂| and |I₃| stay, |I₁| visibly moves on EPR.
    let epr = catalog("epr").expect("epr").state;
    let drift = magnitude_drift(&epr, &massive_spec(), &massive_spec(), 10.0, 60);
    let mut w = Worst::largest();
    w.update(drift[1], || "|I₂| under massive evolution".to_string());
    w.update(drift[4], || "|I₃| under massive evolution".to_string());
    props.push(result(
        "massive_preserves_i2_i3",
        w,
        tol::DRIFT_PRESERVED,
        Direction::AtMost,
        runner_tol,
    ));
    let mut w = Worst::smallest();
    w.update(drift[0], || "|I₁| drift on EPR".to_string());
    props.push(result(
        "massive_moves_i1_on_epr",
        w,
        tol::DRIFT_BROKEN_MIN,
        Direction::AtLeast,
        runner_tol,
    ));

    // One-sided mass: I₂A needs massless Alice, I₂B needs massless Bob.
    let s_a = catalog("i2a_max").expect("state").state;
    let s_b = catalog("i2b_max").expect("state").state;
    let d_a_massive_alice = magnitude_drift(&s_a, &massive_spec(), &massless_spec(), 8.0, 40);
    let d_b_massive_alice = magnitude_drift(&s_b, &massive_spec(), &massless_spec(), 8.0, 40);
    let d_a_massive_bob = magnitude_drift(&s_a, &massless_spec(), &massive_spec(), 8.0, 40);
    let d_b_massive_bob = magnitude_drift(&s_b, &massless_spec(), &massive_spec(), 8.0, 40);
    let mut w = Worst::largest();
    w.update(d_b_massive_alice[3], || "|I₂B| under massive Alice".into());
    w.update(d_a_massive_bob[2], || "|I₂A| under massive Bob".into());
    for d in [
        &d_a_massive_alice,
        &d_b_massive_alice,
        &d_a_massive_bob,
        &d_b_massive_bob,
    ] {
        w.update(d[1], || "|I₂| in one-sided configuration".into());
        w.update(d[4], || "|I₃| in one-sided configuration".into());
    }
    props.push(result(
        "one_sided_mass_preserved_set",
        w,
        tol::DRIFT_PRESERVED,
        Direction::AtMost,
        runner_tol,
    ));
    let mut w = Worst::smallest();
    w.update(d_a_massive_alice[2], || "|I₂A| under massive Alice".into());
    w.update(d_b_massive_bob[3], || "|I₂B| under massive Bob".into());
    props.push(result(
        "one_sided_mass_breaks_partner",
        w,
        tol::DRIFT_BROKEN_MIN,
        Direction::AtLeast,
        runner_tol,
    ));

    // Quadratic lattice terms preserve all five magnitudes.
    let mut w = Worst::largest();
    for (label, spec, want_c, want_cg5) in term_class_specs() {
        if !(want_c && want_cg5) {
            continue;
        }
        let drift = magnitude_drift(&state, &spec, &spec, 10.0, 30);
        for (i, d) in drift.iter().enumerate() {
            w.update(*d, || format!("{label}: invariant {i}"));
        }
    }
    props.push(result(
        "kernel_preserving_terms_preserve_magnitudes",
        w,
        tol::DRIFT_PRESERVED,
        Direction::AtMost,
        runner_tol,
    ));

    // Kernel-breaking combinations visibly move the affected invariants.
    let i2_state = catalog("i2_max").expect("state").state;
    let mut w = Worst::smallest();
    for (label, spec, want_c, want_cg5) in term_class_specs() {
        if want_c || want_cg5 {
            continue;
        }
        let d_epr = magnitude_drift(&epr, &spec, &spec, 6.0, 40);
        let d_i2 = magnitude_drift(&i2_state, &spec, &spec, 6.0, 40);
        w.update(d_epr[0], || format!("{label}: |I₁| on EPR"));
        w.update(d_i2[1], || format!("{label}: |I₂|"));
    }
    props.push(result(
        "kernel_breaking_terms_move_magnitudes",
        w,
        tol::DRIFT_BROKEN_MIN,
        Direction::AtLeast,
        runner_tol,
    ));

    // U(1) phase law for I₂ with constant scalar potentials.
    let q = 1.3;
    let (a0_a, a0_b) = (0.8, -0.35);
    let spec_a = HamiltonianSpec::dirac(0.9, q, [0.3, 0.1, 0.0], [a0_a, 0.2, 0.0, -0.1]);
    let spec_b = HamiltonianSpec::dirac(1.7, q, [0.0, -0.4, 0.2], [a0_b, 0.0, 0.3, 0.0]);
    let h_a = build_hamiltonian(&spec_a).expect("finite");
    let h_b = build_hamiltonian(&spec_b).expect("finite");
    let u1_state = random_state(mix(seed, 54, 0));
    let i2_0 = i2(&u1_state);
    let mut w = Worst::largest();
    for k in 0..40 {
        let t = 0.23 * k as f64;
        let u_a = evolve_constant(&h_a, t).expect("hermitian");
        let u_b = evolve_constant(&h_b, t).expect("hermitian");
        let i2_t = i2(&apply_local(&u1_state, &u_a, &u_b));
        let phase = (-C64::i() * C64::new(2.0 * q * (a0_a + a0_b) * t, 0.0)).exp();
        w.update((i2_t - phase * i2_0).norm(), || format!("t = {t}"));
    }
    props.push(result(
        "u1_phase_law_i2",
        w,
        tol::U1_PHASE,
        Direction::AtMost,
        runner_tol,
    ));

    // Gauge stripping factorizes the evolution.
    let mut w = Worst::largest();
    let (stripped, rate) = gauge_strip(&spec_a);
    for k in 1..=10 {
        let t = 0.37 * k as f64;
        let u_full = evolve_constant(&h_a, t).expect("hermitian");
        let u_strip = evolve_constant(&build_hamiltonian(&stripped).expect("finite"), t)
            .expect("hermitian");
        let phased = u_strip.scale((-C64::i() * C64::new(rate * t, 0.0)).exp());
        w.update(u_full.max_abs_diff(&phased), || format!("t = {t}"));
    }
    props.push(result(
        "gauge_strip_factorization",
        w,
        tol::ORDERING,
        Direction::AtMost,
        runner_tol,
    ));

    // Two-segment ordering: later segment multiplies on the left.
    let seg1 = HamiltonianSpec::mass_only(1.0);
    let seg2 = HamiltonianSpec::dirac(0.0, 0.0, [0.8, 0.0, 0.0], [0.0; 4]);
    let sched = Schedule::new(vec![
        Segment {
            duration: 0.9,
            spec: seg1.clone(),
        },
        Segment {
            duration: 0.4,
            spec: seg2.clone(),
        },
    ]);
    let got = evolve_ordered(&sched, 4).expect("valid schedule");
    let u1 = evolve_constant(&build_hamiltonian(&seg1).expect("finite"), 0.9).expect("hermitian");
    let u2 = evolve_constant(&build_hamiltonian(&seg2).expect("finite"), 0.4).expect("hermitian");
    let mut w = Worst::largest();
    w.update(got.max_abs_diff(&(u2 * u1)), || {
        "two-segment product order".to_string()
    });
    props.push(result(
        "time_ordering_two_segments",
        w,
        tol::ORDERING,
        Direction::AtMost,
        runner_tol,
    ));

    // Midpoint stepper converges at order 2 on a smooth schedule.
    let h_of_t = |t: f64| {
        gamma(0).scale(C64::new(t.cos(), 0.0))
            + (gamma(0) * gamma(1)).scale(C64::new((1.3 * t).sin(), 0.0))
    };
    let reference = evolve_midpoint(h_of_t, 0.0, 2.0, 4096).expect("hermitian");
    let e64 = evolve_midpoint(h_of_t, 0.0, 2.0, 64)
        .expect("hermitian")
        .max_abs_diff(&reference);
    let e128 = evolve_midpoint(h_of_t, 0.0, 2.0, 128)
        .expect("hermitian")
        .max_abs_diff(&reference);
    let ratio = e64 / e128;
    let mut w = Worst::largest();
    w.update((ratio - 4.0).abs(), || {
        format!("halving ratio {ratio}, errors {e64:.3e} / {e128:.3e}")
    });
    props.push(result(
        "midpoint_stepper_order_two",
        w,
        tol::RATIO_HIGH - 4.0,
        Direction::AtMost,
        runner_tol.max(tol::RATIO_HIGH - 4.0),
    ));

    // Closed-form I₁ against direct evolution on a coarse grid.
    let cf_state = random_state(mix(seed, 55, 0));
    let (m_a, m_b) = (1.0, 0.55);
    let ha = build_hamiltonian(&HamiltonianSpec::mass_only(m_a)).expect("finite");
    let hb = build_hamiltonian(&HamiltonianSpec::mass_only(m_b)).expect("finite");
    let mut w = Worst::largest();
    let n = 32;
    for ia in 0..n {
        let ta = 2.0 * std::f64::consts::PI * ia as f64 / (n - 1) as f64;
        let u_a = evolve_constant(&ha, ta).expect("hermitian");
        for ib in 0..n {
            let tb = 2.0 * std::f64::consts::PI * ib as f64 / (n - 1) as f64;
            let u_b = evolve_constant(&hb, tb).expect("hermitian");
            let direct = i1(&apply_local(&cf_state, &u_a, &u_b));
            let closed =
                dirac_entanglement::evolution::i1_closed_form(&cf_state, m_a, m_b, ta, tb);
            w.update((direct - closed).norm(), || format!("grid point ({ia},{ib})"));
        }
    }
    props.push(result(
        "i1_closed_form_agreement",
        w,
        tol::CLOSED_FORM,
        Direction::AtMost,
        runner_tol,
    ));

    // Fitted oscillation periods match the predictions.
    let mut w = Worst::largest();
    {
        // Pure mass: Re I₁(t_A) of the symmetric decay state is ½cos(2t).
        let state = catalog("decay_symmetric").expect("state").state;
        let spec = HamiltonianSpec::mass_only(1.0);
        let h = build_hamiltonian(&spec).expect("finite");
        let n = 256;
        let t_max = 4.0 * std::f64::consts::PI;
        let dt = t_max / n as f64;
        let series: Vec<f64> = (0..n)
            .map(|k| {
                let u = evolve_constant(&h, k as f64 * dt).expect("hermitian");
                i1(&apply_local(&state, &u, &CMat4::identity())).re
            })
            .collect();
        let fitted = fit_period(&series, dt).expect("oscillatory");
        let predicted =
            dirac_entanglement::evolution::predict_periods(&spec, &spec).0.expect("finite period");
        w.update((fitted - predicted).abs() / predicted, || {
            format!("pure-mass case: fitted {fitted}, predicted {predicted}")
        });
    }
    {
        // 3-4-5 spec: |I₁|(t_A) oscillates with period π/5.
        let state = catalog("decay_symmetric").expect("state").state;
        let spec = HamiltonianSpec::dirac(3.0, 1.0, [4.0, 0.0, 0.0], [0.0; 4]);
        let h = build_hamiltonian(&spec).expect("finite");
        let n = 256;
        let t_max = 2.0;
        let dt = t_max / n as f64;
        let series: Vec<f64> = (0..n)
            .map(|k| {
                let u = evolve_constant(&h, k as f64 * dt).expect("hermitian");
                i1(&apply_local(&state, &u, &CMat4::identity())).norm()
            })
            .collect();
        let fitted = fit_period(&series, dt).expect("oscillatory");
        let predicted =
            dirac_entanglement::evolution::predict_periods(&spec, &spec).0.expect("finite period");
        w.update((fitted - predicted).abs() / predicted, || {
            format!("3-4-5 case: fitted {fitted}, predicted {predicted}")
        });
    }
    props.push(result(
        "fitted_periods_match_prediction",
        w,
        tol::PERIOD_FIT_REL,
        Direction::AtMost,
        runner_tol.max(tol::PERIOD_FIT_REL),
    ));

    props
}

// ---------------------------------------------------------------------------
// fw suite
// ---------------------------------------------------------------------------

fn fw_sample_spec(seed: u64) -> HamiltonianSpec {
    let f = |k: u64| ((seed.wrapping_mul(2654435761).wrapping_add(k * 97)) % 1000) as f64;
    HamiltonianSpec::dirac(
        0.6 + f(1) / 1000.0,
        0.5 + f(2) / 500.0,
        [f(3) / 1000.0 - 0.5, f(4) / 1000.0 - 0.5, f(5) / 1000.0 - 0.5],
        [
            f(6) / 1000.0 - 0.5,
            f(7) / 1000.0 - 0.5,
            f(8) / 1000.0 - 0.5,
            f(9) / 1000.0 - 0.5,
        ],
    )
}

fn fw_sample_fields(seed: u64) -> FWFieldData {
    let f =
        |k: u64| ((seed.wrapping_mul(40503).wrapping_add(k * 131)) % 1000) as f64 / 1000.0 - 0.5;
    FWFieldData {
        grad_a0: [f(1), f(2), f(3)],
        dt_a: [f(4), f(5), f(6)],
        grad_a: [[f(7), f(8), f(9)], [f(10), f(11), f(12)], [f(13), f(14), f(15)]],
    }
}

fn fw_suite(seed: u64, trials: u64, runner_tol: f64) -> Vec<PropertyResult> {
    let mut props = Vec::new();
    let c = conjugation_c();
    let cg5 = c_gamma5();

    let gen_trials = trials.clamp(20, 200);

    // Hermiticity of the generators.
    let mut w = Worst::largest();
    for i in 0..gen_trials {
        let spec = fw_sample_spec(mix(seed, 61, i));
        let fields = fw_sample_fields(mix(seed, 62, i));
        for n in 1..=2 {
            let s = fw_generator(n, &spec, &fields).expect("positive mass");
            w.update(s.hermiticity_defect(), || format!("trial {i}: S{n}"));
        }
    }
    props.push(result(
        "fw_generators_hermitian",
        w,
        tol::EXACT_ALGEBRA,
        Direction::AtMost,
        runner_tol,
    ));

    // Intertwining sign table.
    let mut w = Worst::largest();
    for i in 0..gen_trials {
        let spec = fw_sample_spec(mix(seed, 63, i));
        let fields = fw_sample_fields(mix(seed, 64, i));
        let s1 = fw_generator(1, &spec, &fields).expect("positive mass");
        let s2 = fw_generator(2, &spec, &fields).expect("positive mass");
        w.update((cg5 * s1 + s1.transpose() * cg5).max_abs(), || {
            format!("trial {i}: Cγ⁵S₁")
        });
        w.update((cg5 * s2 + s2.transpose() * cg5).max_abs(), || {
            format!("trial {i}: Cγ⁵S₂")
        });
        w.update((c * s1 - s1.transpose() * c).max_abs(), || {
            format!("trial {i}: CS₁")
        });
        w.update((c * s2 + s2.transpose() * c).max_abs(), || {
            format!("trial {i}: CS₂")
        });
    }
    props.push(result(
        "fw_generator_intertwining_signs",
        w,
        tol::FW_INTERTWINE,
        Direction::AtMost,
        runner_tol,
    ));

    // FW-picture invariants equal the original picture at orders (1,1) and
    // (2,2); I₂/I₃ plain forms and unit-determinant factors included.
    let id_trials = (trials / 50).max(10);
    let mut w = Worst::largest();
    let mut w_det = Worst::largest();
    for i in 0..id_trials {
        let ctx_a = FWContext::new(fw_sample_spec(mix(seed, 65, i)), fw_sample_fields(mix(seed, 66, i)))
            .expect("positive mass");
        let ctx_b = FWContext::new(fw_sample_spec(mix(seed, 67, i)), fw_sample_fields(mix(seed, 68, i)))
            .expect("positive mass");
        let state = random_state(mix(seed, 69, i));
        let original = all_invariants(&state);
        for (na, nb) in [(1usize, 1usize), (2, 2)] {
            let fw_state = fw_transform_state(&state, &ctx_a, &ctx_b, na, nb);
            let rec = fw_invariants(&fw_state, &ctx_a, &ctx_b, na, nb);
            for (label, got, want) in [
                ("i1", rec.i1, original.i1),
                ("i2", rec.i2, original.i2),
                ("i2a", rec.i2a, original.i2a),
                ("i2b", rec.i2b, original.i2b),
                ("i3", rec.i3, original.i3),
            ] {
                w.update((got - want).norm(), || {
                    format!("trial {i} order ({na},{nb}): {label}")
                });
            }
        }
        w_det.update(
            (ctx_a.picture_unitary(2).det() - C64::new(1.0, 0.0)).norm(),
            || format!("trial {i}: det e^{{iS₂}}e^{{iS₁}}"),
        );
    }
    props.push(result(
        "fw_picture_invariants_match_original",
        w,
        tol::FW_IDENTITY,
        Direction::AtMost,
        runner_tol,
    ));
    props.push(result(
        "fw_factors_unit_determinant",
        w_det,
        tol::EXP_IDENTITY,
        Direction::AtMost,
        runner_tol,
    ));

    // H_FW(2) commutes with γ⁰ and its upper block is the Pauli Hamiltonian.
    let mut w_comm = Worst::largest();
    let mut w_pauli = Worst::largest();
    for i in 0..gen_trials {
        let spec = fw_sample_spec(mix(seed, 70, i));
        let fields = fw_sample_fields(mix(seed, 71, i));
        let h4 = fw_hamiltonian2(&spec, &fields).expect("positive mass");
        w_comm.update((h4 * gamma(0) - gamma(0) * h4).max_abs(), || {
            format!("trial {i}")
        });
        let h2 = pauli_hamiltonian(&spec, &fields).expect("positive mass");
        w_pauli.update(upper_block(&h4).max_abs_diff(&h2), || format!("trial {i}"));
    }
    props.push(result(
        "hfw2_commutes_with_gamma0",
        w_comm,
        tol::EXACT_ALGEBRA,
        Direction::AtMost,
        runner_tol,
    ));
    props.push(result(
        "hfw2_upper_block_is_pauli",
        w_pauli,
        tol::FW_PAULI_BLOCK,
        Direction::AtMost,
        runner_tol,
    ));

    // Norm preservation of the FW transform.
    let mut w = Worst::largest();
    for i in 0..id_trials {
        let ctx = FWContext::new(fw_sample_spec(mix(seed, 72, i)), fw_sample_fields(mix(seed, 73, i)))
            .expect("positive mass");
        let state = random_state(mix(seed, 74, i));
        let out = fw_transform_state(&state, &ctx, &ctx, 2, 2);
        w.update((out.norm() - state.norm()).abs(), || format!("trial {i}"));
    }
    props.push(result(
        "fw_transform_preserves_norm",
        w,
        tol::EXP_IDENTITY,
        Direction::AtMost,
        runner_tol,
    ));

    // Closed-form sanity: block-determinant magnitudes are constant under
    // pure mass phases (constituent concurrences).
    let mut w = Worst::largest();
    let state = random_state(mix(seed, 75, 0));
    let blocks0 = block_determinants(&state);
    let h = build_hamiltonian(&HamiltonianSpec::mass_only(0.9)).expect("finite");
    for k in 1..=10 {
        let t = 0.4 * k as f64;
        let u = evolve_constant(&h, t).expect("hermitian");
        let blocks_t = block_determinants(&apply_local(&state, &u, &u));
        for (b0, bt) in blocks0.iter().zip(blocks_t.iter()) {
            w.update((b0.norm() - bt.norm()).abs(), || format!("t = {t}"));
        }
    }
    props.push(result(
        "constituent_concurrences_constant",
        w,
        tol::EXP_IDENTITY,
        Direction::AtMost,
        runner_tol,
    ));

    props
}

// ---------------------------------------------------------------------------

pub const SUITE_NAMES: [&str; 6] = ["algebra", "lorentz", "invariance", "evolution", "fw", "all"];

fn suite_by_name(
    name: &str,
    kernels: &Kernels,
    seed: u64,
    trials: u64,
    tol: f64,
) -> Option<Vec<PropertyResult>> {
    match name {
        "algebra" => Some(algebra_suite(seed, trials, tol)),
        "lorentz" => Some(lorentz_suite(seed, trials, tol)),
        "invariance" => Some(invariance_suite(kernels, seed, trials, tol)),
        "evolution" => Some(evolution_suite(seed, trials, tol)),
        "fw" => Some(fw_suite(seed, trials, tol)),
        "all" => {
            let mut props = algebra_suite(seed, trials, tol);
            props.extend(lorentz_suite(seed, trials, tol));
            props.extend(invariance_suite(kernels, seed, trials, tol));
            props.extend(evolution_suite(seed, trials, tol));
            props.extend(fw_suite(seed, trials, tol));
            Some(props)
        }
        _ => None,
    }
}

/// Run a named property suite. `tol` caps the tolerance of agreement-type
/// properties (each keeps its own tighter pinned value); existential
/// drift thresholds are fixed.
pub fn run_suite(name: &str, seed: u64, trials: u64, tol: f64) -> Result<PropertyReport> {
    run_suite_with_kernels(name, &Kernels::standard(), seed, trials, tol)
}

pub(crate) fn run_suite_with_kernels(
    name: &str,
    kernels: &Kernels,
    seed: u64,
    trials: u64,
    tol: f64,
) -> Result<PropertyReport> {
    let trials = trials.max(1);
    let properties =
        suite_by_name(name, kernels, seed, trials, tol).ok_or_else(|| HarnessError::UnknownSuite {
            name: name.to_string(),
            valid: "algebra, lorentz, invariance, evolution, fw, all",
        })?;
    Ok(PropertyReport {
        suite: name.to_string(),
        seed,
        trials,
        tolerance: tol,
        properties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_default_settings() {
        for name in ["algebra", "lorentz", "invariance", "evolution", "fw"] {
            let report = run_suite(name, 42, 120, 1e-9).unwrap();
            assert!(
                report.all_passed(),
                "suite {name} failed:\n{}",
                report.render()
            );
        }
    }

    #[test]
    fn unknown_suite_is_rejected_with_options() {
        let err = run_suite("nope", 1, 10, 1e-9).unwrap_err().to_string();
        assert!(err.contains("algebra") && err.contains("fw"), "{err}");
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("invariance", 7, 60, 1e-9).unwrap().render();
        let b = run_suite("invariance", 7, 60, 1e-9).unwrap().render();
        assert_eq!(a, b);
    }

    #[test]
    fn corrupted_kernel_fails_with_counterexample() {
        // Negative control: a wrong C matrix must be caught by the route
        // agreement property and produce a counterexample dump.
        let mut bad_c = conjugation_c();
        bad_c[(0, 1)] = C64::new(0.9, 0.1);
        let kernels = Kernels {
            c: bad_c,
            cg5: c_gamma5(),
        };
        let report = run_suite_with_kernels("invariance", &kernels, 42, 40, 1e-9).unwrap();
        assert!(!report.all_passed());
        let failing: Vec<_> = report.properties.iter().filter(|p| !p.passed).collect();
        assert!(failing
            .iter()
            .any(|p| p.name == "evaluation_route_agreement" && p.counterexample.is_some()));
    }

    #[test]
    fn tight_runner_tolerance_forces_failures() {
        let report = run_suite("lorentz", 3, 30, 1e-18).unwrap();
        assert!(!report.all_passed());
    }
}
