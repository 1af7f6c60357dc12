//! Evolution behavior of the invariant magnitudes: the preservation table
//! implied by the kernel classification, the U(1) phase law, and the
//! eigenvalue structure of Dirac Hamiltonians against a Jacobi oracle.

mod common;

use common::hermitian_eigenvalues;
use dirac_entanglement::evolution::{
    build_hamiltonian, evolve_constant, preserved_bilinears, ChiralSign, ExtraTerm,
    HamiltonianSpec,
};
use dirac_entanglement::invariants::all_invariants;
use dirac_entanglement::states::{apply_local, catalog, random_state, TwoSpinorState};
use dirac_entanglement::Complex64 as C64;

/// Max drift of the five invariant magnitudes over t in [0, t_max].
fn magnitude_drift(
    state: &TwoSpinorState,
    spec_a: &HamiltonianSpec,
    spec_b: &HamiltonianSpec,
    t_max: f64,
    samples: usize,
) -> [f64; 5] {
    let h_a = build_hamiltonian(spec_a).unwrap();
    let h_b = build_hamiltonian(spec_b).unwrap();
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
        let u_a = evolve_constant(&h_a, t).unwrap();
        let u_b = evolve_constant(&h_b, t).unwrap();
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

fn massless_spec() -> HamiltonianSpec {
    HamiltonianSpec::dirac(0.0, 1.0, [0.4, -0.3, 0.2], [0.6, 0.1, -0.2, 0.3])
}

fn massive_spec() -> HamiltonianSpec {
    HamiltonianSpec::dirac(1.0, 1.0, [0.5, 0.0, 0.0], [0.2, 0.0, 0.1, 0.0])
}

#[test]
fn dirac_eigenvalues_match_jacobi_oracle() {
    for (mass, charge, momentum, potential) in [
        (1.3, 0.7, [0.4, -0.2, 0.9], [0.5, 0.1, -0.3, 0.2]),
        (0.0, 1.0, [1.0, 2.0, 2.0], [0.0; 4]),
        (3.0, 1.0, [4.0, 0.0, 0.0], [0.0; 4]),
    ] {
        let spec = HamiltonianSpec::dirac(mass, charge, momentum, potential);
        let h = build_hamiltonian(&spec).unwrap();
        let eig = hermitian_eigenvalues(&h);
        let pi = spec.kinetic_momentum();
        let e = (pi.iter().map(|x| x * x).sum::<f64>() + mass * mass).sqrt();
        let shift = charge * potential[0];
        let want = [shift - e, shift - e, shift + e, shift + e];
        for (got, want) in eig.iter().zip(want.iter()) {
            assert!(
                (got - want).abs() < 1e-12,
                "eigenvalues {eig:?} vs ±{e} + {shift}"
            );
        }
    }
}

#[test]
fn massless_dirac_preserves_all_five_magnitudes() {
    let state = random_state(1);
    let drift = magnitude_drift(&state, &massless_spec(), &massless_spec(), 10.0, 40);
    for (i, d) in drift.iter().enumerate() {
        assert!(d < &1e-9, "magnitude {i} drifted by {d:.3e}");
    }
}

#[test]
fn massive_dirac_preserves_i2_and_i3_but_not_i1_on_epr() {
    let epr = catalog("epr").unwrap().state;
    let drift = magnitude_drift(&epr, &massive_spec(), &massive_spec(), 10.0, 60);
    assert!(drift[1] < 1e-9, "|I₂| drifted by {:.3e}", drift[1]);
    assert!(drift[4] < 1e-9, "|I₃| drifted by {:.3e}", drift[4]);
    assert!(
        drift[0] > 1e-3,
        "|I₁| should oscillate under massive evolution with momentum, drift {:.3e}",
        drift[0]
    );
}

#[test]
fn one_sided_mass_controls_i2a_and_i2b() {
    // Massive Alice, massless Bob: I₂B survives, I₂A breaks.
    let s_a = catalog("i2a_max").unwrap().state;
    let drift_a = magnitude_drift(&s_a, &massive_spec(), &massless_spec(), 8.0, 40);
    assert!(
        drift_a[2] > 1e-3,
        "|I₂A| must move under massive Alice evolution: {:.3e}",
        drift_a[2]
    );
    let s_b = catalog("i2b_max").unwrap().state;
    let drift_b = magnitude_drift(&s_b, &massive_spec(), &massless_spec(), 8.0, 40);
    assert!(
        drift_b[3] < 1e-9,
        "|I₂B| must survive massive Alice evolution: {:.3e}",
        drift_b[3]
    );

    // Mirror: massless Alice, massive Bob.
    let drift_a2 = magnitude_drift(&s_a, &massless_spec(), &massive_spec(), 8.0, 40);
    assert!(
        drift_a2[2] < 1e-9,
        "|I₂A| must survive massive Bob evolution: {:.3e}",
        drift_a2[2]
    );
    let drift_b2 = magnitude_drift(&s_b, &massless_spec(), &massive_spec(), 8.0, 40);
    assert!(
        drift_b2[3] > 1e-3,
        "|I₂B| must move under massive Bob evolution: {:.3e}",
        drift_b2[3]
    );

    // I₂ and I₃ survive in all four configurations.
    for drift in [&drift_a, &drift_b, &drift_a2, &drift_b2] {
        assert!(drift[1] < 1e-9);
        assert!(drift[4] < 1e-9);
    }
}

#[test]
fn quadratic_lattice_terms_preserve_all_magnitudes() {
    let state = random_state(5);
    let specs = [
        HamiltonianSpec::dirac(0.0, 0.0, [0.3, 0.2, 0.0], [0.0; 4])
            .with_extra(ExtraTerm::Semenoff { m_s: 0.7 }),
        HamiltonianSpec::dirac(0.0, 0.0, [0.3, 0.2, 0.0], [0.0; 4])
            .with_extra(ExtraTerm::Haldane { m_h: 0.4 }),
        HamiltonianSpec::dirac(0.0, 0.0, [0.5, -0.4, 0.0], [0.0; 4])
            .with_extra(ExtraTerm::Semimetal2d { v_d: 0.8, mu_p: 0.3 }),
        HamiltonianSpec::dirac(0.0, 0.0, [0.5, -0.4, 0.6], [0.0; 4])
            .with_extra(ExtraTerm::Semimetal3d { v_d: 1.2 }),
    ];
    for spec in &specs {
        let flags = preserved_bilinears(&build_hamiltonian(spec).unwrap());
        assert!(flags.preserves_c && flags.preserves_cg5, "{spec:?}");
        let drift = magnitude_drift(&state, spec, spec, 10.0, 30);
        for (i, d) in drift.iter().enumerate() {
            assert!(d < &1e-9, "magnitude {i} drifted {d:.3e} for {spec:?}");
        }
    }
}

#[test]
fn mass_plus_pseudoscalar_breaks_both_kernels() {
    let spec = HamiltonianSpec::mass_only(1.0)
        .with_extra(ExtraTerm::YukawaPseudoscalar { strength: 0.8 });
    let flags = preserved_bilinears(&build_hamiltonian(&spec).unwrap());
    assert!(!flags.preserves_c && !flags.preserves_cg5);
    // Counterexample drift on catalog states carrying I₁ and I₂.
    let epr = catalog("epr").unwrap().state;
    let drift_epr = magnitude_drift(&epr, &spec, &spec, 6.0, 40);
    assert!(drift_epr[0] > 1e-3, "|I₁| drift {:.3e}", drift_epr[0]);
    let i2s = catalog("i2_max").unwrap().state;
    let drift_i2 = magnitude_drift(&i2s, &spec, &spec, 6.0, 40);
    assert!(drift_i2[1] > 1e-3, "|I₂| drift {:.3e}", drift_i2[1]);
}

#[test]
fn chiral_coupling_breaks_both_kernels() {
    let spec = HamiltonianSpec::mass_only(0.0).with_extra(ExtraTerm::ChiralCoupling {
        z: [0.6, 0.3, 0.0, -0.2],
        sign: ChiralSign::Plus,
    });
    let flags = preserved_bilinears(&build_hamiltonian(&spec).unwrap());
    assert!(!flags.preserves_c && !flags.preserves_cg5);
    let epr = catalog("epr").unwrap().state;
    let drift = magnitude_drift(&epr, &spec, &spec, 6.0, 40);
    assert!(drift[0] > 1e-3, "|I₁| drift {:.3e}", drift[0]);
    let i2s = catalog("i2_max").unwrap().state;
    let drift2 = magnitude_drift(&i2s, &spec, &spec, 6.0, 40);
    assert!(drift2[1] > 1e-3, "|I₂| drift {:.3e}", drift2[1]);
}

#[test]
fn u1_phase_law_for_i2() {
    // Constant A₀ in both labs: I₂(t) = e^{-2iq(A₀^A + A₀^B)t} I₂(0).
    let q = 1.3;
    let (a0_a, a0_b) = (0.8, -0.35);
    let spec_a = HamiltonianSpec::dirac(0.9, q, [0.3, 0.1, 0.0], [a0_a, 0.2, 0.0, -0.1]);
    let spec_b = HamiltonianSpec::dirac(1.7, q, [0.0, -0.4, 0.2], [a0_b, 0.0, 0.3, 0.0]);
    let h_a = build_hamiltonian(&spec_a).unwrap();
    let h_b = build_hamiltonian(&spec_b).unwrap();
    let state = random_state(9);
    let i2_0 = all_invariants(&state).i2;
    for k in 0..25 {
        let t = 0.37 * k as f64;
        let u_a = evolve_constant(&h_a, t).unwrap();
        let u_b = evolve_constant(&h_b, t).unwrap();
        let i2_t = all_invariants(&apply_local(&state, &u_a, &u_b)).i2;
        let phase = (-C64::i() * C64::new(2.0 * q * (a0_a + a0_b) * t, 0.0)).exp();
        assert!(
            (i2_t - phase * i2_0).norm() < 1e-9,
            "t = {t}: {i2_t} vs {}",
            phase * i2_0
        );
    }
}

#[test]
fn scalar_yukawa_acts_like_mass() {
    // A scalar Yukawa term alone preserves Cγ⁵ and breaks C, like a mass.
    let spec = HamiltonianSpec::dirac(0.0, 0.0, [0.2, 0.0, 0.0], [0.0; 4])
        .with_extra(ExtraTerm::YukawaScalar { strength: 0.9 });
    let flags = preserved_bilinears(&build_hamiltonian(&spec).unwrap());
    assert!(!flags.preserves_c);
    assert!(flags.preserves_cg5);
}
