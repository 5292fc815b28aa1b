mod common;

use common::{random_bases, random_state};
use eur_core::applications::{
    classical_conditional_entropy, coherence_sum_bound, devetak_winter_rhs, key_rate_bounds, unilateral_coherence,
    unilateral_coherence_relative,
};
use eur_core::bounds::{BoundOptions, MemoryPartition};
use eur_core::complementarity::{AdmixtureMode, QVariant};
use eur_core::harness::fixtures::{example3_measurements, qubit_mub_triple};
use eur_core::linalg::{eigh, CMatrix};
use eur_core::measurement::{measured_conditional_entropy, projective_cq_state};
use eur_core::qstate::{states, DensityMatrix, SystemDims};

/// `tr ρ log2 ρ − tr ρ log2 σ` with `log2 σ` built from the spectral
/// decomposition of `σ` (support of `ρ` assumed inside that of `σ`).
fn relative_entropy(rho: &CMatrix, sigma: &CMatrix) -> f64 {
    let log = |m: &CMatrix| {
        let (vals, vecs) = eigh(m);
        let n = m.nrows();
        let mut out = CMatrix::zeros(n, n);
        for (k, &v) in vals.iter().enumerate() {
            if v > 1e-13 {
                let col = vecs.column(k);
                out += (&col * col.adjoint()).scale(v.log2());
            }
        }
        out
    };
    ((rho * log(rho)).trace() - (rho * log(sigma)).trace()).re
}

#[test]
fn coherence_three_ways_agree() {
    for seed in 0..40 {
        let rho = random_state(seed, &["A", "B"], &[3, 2]);
        for m in random_bases(seed, 3, 2) {
            let via_entropies = unilateral_coherence(&m, &rho, &["B"]).unwrap();
            let via_states = unilateral_coherence_relative(&m, &rho, &["B"]).unwrap();
            let dephased = projective_cq_state(&m, &rho, "A").unwrap();
            let via_divergence = relative_entropy(rho.matrix(), dephased.matrix());
            assert!((via_entropies - via_states).abs() < 1e-9);
            assert!((via_entropies - via_divergence).abs() < 1e-7);
            assert!(via_entropies >= -1e-9);
        }
    }
}

#[test]
fn coherence_bound_holds_for_the_fixed_bases() {
    let ms = example3_measurements();
    let partition = MemoryPartition::single(3, "B").unwrap();
    let options = BoundOptions::new(QVariant::Tilde, AdmixtureMode::Reconstructed);
    for seed in 0..300 {
        let rho = random_state(seed, &["A", "B"], &[3, 3]);
        let r = coherence_sum_bound(&rho, &partition, &ms, options).unwrap();
        assert!(r.total >= r.bound - 1e-9, "seed {seed}");
        assert_eq!(r.per_measurement.len(), 3);
    }
}

#[test]
fn coherence_bound_holds_across_partitions() {
    for seed in 0..100 {
        let inst = common::random_instance(2000 + seed);
        let r = coherence_sum_bound(&inst.rho, &inst.partition, &inst.ms, BoundOptions::new(QVariant::Tilde, AdmixtureMode::Reconstructed))
            .unwrap();
        assert!(r.total >= r.bound - 1e-9, "seed {seed}");
    }
}

#[test]
fn bell_state_with_matched_bases_yields_one_key_bit() {
    let mub = qubit_mub_triple();
    let (z, x) = (&mub[0], &mub[1]);
    for v in [QVariant::Tilde, QVariant::Mu, QVariant::Opt] {
        let r = key_rate_bounds(&states::bell(), (z, x), (z, x), v).unwrap();
        assert!((r.k_base - 1.0).abs() < 1e-9);
        assert!((r.k_tilde - 1.0).abs() < 1e-9);
    }
}

#[test]
fn werner_sweep_keeps_the_improved_rate_above_the_base_rate() {
    let mub = qubit_mub_triple();
    let (z, x) = (&mub[0], &mub[1]);
    let mut last = f64::NEG_INFINITY;
    for k in 0..50 {
        let p = k as f64 / 49.0;
        let r = key_rate_bounds(&states::werner(p), (z, x), (z, x), QVariant::Tilde).unwrap();
        assert!(r.k_tilde >= r.k_base - 1e-12);
        assert!(r.k_base >= last - 1e-12, "base rate is monotone in p");
        last = r.k_base;
    }
}

#[test]
fn maximally_mixed_pair_has_no_extra_rate() {
    let mub = qubit_mub_triple();
    let rho = DensityMatrix::maximally_mixed(SystemDims::uniform(&["A", "B"], 2).unwrap());
    let r = key_rate_bounds(&rho, (&mub[0], &mub[1]), (&mub[0], &mub[1]), QVariant::Tilde).unwrap();
    assert!(r.delta.abs() < 1e-9);
    assert!((r.k_base + 1.0).abs() < 1e-9);
    assert!((r.k_tilde - r.k_base).abs() < 1e-9);
}

#[test]
fn measuring_the_memory_cannot_lower_conditional_entropy() {
    for seed in 0..200 {
        let d = 2 + (seed % 2) as usize;
        let rho = random_state(seed, &["A", "B"], &[d, d]);
        let ms = random_bases(seed, d, 2);
        let s_mb = measured_conditional_entropy(&ms[0], &rho, "A", &["B"]).unwrap();
        let s_mm = classical_conditional_entropy(&rho, &ms[0], &ms[1]).unwrap();
        assert!(s_mm >= s_mb - 1e-9, "seed {seed}");
    }
}

#[test]
fn devetak_winter_terms_on_a_purified_state() {
    let mub = qubit_mub_triple();
    let pure = states::werner(0.8).purify_as("C").unwrap();
    let rhs = devetak_winter_rhs(&pure, &mub[1], "B", "C").unwrap();
    let direct = measured_conditional_entropy(&mub[1], &pure, "A", &["C"]).unwrap()
        + measured_conditional_entropy(&mub[1], &pure, "A", &["B"]).unwrap();
    assert!((rhs - direct).abs() < 1e-12);
}
