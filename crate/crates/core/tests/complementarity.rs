mod common;

use common::{grid_max, lambda_min_oracle, overlaps, random_bases, random_state};
use eur_core::complementarity::{
    chain_b, majorization_data, q_mu, q_optimized, q_state, q_tilde, q_variant, xiao_admixture_term, AdmixtureMode,
    QVariant, Q_OPT_TOL,
};
use eur_core::harness::fixtures::{example1_measurements, qubit_mub_triple, qutrit_mub_triple};
use eur_core::measurement::{outcome_entropy, ProjectiveMeasurement};
use eur_core::Error;

#[test]
fn every_variant_dominates_the_max_overlap_value() {
    for seed in 0..500u64 {
        let d = 2 + (seed % 2) as usize;
        let ms = random_bases(seed, d, 2);
        let rho_a = random_state(seed, &["A"], &[d]);
        let base = q_mu(&ms[0], &ms[1]).unwrap();
        for v in [QVariant::Tilde, QVariant::State, QVariant::Opt] {
            let q = q_variant(&ms[0], &ms[1], Some(&rho_a), v).unwrap();
            assert!(q >= base - 1e-12, "{v} below q_mu for seed {seed}: {q} < {base}");
        }
    }
}

#[test]
fn optimized_q_matches_grid_oracle() {
    for seed in 0..4u64 {
        let d = 2 + (seed % 2) as usize;
        let ms = random_bases(50 + seed, d, 2);
        let f = |p: f64| lambda_min_oracle(&ms[0], &ms[1], p);
        let (coarse, p) = grid_max(&f, 0.0, 1.0, 100_001);
        let (fine, _) = grid_max(&f, (p - 1e-5).max(0.0), (p + 1e-5).min(1.0), 2_001);
        let got = q_optimized(&ms[0], &ms[1], Q_OPT_TOL).unwrap();
        let oracle = coarse.max(fine);
        assert!((got - oracle).abs() < 1e-6, "seed {seed}: {got} vs {oracle}");
    }
}

#[test]
fn qubit_mub_pair_has_unit_optimized_q() {
    let mub = qubit_mub_triple();
    let q = q_optimized(&mub[0], &mub[1], Q_OPT_TOL).unwrap();
    assert!((q - 1.0).abs() < 1e-12);
    assert!((q_tilde(&mub[0], &mub[1]).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn equal_bases_give_zero_and_skip_the_correction() {
    let z = ProjectiveMeasurement::computational(3);
    assert_eq!(q_tilde(&z, &z).unwrap(), 0.0);
    assert_eq!(q_mu(&z, &z).unwrap(), 0.0);
}

#[test]
fn tilde_correction_uses_second_largest_overlap() {
    let ms = example1_measurements(0.95, std::f64::consts::PI);
    let c = overlaps(&ms[0], &ms[1]);
    let mut flat: Vec<f64> = c.into_iter().flatten().collect();
    flat.sort_by(|a, b| b.total_cmp(a));
    let want = -flat[0].log2() + 0.5 * (1.0 - flat[0].sqrt()) * (flat[0] / flat[1]).log2();
    assert!((q_tilde(&ms[0], &ms[1]).unwrap() - want).abs() < 1e-12);
}

#[test]
fn state_variant_requires_a_state() {
    let ms = random_bases(1, 2, 2);
    assert_eq!(q_variant(&ms[0], &ms[1], None, QVariant::State).unwrap_err(), Error::MissingState);
    let rho_a = random_state(2, &["A"], &[2]);
    assert!(q_state(&rho_a, &ms[0], &ms[1]).unwrap() >= 0.0);
}

fn chain_b_brute(ms: &[ProjectiveMeasurement]) -> f64 {
    let m = ms.len();
    let d = ms[0].dim();
    let c: Vec<Vec<Vec<f64>>> = (0..m - 1).map(|i| overlaps(&ms[i], &ms[i + 1])).collect();
    let mut best = 0.0f64;
    for km in 0..d {
        let mut total = 0.0;
        let inner = m - 2;
        for code in 0..d.pow(inner as u32) {
            let mut idx = vec![0usize; m];
            idx[m - 1] = km;
            let mut x = code;
            for t in 1..=inner {
                idx[t] = x % d;
                x /= d;
            }
            let head = (0..d).map(|k1| c[0][k1][idx[1]]).fold(0.0, f64::max);
            let tail: f64 = (1..m - 1).map(|i| c[i][idx[i]][idx[i + 1]]).product();
            total += head * tail;
        }
        best = best.max(total);
    }
    best
}

#[test]
fn chain_b_matches_brute_force() {
    for seed in 0..40u64 {
        let d = 2 + (seed % 2) as usize;
        let m = 2 + (seed % 3) as usize;
        let ms = random_bases(700 + seed, d, m);
        assert!((chain_b(&ms).unwrap() - chain_b_brute(&ms)).abs() < 1e-12);
    }
}

#[test]
fn admixture_term_collapses_for_mubs() {
    for (ms, d) in [(qubit_mub_triple(), 2.0f64), (qutrit_mub_triple(), 3.0)] {
        for k in 2..=3 {
            let fam = &ms[..k];
            let want = -(k as f64) * d.log2();
            let closed = xiao_admixture_term(fam, AdmixtureMode::MubOnly).unwrap().omega_beta;
            let rebuilt = xiao_admixture_term(fam, AdmixtureMode::Reconstructed).unwrap().omega_beta;
            assert!((closed - want).abs() < 1e-12);
            assert!((rebuilt - want).abs() < 1e-9, "k={k} d={d}: {rebuilt}");
        }
    }
}

#[test]
fn strict_mode_rejects_non_mub_families() {
    let ms = random_bases(3, 3, 3);
    assert_eq!(xiao_admixture_term(&ms, AdmixtureMode::MubOnly).unwrap_err(), Error::AdmixtureUnresolved);
}

#[test]
fn majorization_vectors_are_well_formed() {
    for seed in 0..20u64 {
        let ms = random_bases(900 + seed, 2 + (seed % 2) as usize, 3);
        let data = majorization_data(&ms).unwrap();
        assert!(data.omega.iter().all(|&w| w >= -1e-15));
        assert!((data.omega.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(data.beta.windows(2).all(|w| w[0] >= w[1]));
        assert!(data.omega_caps.windows(2).all(|w| w[0] <= w[1] + 1e-15));
    }
}

#[test]
fn admixture_relation_holds_without_memory() {
    for seed in 0..300u64 {
        let d = 2 + (seed % 2) as usize;
        let m = 2 + (seed / 2 % 2) as usize;
        let ms = random_bases(1300 + seed, d, m);
        let rho = random_state(seed, &["A"], &[d]);
        let wb = xiao_admixture_term(&ms, AdmixtureMode::Reconstructed).unwrap().omega_beta;
        let lhs: f64 = ms.iter().map(|x| outcome_entropy(x, &rho, "A").unwrap()).sum();
        let rhs = -wb / m as f64 + (m as f64 - 1.0) * rho.von_neumann_entropy().unwrap();
        assert!(lhs >= rhs - 1e-9, "seed {seed}: {lhs} < {rhs}");
    }
}
