use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use eur_core::bounds::{optimal_bound, BoundOptions, MemoryPartition};
use eur_core::complementarity::{majorization_data, q_optimized, AdmixtureMode, QVariant, Q_OPT_TOL};
use eur_core::harness::fixtures::{example1_measurements, example1_state, example3_measurements};
use eur_core::harness::example_partition;
use eur_core::qstate::{random_density_state, RandomStateRecipe, SystemDims};

fn bounds(c: &mut Criterion) {
    let rho = example1_state();
    let ms = example1_measurements(0.95, std::f64::consts::PI);
    let partition = example_partition();
    let options = BoundOptions::new(QVariant::Tilde, AdmixtureMode::Reconstructed);
    c.bench_function("example1 optimal bound", |b| {
        b.iter(|| optimal_bound(black_box(&rho), &partition, &ms, options).unwrap())
    });

    let dims = SystemDims::uniform(&["A", "B"], 3).unwrap();
    let single = MemoryPartition::single(3, "B").unwrap();
    let bases = example3_measurements();
    c.bench_function("two-qutrit random state + bound", |b| {
        let mut seed = 0u64;
        b.iter(|| {
            seed += 1;
            let rho = random_density_state(&RandomStateRecipe::new(seed, dims.clone()));
            optimal_bound(&rho, &single, &bases, options).unwrap()
        })
    });
}

fn complementarity(c: &mut Criterion) {
    let ms = example1_measurements(0.95, std::f64::consts::PI);
    c.bench_function("q_opt golden section", |b| b.iter(|| q_optimized(black_box(&ms[0]), &ms[1], Q_OPT_TOL).unwrap()));
    c.bench_function("majorization data, three qutrit bases", |b| b.iter(|| majorization_data(black_box(&ms)).unwrap()));
}

criterion_group!(benches, bounds, complementarity);
criterion_main!(benches);
