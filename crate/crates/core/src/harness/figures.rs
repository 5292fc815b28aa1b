//! Seeded Monte Carlo sweeps over random states and measurements.
//!
//! Sample `i` draws everything from `substream(master_seed, i)`, so records do
//! not depend on how samples are scheduled across threads.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::applications::coherence_sum_bound;
use crate::bounds::{optimal_bound, BoundOptions, MemoryPartition};
use crate::complementarity::{AdmixtureMode, QVariant};
use crate::error::{Error, Result};
use crate::measurement::random_projective_measurement;
use crate::qstate::{random_density_state, substream, RandomStateRecipe, SystemDims};

use super::examples::example_partition;
use super::fixtures::example3_measurements;
use super::output::{fmt_f64, Scatter, Table};

/// Tolerance for counting a sample as a violation.
pub const VIOLATION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FigureConfig {
    pub samples: usize,
    pub master_seed: u64,
    pub q_variant: QVariant,
}

impl FigureConfig {
    pub fn new(samples: usize, master_seed: u64) -> Self {
        Self { samples, master_seed, q_variant: QVariant::Tilde }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidParameter("sample count must be at least 1".into()));
        }
        Ok(())
    }

    fn options(&self) -> BoundOptions {
        BoundOptions::new(self.q_variant, AdmixtureMode::Reconstructed)
    }
}

/// One sample. `seed` is the seed of the random state recipe.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentRecord {
    pub sample_index: usize,
    pub seed: u64,
    pub values: Vec<(&'static str, f64)>,
}

impl ExperimentRecord {
    pub fn get(&self, name: &str) -> Option<f64> {
        self.values.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureRun {
    pub figure: &'static str,
    pub description: &'static str,
    pub config: FigureConfig,
    pub records: Vec<ExperimentRecord>,
}

impl FigureRun {
    pub fn column(&self, name: &str) -> Vec<f64> {
        self.records.iter().map(|r| r.get(name).expect("known column")).collect()
    }

    /// Number of records where `column < −VIOLATION_TOL`.
    pub fn negatives(&self, name: &str) -> usize {
        self.column(name).into_iter().filter(|&x| x < -VIOLATION_TOL).count()
    }

    pub fn to_table(&self) -> Table {
        let c = &self.config;
        let mut columns = vec!["sample_index", "seed"];
        if let Some(first) = self.records.first() {
            columns.extend(first.values.iter().map(|(k, _)| *k));
        }
        let mut t = Table::new(
            vec![
                format!("{}: {}", self.figure, self.description),
                format!("master_seed={} samples={} q_variant={} admixture=reconstructed", c.master_seed, c.samples, c.q_variant),
            ],
            &columns,
        );
        for r in &self.records {
            let mut cells = vec![r.sample_index.to_string(), r.seed.to_string()];
            cells.extend(r.values.iter().map(|&(_, v)| fmt_f64(v)));
            t.push(cells);
        }
        t
    }
}

fn run_samples<F>(config: &FigureConfig, sample: F) -> Result<Vec<ExperimentRecord>>
where
    F: Fn(usize, &mut rand_chacha::ChaCha20Rng) -> Result<ExperimentRecord> + Sync,
{
    config.validate()?;
    (0..config.samples)
        .into_par_iter()
        .map(|i| sample(i, &mut substream(config.master_seed, i as u64)))
        .collect()
}

/// Random three-qutrit state on `A, B, C` and three random qutrit bases per
/// sample, with `B` guessing measurements 0 and 1 and `C` measurement 2.
pub fn run_figure3(config: &FigureConfig) -> Result<FigureRun> {
    let dims = SystemDims::uniform(&["A", "B", "C"], 3)?;
    let partition = example_partition();
    let options = config.options();
    let records = run_samples(config, |i, rng| {
        let seed: u64 = rng.random();
        let ms: Vec<_> = (0..3).map(|_| random_projective_measurement(3, rng.random())).collect();
        let rho = random_density_state(&RandomStateRecipe::new(seed, dims.clone()));
        let r = optimal_bound(&rho, &partition, &ms, options)?;
        let lb2_new = r.lb_admixture.expect("reconstructed admixture term is always available");
        Ok(ExperimentRecord {
            sample_index: i,
            seed,
            values: vec![
                ("lhs", r.lhs),
                ("lb1", r.prior_lb1),
                ("lb2", r.prior_lb2),
                ("LB1", r.lb_pairwise),
                ("LB2", lb2_new),
                ("LB1-lb1", r.lb_pairwise - r.prior_lb1),
                ("LB2-lb1", lb2_new - r.prior_lb1),
                ("LB2-lb2", lb2_new - r.prior_lb2),
                ("LB1-lb2", r.lb_pairwise - r.prior_lb2),
                ("LB1-LB2", r.lb_pairwise - lb2_new),
                ("lhs-optimal", r.lhs - r.optimal),
            ],
        })
    })?;
    Ok(FigureRun {
        figure: "figure3",
        description: "random three-qutrit states and random qutrit bases, B <- {M1,M2}, C <- {M3}",
        config: *config,
        records,
    })
}

/// Random two-qutrit state on `A, B` per sample, measured in the three fixed
/// bases of the coherence example with `B` as the only memory.
///
/// `bound` is the coherence bound with the pairwise complementarity sum
/// evaluated for these bases. `printed_bound` replaces `ΣQ/(m−1)` by the
/// constant `3/2`, which is exact only when every pair is mutually unbiased.
pub fn run_figure4(config: &FigureConfig) -> Result<FigureRun> {
    let dims = SystemDims::uniform(&["A", "B"], 3)?;
    let partition = MemoryPartition::single(3, "B")?;
    let ms = example3_measurements();
    let options = config.options();
    let records = run_samples(config, |i, rng| {
        let seed: u64 = rng.random();
        let rho = random_density_state(&RandomStateRecipe::new(seed, dims.clone()));
        let r = coherence_sum_bound(&rho, &partition, &ms, options)?;
        let best = r.delta_mn_dblprime.map_or(r.delta_mn, |x| x.max(r.delta_mn)).max(0.0);
        let printed = 1.5 - 1.5 * rho.conditional_entropy(&["A"], &["B"])? + best;
        Ok(ExperimentRecord {
            sample_index: i,
            seed,
            values: vec![
                ("coherence_sum", r.total),
                ("bound", r.bound),
                ("printed_bound", printed),
                ("slack", r.total - r.bound),
                ("printed_slack", r.total - printed),
                ("delta", r.delta_mn),
                ("delta_dblprime", r.delta_mn_dblprime.unwrap_or(f64::NAN)),
            ],
        })
    })?;
    Ok(FigureRun {
        figure: "figure4",
        description: "random two-qutrit states, three fixed qutrit bases, single memory B",
        config: *config,
        records,
    })
}

/// Coherence sum against its lower bound with the `y = x` line.
pub fn figure4_scatter(run: &FigureRun) -> Scatter {
    Scatter {
        title: format!("Coherence sum vs lower bound ({} states, seed {})", run.config.samples, run.config.master_seed),
        x_label: "lower bound".into(),
        y_label: "sum of unilateral coherences".into(),
        points: run.column("bound").into_iter().zip(run.column("coherence_sum")).collect(),
    }
}
