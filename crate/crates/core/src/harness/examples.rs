//! The worked examples: a fixed three-qutrit instance and a sweep over the
//! tilt parameter `a`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::bounds::{difference_report, optimal_bound, BoundOptions, BoundReport, DifferenceReport, MemoryPartition};
use crate::complementarity::{AdmixtureMode, QVariant};
use crate::error::{Error, Result};

use super::fixtures::{example1_measurements, example1_state, example2_measurements, example2_state};
use super::output::{fmt_f64, Table};

/// Slack allowed when checking the ordering `LB2 ≥ lb2 ≥ LB1 ≥ lb1`.
pub const ORDER_TOL: f64 = 1e-9;

/// Measurements 0 and 1 guessed by `B`, measurement 2 by `C`.
pub fn example_partition() -> MemoryPartition {
    MemoryPartition::new(3, vec![vec![0, 1], vec![2]], vec!["B", "C"]).expect("valid partition")
}

fn check_a(a: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::InvalidParameter(format!("a = {a} is outside [0, 1]")));
    }
    Ok(())
}

fn check_phi(phi: f64) -> Result<()> {
    if !phi.is_finite() {
        return Err(Error::InvalidParameter(format!("phi = {phi} is not finite")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Example1Config {
    pub a: f64,
    pub phi: f64,
    pub q_variant: QVariant,
    pub admixture: AdmixtureMode,
}

impl Default for Example1Config {
    fn default() -> Self {
        Self { a: 0.95, phi: PI, q_variant: QVariant::Tilde, admixture: AdmixtureMode::Reconstructed }
    }
}

impl Example1Config {
    pub fn validate(&self) -> Result<()> {
        check_a(self.a)?;
        check_phi(self.phi)
    }

    pub fn options(&self) -> BoundOptions {
        BoundOptions::new(self.q_variant, self.admixture)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Example1Report {
    pub config: Example1Config,
    pub differences: DifferenceReport,
    pub report: BoundReport,
}

pub fn run_example1(config: &Example1Config) -> Result<Example1Report> {
    config.validate()?;
    let (differences, report) = difference_report(
        &example1_state(),
        &example_partition(),
        &example1_measurements(config.a, config.phi),
        config.options(),
    )?;
    Ok(Example1Report { config: *config, differences, report })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Example2Config {
    /// Number of intervals; the grid has `steps + 1` points.
    pub steps: usize,
    pub a_min: f64,
    pub a_max: f64,
    pub phi: f64,
    pub q_variant: QVariant,
    pub admixture: AdmixtureMode,
}

impl Default for Example2Config {
    fn default() -> Self {
        Self {
            steps: 100,
            a_min: 0.0,
            a_max: 1.0,
            phi: PI,
            q_variant: QVariant::Tilde,
            admixture: AdmixtureMode::Reconstructed,
        }
    }
}

impl Example2Config {
    pub fn validate(&self) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::InvalidParameter("steps must be at least 1".into()));
        }
        check_a(self.a_min)?;
        check_a(self.a_max)?;
        if self.a_min > self.a_max {
            return Err(Error::InvalidParameter(format!("a range [{}, {}] is empty", self.a_min, self.a_max)));
        }
        check_phi(self.phi)
    }

    pub fn grid(&self) -> Vec<f64> {
        (0..=self.steps)
            .map(|k| {
                if k == self.steps {
                    self.a_max
                } else {
                    self.a_min + (self.a_max - self.a_min) * k as f64 / self.steps as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Example2Row {
    pub a: f64,
    pub report: BoundReport,
}

impl Example2Row {
    fn lb2_new(&self) -> f64 {
        self.report.lb_admixture.unwrap_or(f64::NAN)
    }

    pub fn admixture_minus_lb1(&self) -> f64 {
        self.lb2_new() - self.report.prior_lb1
    }

    pub fn admixture_minus_lb2(&self) -> f64 {
        self.lb2_new() - self.report.prior_lb2
    }

    pub fn pairwise_minus_lb2(&self) -> f64 {
        self.report.lb_pairwise - self.report.prior_lb2
    }

    pub fn pairwise_minus_admixture(&self) -> f64 {
        self.report.lb_pairwise - self.lb2_new()
    }

    pub fn pairwise_minus_lb1(&self) -> f64 {
        self.report.lb_pairwise - self.report.prior_lb1
    }

    /// `LB2 ≥ lb2 ≥ LB1 ≥ lb1` up to [`ORDER_TOL`].
    pub fn ordering_holds(&self) -> bool {
        let r = &self.report;
        self.admixture_minus_lb2() >= -ORDER_TOL
            && r.prior_lb2 - r.lb_pairwise >= -ORDER_TOL
            && self.pairwise_minus_lb1() >= -ORDER_TOL
    }
}

pub const EXAMPLE2_COLUMNS: [&str; 11] =
    ["a", "lb1", "lb2", "LB1", "LB2", "LB2-lb1", "LB2-lb2", "LB1-lb2", "LB1-LB2", "LB1-lb1", "ordering_holds"];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Example2Run {
    pub config: Example2Config,
    pub rows: Vec<Example2Row>,
}

impl Example2Run {
    pub fn to_table(&self) -> Table {
        let c = &self.config;
        let mut t = Table::new(
            vec![
                "example2: state (|012>+|120>+|201>)/sqrt3, memories B <- {M1,M2}, C <- {M3}".into(),
                format!(
                    "steps={} a_min={} a_max={} phi={} q_variant={} admixture={}",
                    c.steps, c.a_min, c.a_max, c.phi, c.q_variant, c.admixture
                ),
            ],
            &EXAMPLE2_COLUMNS,
        );
        for row in &self.rows {
            let r = &row.report;
            let mut cells: Vec<String> = [
                row.a,
                r.prior_lb1,
                r.prior_lb2,
                r.lb_pairwise,
                row.lb2_new(),
                row.admixture_minus_lb1(),
                row.admixture_minus_lb2(),
                row.pairwise_minus_lb2(),
                row.pairwise_minus_admixture(),
                row.pairwise_minus_lb1(),
            ]
            .into_iter()
            .map(fmt_f64)
            .collect();
            cells.push(u8::from(row.ordering_holds()).to_string());
            t.push(cells);
        }
        t
    }
}

pub fn run_example2(config: &Example2Config) -> Result<Example2Run> {
    config.validate()?;
    let rho = example2_state();
    let partition = example_partition();
    let rows = config
        .grid()
        .into_iter()
        .map(|a| {
            let ms = example2_measurements(a, config.phi);
            let report = optimal_bound(&rho, &partition, &ms, BoundOptions::new(config.q_variant, config.admixture))?;
            Ok(Example2Row { a, report })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Example2Run { config: *config, rows })
}
