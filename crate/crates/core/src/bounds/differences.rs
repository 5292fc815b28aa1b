//! Closed-form differences between the new and the prior bounds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measurement::ProjectiveMeasurement;
use crate::qstate::DensityMatrix;

use super::multi::{admixture_or_none, report_from, Ingredients};
use super::{BoundOptions, BoundReport, MemoryPartition};

/// Agreement required between a closed form and the direct subtraction.
pub const IDENTITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DifferenceEntry {
    /// Closed-form expression; `None` when it needs an unavailable `ω·β`.
    pub closed_form: Option<f64>,
    /// Direct subtraction of the two bounds.
    pub direct: Option<f64>,
    /// Whether every `δ` entering the two bounds is non-negative, which is
    /// when the closed form equals the direct subtraction.
    pub preconditions_hold: bool,
}

impl DifferenceEntry {
    fn new(closed_form: Option<f64>, direct: Option<f64>, preconditions_hold: bool) -> Result<Self> {
        if let (true, Some(c), Some(d)) = (preconditions_hold, closed_form, direct) {
            if (c - d).abs() > IDENTITY_TOL {
                return Err(Error::invariant(
                    "difference identity",
                    format!("closed form {c} differs from direct subtraction {d}"),
                ));
            }
        }
        Ok(Self { closed_form, direct, preconditions_hold })
    }

    /// Closed form when available, else the direct subtraction.
    pub fn value(&self) -> Option<f64> {
        self.closed_form.or(self.direct)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DifferenceReport {
    #[serde(rename = "d_LB1_lb1")]
    pub pairwise_minus_lb1: DifferenceEntry,
    #[serde(rename = "d_LB1_lb2")]
    pub pairwise_minus_lb2: DifferenceEntry,
    #[serde(rename = "d_LB2_lb1")]
    pub admixture_minus_lb1: DifferenceEntry,
    #[serde(rename = "d_LB2_lb2")]
    pub admixture_minus_lb2: DifferenceEntry,
    #[serde(rename = "d_LB1_LB2")]
    pub pairwise_minus_admixture: DifferenceEntry,
}

/// The five differences together with the report they were derived from.
pub fn difference_report(
    rho: &DensityMatrix,
    partition: &MemoryPartition,
    ms: &[ProjectiveMeasurement],
    options: BoundOptions,
) -> Result<(DifferenceReport, BoundReport)> {
    let ing = Ingredients::new(rho, partition, ms, options.q_variant)?;
    let term = admixture_or_none(ms, options.admixture)?;
    let report = report_from(&ing, term.as_ref(), options);
    Ok((differences(&ing, &report)?, report))
}

pub(crate) fn differences(ing: &Ingredients, r: &BoundReport) -> Result<DifferenceReport> {
    let m = ing.m as f64;
    let mf = m - 1.0;
    let s_a = ing.s_a;
    let log_b = ing.b.log2();
    let wb = r.omega_beta;
    let d = r.delta_mn >= 0.0;
    let dp = r.delta_mn_prime >= 0.0;
    let ddp = r.delta_mn_dblprime.is_some_and(|x| x >= 0.0);
    let lb2_direct = |x: f64| r.lb_admixture.map(|l| l - x);

    Ok(DifferenceReport {
        pairwise_minus_lb1: DifferenceEntry::new(
            Some((ing.sum_q + ing.log_prod_c) / mf),
            Some(r.lb_pairwise - r.prior_lb1),
            true,
        )?,
        pairwise_minus_lb2: DifferenceEntry::new(
            Some((2.0 - m) / 2.0 * s_a + ing.sum_q / mf + log_b),
            Some(r.lb_pairwise - r.prior_lb2),
            d && dp,
        )?,
        admixture_minus_lb1: DifferenceEntry::new(
            wb.map(|wb| (m - 2.0) / 2.0 * s_a + ing.log_prod_c / mf - wb / m),
            lb2_direct(r.prior_lb1),
            ddp && d,
        )?,
        admixture_minus_lb2: DifferenceEntry::new(wb.map(|wb| -wb / m + log_b), lb2_direct(r.prior_lb2), ddp && dp)?,
        pairwise_minus_admixture: DifferenceEntry::new(
            wb.map(|wb| (2.0 - m) / 2.0 * s_a + wb / m + ing.sum_q / mf),
            r.lb_admixture.map(|l| r.lb_pairwise - l),
            d && ddp,
        )?,
    })
}
