//! The `m`-measurement, `n`-memory bounds: the two prior bounds, the pairwise
//! and admixture bounds, and their optimal combination.

use serde::Serialize;

use crate::complementarity::{
    chain_b, q_variant, xiao_admixture_term, AdmixtureMode, AdmixtureTerm, QVariant,
};
use crate::error::{Error, Result};
use crate::measurement::{holevo_quantity, measured_conditional_entropy, overlap_matrix, ProjectiveMeasurement};
use crate::qstate::DensityMatrix;

use super::{MemoryPartition, MEASURED};

/// How `Q` and the admixture term are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct BoundOptions {
    pub q_variant: QVariant,
    pub admixture: AdmixtureMode,
}

impl BoundOptions {
    pub fn new(q_variant: QVariant, admixture: AdmixtureMode) -> Self {
        Self { q_variant, admixture }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QPair {
    pub i: usize,
    pub j: usize,
    pub value: f64,
}

/// Every quantity shared by the bounds for one instance.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Ingredients {
    pub m: usize,
    pub s_a: f64,
    /// `m_t(m_t − 1)/2` per memory.
    pub weights: Vec<f64>,
    /// `S(A|B_t)` per memory.
    pub s_a_given: Vec<f64>,
    /// `I(A:B_t)` per memory.
    pub mutual: Vec<f64>,
    /// `Σ_t Σ_{i ∈ S_t} I(M_i:B_t)`
    pub holevo_sum: f64,
    pub lhs: f64,
    pub q_pairs: Vec<QPair>,
    pub sum_q: f64,
    /// `log2 ∏_{i<j} c_{i,j}`
    pub log_prod_c: f64,
    pub b: f64,
}

impl Ingredients {
    pub fn new(
        rho: &DensityMatrix,
        partition: &MemoryPartition,
        ms: &[ProjectiveMeasurement],
        variant: QVariant,
    ) -> Result<Self> {
        let m = check_instance(rho, partition, ms, 2)?;
        let rho_a = rho.partial_trace(&[MEASURED])?;
        let s_a = rho_a.von_neumann_entropy()?;
        let mut s_a_given = Vec::with_capacity(partition.n());
        let mut mutual = Vec::with_capacity(partition.n());
        for label in partition.memory_labels() {
            s_a_given.push(rho.conditional_entropy(&[MEASURED], &[label.as_str()])?);
            mutual.push(rho.mutual_information(&[MEASURED], &[label.as_str()])?);
        }
        let (lhs, holevo_sum) = lhs_and_holevo(rho, partition, ms)?;
        let mut q_pairs = Vec::new();
        let mut log_prod_c = 0.0;
        for i in 0..m {
            for j in i + 1..m {
                let value = q_variant(&ms[i], &ms[j], Some(&rho_a), variant)?;
                q_pairs.push(QPair { i, j, value });
                log_prod_c += overlap_matrix(&ms[i], &ms[j])?.c_max.log2();
            }
        }
        let sum_q = q_pairs.iter().map(|q| q.value).sum();
        Ok(Self {
            m,
            s_a,
            weights: partition.pair_weights(),
            s_a_given,
            mutual,
            holevo_sum,
            lhs,
            q_pairs,
            sum_q,
            log_prod_c,
            b: chain_b(ms)?,
        })
    }

    fn mf(&self) -> f64 {
        (self.m - 1) as f64
    }

    fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `Σ_t w_t S(A|B_t) / (m − 1)`
    fn memory_term(&self) -> f64 {
        self.weights.iter().zip(&self.s_a_given).map(|(w, s)| w * s).sum::<f64>() / self.mf()
    }

    /// `Σ_t w_t I(A:B_t) / (m − 1) − Σ I(M_i:B_t)`
    fn correlation_term(&self) -> f64 {
        self.weights.iter().zip(&self.mutual).map(|(w, i)| w * i).sum::<f64>() / self.mf() - self.holevo_sum
    }

    /// `−log2 ∏c / (m − 1) + Σ_t w_t S(A|B_t) / (m − 1)`
    pub fn prior_lead(&self) -> f64 {
        -self.log_prod_c / self.mf() + self.memory_term()
    }

    /// `ΣQ / (m − 1) + Σ_t w_t S(A|B_t) / (m − 1)`
    pub fn lead(&self) -> f64 {
        self.sum_q / self.mf() + self.memory_term()
    }

    pub fn delta(&self) -> f64 {
        let mm = self.m as f64;
        (mm * (mm - 1.0) / 2.0 - self.weight_sum()) / self.mf() * self.s_a + self.correlation_term()
    }

    pub fn delta_prime(&self) -> f64 {
        self.log_prod_c / self.mf() - self.b.log2() + self.mf() * self.s_a - self.weight_sum() / self.mf() * self.s_a
            + self.correlation_term()
    }

    pub fn delta_dblprime(&self, omega_beta: f64) -> f64 {
        -omega_beta / self.m as f64 + self.mf() * self.s_a - self.weight_sum() / self.mf() * self.s_a
            + self.correlation_term()
            - self.sum_q / self.mf()
    }
}

/// Common validation; returns `m`.
pub(crate) fn check_instance(
    rho: &DensityMatrix,
    partition: &MemoryPartition,
    ms: &[ProjectiveMeasurement],
    min_m: usize,
) -> Result<usize> {
    let m = ms.len();
    if m < min_m {
        return Err(Error::TooFewMeasurements { required: min_m, found: m });
    }
    if partition.m() != m {
        return Err(Error::InvalidPartition(format!("partition covers {} measurements, got {m}", partition.m())));
    }
    partition.check_against(rho.dims())?;
    let d = rho.dims().dim_of(MEASURED)?;
    if let Some(bad) = ms.iter().find(|x| x.dim() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: bad.dim() });
    }
    Ok(m)
}

fn lhs_and_holevo(rho: &DensityMatrix, partition: &MemoryPartition, ms: &[ProjectiveMeasurement]) -> Result<(f64, f64)> {
    let mut lhs = 0.0;
    let mut holevo = 0.0;
    for (i, label) in partition.assignments() {
        lhs += measured_conditional_entropy(&ms[i], rho, MEASURED, &[label])?;
        holevo += holevo_quantity(&ms[i], rho, MEASURED, &[label])?;
    }
    Ok((lhs, holevo))
}

/// `Σ_t Σ_{M_i ∈ S_t} S(M_i|B_t)`
pub fn uncertainty_lhs(rho: &DensityMatrix, partition: &MemoryPartition, ms: &[ProjectiveMeasurement]) -> Result<f64> {
    check_instance(rho, partition, ms, 1)?;
    Ok(lhs_and_holevo(rho, partition, ms)?.0)
}

/// Prior bound with `max{0, δ_mn}`.
pub fn prior_lb1(rho: &DensityMatrix, partition: &MemoryPartition, ms: &[ProjectiveMeasurement]) -> Result<f64> {
    let ing = Ingredients::new(rho, partition, ms, QVariant::Mu)?;
    Ok(ing.prior_lead() + ing.delta().max(0.0))
}

/// Prior bound with `max{0, δ′_mn}`.
pub fn prior_lb2(rho: &DensityMatrix, partition: &MemoryPartition, ms: &[ProjectiveMeasurement]) -> Result<f64> {
    let ing = Ingredients::new(rho, partition, ms, QVariant::Mu)?;
    Ok(ing.prior_lead() + ing.delta_prime().max(0.0))
}

/// `LB1`: pairwise `Q` terms with `max{0, δ_mn}`.
pub fn pairwise_bound(
    rho: &DensityMatrix,
    partition: &MemoryPartition,
    ms: &[ProjectiveMeasurement],
    variant: QVariant,
) -> Result<f64> {
    let ing = Ingredients::new(rho, partition, ms, variant)?;
    Ok(ing.lead() + ing.delta().max(0.0))
}

/// `LB2`: pairwise `Q` terms with `max{0, δ″_mn}`.
pub fn admixture_bound(
    rho: &DensityMatrix,
    partition: &MemoryPartition,
    ms: &[ProjectiveMeasurement],
    options: BoundOptions,
) -> Result<f64> {
    let ing = Ingredients::new(rho, partition, ms, options.q_variant)?;
    let term = xiao_admixture_term(ms, options.admixture)?;
    Ok(ing.lead() + ing.delta_dblprime(term.omega_beta).max(0.0))
}

/// Everything computed for one instance. `LB2` and `δ″` are absent when the
/// admixture term is unavailable for the family under the chosen mode.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub lhs: f64,
    #[serde(rename = "lb1")]
    pub prior_lb1: f64,
    #[serde(rename = "lb2")]
    pub prior_lb2: f64,
    #[serde(rename = "LB1")]
    pub lb_pairwise: f64,
    #[serde(rename = "LB2")]
    pub lb_admixture: Option<f64>,
    pub optimal: f64,
    pub delta_mn: f64,
    pub delta_mn_prime: f64,
    pub delta_mn_dblprime: Option<f64>,
    pub s_a: f64,
    pub b: f64,
    pub log2_prod_c: f64,
    pub sum_q: f64,
    pub omega_beta: Option<f64>,
    pub q_pairs: Vec<QPair>,
    pub q_variant_used: QVariant,
    pub admixture_mode: AdmixtureMode,
}

impl BoundReport {
    /// The largest of the computed lower bounds.
    pub fn best_bound(&self) -> f64 {
        let mut best = self.prior_lb1.max(self.prior_lb2).max(self.lb_pairwise).max(self.optimal);
        if let Some(x) = self.lb_admixture {
            best = best.max(x);
        }
        best
    }
}

/// Full report: `optimal = lead + max{0, δ_mn, δ″_mn}`, falling back to
/// `max{0, δ_mn}` when the admixture term is unavailable.
pub fn optimal_bound(
    rho: &DensityMatrix,
    partition: &MemoryPartition,
    ms: &[ProjectiveMeasurement],
    options: BoundOptions,
) -> Result<BoundReport> {
    let ing = Ingredients::new(rho, partition, ms, options.q_variant)?;
    let term = admixture_or_none(ms, options.admixture)?;
    Ok(report_from(&ing, term.as_ref(), options))
}

pub(crate) fn admixture_or_none(ms: &[ProjectiveMeasurement], mode: AdmixtureMode) -> Result<Option<AdmixtureTerm>> {
    match xiao_admixture_term(ms, mode) {
        Ok(t) => Ok(Some(t)),
        Err(Error::AdmixtureUnresolved) => Ok(None),
        Err(e) => Err(e),
    }
}

pub(crate) fn report_from(ing: &Ingredients, term: Option<&AdmixtureTerm>, options: BoundOptions) -> BoundReport {
    let delta = ing.delta();
    let delta_prime = ing.delta_prime();
    let omega_beta = term.map(|t| t.omega_beta);
    let delta_dbl = omega_beta.map(|wb| ing.delta_dblprime(wb));
    let lead = ing.lead();
    let best_delta = delta_dbl.map_or(delta, |x| x.max(delta));
    BoundReport {
        lhs: ing.lhs,
        prior_lb1: ing.prior_lead() + delta.max(0.0),
        prior_lb2: ing.prior_lead() + delta_prime.max(0.0),
        lb_pairwise: lead + delta.max(0.0),
        lb_admixture: delta_dbl.map(|x| lead + x.max(0.0)),
        optimal: lead + best_delta.max(0.0),
        delta_mn: delta,
        delta_mn_prime: delta_prime,
        delta_mn_dblprime: delta_dbl,
        s_a: ing.s_a,
        b: ing.b,
        log2_prod_c: ing.log_prod_c,
        sum_q: ing.sum_q,
        omega_beta,
        q_pairs: ing.q_pairs.clone(),
        q_variant_used: options.q_variant,
        admixture_mode: options.admixture,
    }
}
