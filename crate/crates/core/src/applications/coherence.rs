use serde::Serialize;

use crate::bounds::{BoundOptions, MemoryPartition, MEASURED};
use crate::error::{Error, Result};
use crate::measurement::{measured_conditional_entropy, projective_cq_state, ProjectiveMeasurement};
use crate::qstate::DensityMatrix;

use crate::bounds::internal::{admixture_or_none, Ingredients};

/// Agreement required between the two evaluations of the coherence sum.
pub const COHERENCE_TOL: f64 = 1e-9;

/// `C_r^M(ρ_AB) = S(M|B) − S(A|B)`.
pub fn unilateral_coherence<S: AsRef<str>>(m: &ProjectiveMeasurement, rho: &DensityMatrix, memory: &[S]) -> Result<f64> {
    Ok(measured_conditional_entropy(m, rho, MEASURED, memory)? - rho.conditional_entropy(&[MEASURED], memory)?)
}

/// `S(ρ_MB) − S(ρ_AB)` on the marginal of `A` and `memory`: the relative
/// entropy to the dephased state.
pub fn unilateral_coherence_relative<S: AsRef<str>>(
    m: &ProjectiveMeasurement,
    rho: &DensityMatrix,
    memory: &[S],
) -> Result<f64> {
    let mut keep: Vec<&str> = vec![MEASURED];
    keep.extend(memory.iter().map(AsRef::as_ref));
    let rho_ab = rho.partial_trace(&keep)?;
    let dephased = projective_cq_state(m, &rho_ab, MEASURED)?;
    Ok(dephased.von_neumann_entropy()? - rho_ab.von_neumann_entropy()?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoherenceReport {
    /// `C_r^{M_i}(ρ_{AB_t})`, indexed by measurement.
    pub per_measurement: Vec<f64>,
    pub total: f64,
    pub bound: f64,
    pub delta_mn: f64,
    pub delta_mn_dblprime: Option<f64>,
    pub sum_q: f64,
}

/// Coherence sum and its lower bound: the optimal uncertainty bound shifted by
/// `Σ_t m_t S(A|B_t)`, giving memory coefficients `m_t(m_t − 2m + 1)/(2(m − 1))`.
pub fn coherence_sum_bound(
    rho: &DensityMatrix,
    partition: &MemoryPartition,
    ms: &[ProjectiveMeasurement],
    options: BoundOptions,
) -> Result<CoherenceReport> {
    let ing = Ingredients::new(rho, partition, ms, options.q_variant)?;
    let m = ing.m as f64;
    let mut per_measurement = vec![0.0; ing.m];
    for (i, label) in partition.assignments() {
        per_measurement[i] = unilateral_coherence(&ms[i], rho, &[label])?;
    }
    let total: f64 = per_measurement.iter().sum();
    let mut shift = 0.0;
    let mut memory_term = 0.0;
    for (g, s) in partition.groups().iter().zip(&ing.s_a_given) {
        let mt = g.len() as f64;
        shift += mt * s;
        memory_term += mt * (mt - 2.0 * m + 1.0) / (2.0 * (m - 1.0)) * s;
    }
    let via_lhs = ing.lhs - shift;
    if (via_lhs - total).abs() > COHERENCE_TOL {
        return Err(Error::invariant(
            "coherence identity",
            format!("Σ C_r = {total} but lhs − Σ m_t S(A|B_t) = {via_lhs}"),
        ));
    }
    let delta = ing.delta();
    let dbl = admixture_or_none(ms, options.admixture)?.map(|t| ing.delta_dblprime(t.omega_beta));
    let best = dbl.map_or(delta, |x| x.max(delta)).max(0.0);
    Ok(CoherenceReport {
        per_measurement,
        total,
        bound: ing.sum_q / (m - 1.0) + memory_term + best,
        delta_mn: delta,
        delta_mn_dblprime: dbl,
        sum_q: ing.sum_q,
    })
}
