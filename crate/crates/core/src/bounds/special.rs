//! The one-memory and one-memory-per-measurement forms of the optimal and POVM
//! bounds, evaluated from their own closed expressions rather than through
//! the general partition code.

use crate::complementarity::{q_povm_state, q_variant};
use crate::error::Result;
use crate::measurement::{holevo_quantity, Povm, ProjectiveMeasurement};
use crate::qstate::DensityMatrix;

use super::multi::admixture_or_none;
use super::povm::povm_f;
use super::{BoundOptions, MEASURED};

fn pair_sum(m: usize, mut f: impl FnMut(usize, usize) -> Result<f64>) -> Result<f64> {
    let mut total = 0.0;
    for i in 0..m {
        for j in i + 1..m {
            total += f(i, j)?;
        }
    }
    Ok(total)
}

/// All measurements guessed by `memory` (`n = 1`, `m_t = m`).
pub fn optimal_bound_single_memory(
    rho: &DensityMatrix,
    ms: &[ProjectiveMeasurement],
    memory: &str,
    options: BoundOptions,
) -> Result<f64> {
    let m = ms.len() as f64;
    let rho_a = rho.partial_trace(&[MEASURED])?;
    let s_a = rho_a.von_neumann_entropy()?;
    let sum_q = pair_sum(ms.len(), |i, j| q_variant(&ms[i], &ms[j], Some(&rho_a), options.q_variant))?;
    let holevo: f64 = ms.iter().map(|x| holevo_quantity(x, rho, MEASURED, &[memory])).sum::<Result<f64>>()?;
    let i_ab = rho.mutual_information(&[MEASURED], &[memory])?;
    let delta = m / 2.0 * i_ab - holevo;
    let mut best = delta.max(0.0);
    if let Some(t) = admixture_or_none(ms, options.admixture)? {
        let dbl = -t.omega_beta / m + (m - 1.0) * s_a - m / 2.0 * s_a + m / 2.0 * i_ab - sum_q / (m - 1.0) - holevo;
        best = best.max(dbl);
    }
    Ok(sum_q / (m - 1.0) + m / 2.0 * rho.conditional_entropy(&[MEASURED], &[memory])? + best)
}

/// Measurement `i` guessed by `memories[i]` (`n = m`, `m_t = 1`).
pub fn optimal_bound_separate_memories<S: AsRef<str>>(
    rho: &DensityMatrix,
    ms: &[ProjectiveMeasurement],
    memories: &[S],
    options: BoundOptions,
) -> Result<f64> {
    let m = ms.len() as f64;
    let rho_a = rho.partial_trace(&[MEASURED])?;
    let s_a = rho_a.von_neumann_entropy()?;
    let sum_q = pair_sum(ms.len(), |i, j| q_variant(&ms[i], &ms[j], Some(&rho_a), options.q_variant))?;
    let holevo: f64 = ms
        .iter()
        .zip(memories)
        .map(|(x, b)| holevo_quantity(x, rho, MEASURED, &[b.as_ref()]))
        .sum::<Result<f64>>()?;
    let delta = m / 2.0 * s_a - holevo;
    let mut best = delta.max(0.0);
    if let Some(t) = admixture_or_none(ms, options.admixture)? {
        let dbl = -t.omega_beta / m + (m - 1.0) * s_a - holevo - sum_q / (m - 1.0);
        best = best.max(dbl);
    }
    Ok(sum_q / (m - 1.0) + best)
}

/// POVM bound with every outcome guessed by `memory`.
pub fn theorem4_single_memory(rho: &DensityMatrix, povms: &[Povm], memory: &str) -> Result<f64> {
    let m = povms.len() as f64;
    let rho_a = rho.partial_trace(&[MEASURED])?;
    let sum_q = pair_sum(povms.len(), |i, j| q_povm_state(&rho_a, &povms[i], &povms[j]))?;
    let sum_f = pair_sum(povms.len(), |i, j| povm_f(&povms[i], &povms[j], rho, &[memory]))?;
    let none: [&str; 0] = [];
    let sum_f_tilde = pair_sum(povms.len(), |i, j| povm_f(&povms[i], &povms[j], rho, &none))?;
    let holevo: f64 = povms.iter().map(|x| holevo_quantity(x, rho, MEASURED, &[memory])).sum::<Result<f64>>()?;
    let kappa = m / 2.0 * rho.mutual_information(&[MEASURED], &[memory])? - holevo + (sum_f - sum_f_tilde) / (m - 1.0);
    Ok(sum_q / (m - 1.0) + m / 2.0 * rho.conditional_entropy(&[MEASURED], &[memory])? - sum_f / (m - 1.0)
        + kappa.max(0.0))
}

/// POVM bound with outcome `i` guessed by `memories[i]`.
pub fn theorem4_separate_memories<S: AsRef<str>>(rho: &DensityMatrix, povms: &[Povm], memories: &[S]) -> Result<f64> {
    let m = povms.len() as f64;
    let rho_a = rho.partial_trace(&[MEASURED])?;
    let sum_q = pair_sum(povms.len(), |i, j| q_povm_state(&rho_a, &povms[i], &povms[j]))?;
    let none: [&str; 0] = [];
    let sum_f_tilde = pair_sum(povms.len(), |i, j| povm_f(&povms[i], &povms[j], rho, &none))?;
    let holevo: f64 = povms
        .iter()
        .zip(memories)
        .map(|(x, b)| holevo_quantity(x, rho, MEASURED, &[b.as_ref()]))
        .sum::<Result<f64>>()?;
    let kappa = m / 2.0 * rho_a.von_neumann_entropy()? - holevo - sum_f_tilde / (m - 1.0);
    Ok(sum_q / (m - 1.0) + kappa.max(0.0))
}
