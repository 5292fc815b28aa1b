//! Bounds for general POVMs.

use serde::Serialize;

use crate::complementarity::q_povm_state;
use crate::error::{Error, Result};
use crate::measurement::{holevo_quantity, measured_conditional_entropy, povm_cq_state, register_label, Povm};
use crate::qstate::DensityMatrix;

use super::{MemoryPartition, MEASURED};

/// `S(A|B X)` on the post-measurement state of `x`; an empty memory gives `S(A|X)`.
pub fn povm_residual_entropy<S: AsRef<str>>(x: &Povm, rho: &DensityMatrix, memory: &[S]) -> Result<f64> {
    let cq = povm_cq_state(x, rho, MEASURED)?;
    let reg = register_label(MEASURED);
    let mut given: Vec<&str> = memory.iter().map(AsRef::as_ref).collect();
    given.push(&reg);
    cq.conditional_entropy(&[MEASURED], &given)
}

/// `f = min{S(A|B X_i), S(A|B X_j)}`; with empty memory this is `f̃`.
pub fn povm_f<S: AsRef<str>>(xi: &Povm, xj: &Povm, rho: &DensityMatrix, memory: &[S]) -> Result<f64> {
    Ok(povm_residual_entropy(xi, rho, memory)?.min(povm_residual_entropy(xj, rho, memory)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundPair {
    pub bound: f64,
    pub lhs: f64,
}

/// The three two-POVM relations: same memory, split memories, no memory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PovmPairBounds {
    /// `S(X_1|B) + S(X_2|B) ≥ q + S(A|B) − f`
    pub eq22: BoundPair,
    /// `S(X_1|B) + S(X_2|C) ≥ q`, present when the state has a `C` subsystem.
    pub eq23: Option<BoundPair>,
    /// `H(X_1) + H(X_2) ≥ q + S(A) − f̃`
    pub eq24: BoundPair,
}

pub fn povm_bipartite_bounds(rho: &DensityMatrix, x1: &Povm, x2: &Povm) -> Result<PovmPairBounds> {
    let rho_a = rho.partial_trace(&[MEASURED])?;
    let q = q_povm_state(&rho_a, x1, x2)?;
    let s = |x: &Povm, mem: &[&str]| measured_conditional_entropy(x, rho, MEASURED, mem);
    let eq22 = BoundPair {
        bound: q + rho.conditional_entropy(&[MEASURED], &["B"])? - povm_f(x1, x2, rho, &["B"])?,
        lhs: s(x1, &["B"])? + s(x2, &["B"])?,
    };
    let eq23 = if rho.dims().contains("C") {
        Some(BoundPair { bound: q, lhs: s(x1, &["B"])? + s(x2, &["C"])? })
    } else {
        None
    };
    let none: [&str; 0] = [];
    let eq24 = BoundPair {
        bound: q + rho_a.von_neumann_entropy()? - povm_f(x1, x2, rho, &none)?,
        lhs: s(x1, &[])? + s(x2, &[])?,
    };
    Ok(PovmPairBounds { eq22, eq23, eq24 })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PovmBoundReport {
    pub lhs: f64,
    pub bound: f64,
    pub kappa_mn: f64,
    /// `Σ_{i<j} q^{X_{i,j}}(ρ_A)`
    pub sum_q: f64,
    /// `Σ_t Σ_{i'<j' ∈ S_t} f`
    pub sum_f: f64,
    /// `Σ_{i<j} f̃`
    pub sum_f_tilde: f64,
}

/// Ingredients of the POVM bound that the printed specializations reuse.
pub(crate) struct PovmIngredients {
    pub m: usize,
    pub s_a: f64,
    pub lhs: f64,
    pub holevo: Vec<f64>,
    pub sum_q: f64,
    pub f_pairs: Vec<((usize, usize), f64)>,
    pub sum_f_tilde: f64,
}

pub(crate) fn povm_ingredients(
    rho: &DensityMatrix,
    partition: &MemoryPartition,
    povms: &[Povm],
) -> Result<PovmIngredients> {
    let m = povms.len();
    if m < 2 {
        return Err(Error::TooFewMeasurements { required: 2, found: m });
    }
    if partition.m() != m {
        return Err(Error::InvalidPartition(format!("partition covers {} measurements, got {m}", partition.m())));
    }
    partition.check_against(rho.dims())?;
    let d = rho.dims().dim_of(MEASURED)?;
    if let Some(bad) = povms.iter().find(|x| x.dim() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: bad.dim() });
    }
    let rho_a = rho.partial_trace(&[MEASURED])?;
    let mut lhs = 0.0;
    let mut holevo = vec![0.0; m];
    for (i, label) in partition.assignments() {
        lhs += measured_conditional_entropy(&povms[i], rho, MEASURED, &[label])?;
        holevo[i] = holevo_quantity(&povms[i], rho, MEASURED, &[label])?;
    }
    let none: [&str; 0] = [];
    let residual_free: Vec<f64> =
        povms.iter().map(|x| povm_residual_entropy(x, rho, &none)).collect::<Result<_>>()?;
    let mut sum_q = 0.0;
    let mut sum_f_tilde = 0.0;
    for i in 0..m {
        for j in i + 1..m {
            sum_q += q_povm_state(&rho_a, &povms[i], &povms[j])?;
            sum_f_tilde += residual_free[i].min(residual_free[j]);
        }
    }
    let mut f_pairs = Vec::new();
    for (g, label) in partition.groups().iter().zip(partition.memory_labels()) {
        let residual: Vec<f64> =
            g.iter().map(|&i| povm_residual_entropy(&povms[i], rho, &[label])).collect::<Result<_>>()?;
        for a in 0..g.len() {
            for b in a + 1..g.len() {
                let (i, j) = (g[a].min(g[b]), g[a].max(g[b]));
                f_pairs.push(((i, j), residual[a].min(residual[b])));
            }
        }
    }
    Ok(PovmIngredients { m, s_a: rho_a.von_neumann_entropy()?, lhs, holevo, sum_q, f_pairs, sum_f_tilde })
}

/// `m` POVMs, `n` memories.
pub fn theorem4_bound(rho: &DensityMatrix, partition: &MemoryPartition, povms: &[Povm]) -> Result<PovmBoundReport> {
    let ing = povm_ingredients(rho, partition, povms)?;
    let m = ing.m as f64;
    let mf = m - 1.0;
    let weights = partition.pair_weights();
    let weight_sum: f64 = weights.iter().sum();
    let mut memory_term = 0.0;
    let mut mutual_term = 0.0;
    for (w, label) in weights.iter().zip(partition.memory_labels()) {
        memory_term += w * rho.conditional_entropy(&[MEASURED], &[label.as_str()])?;
        mutual_term += w * rho.mutual_information(&[MEASURED], &[label.as_str()])?;
    }
    let sum_f: f64 = ing.f_pairs.iter().map(|(_, f)| f).sum();
    let holevo_sum: f64 = ing.holevo.iter().sum();
    let kappa = (m * mf / 2.0 - weight_sum) / mf * ing.s_a + mutual_term / mf - holevo_sum
        + (sum_f - ing.sum_f_tilde) / mf;
    let bound = memory_term / mf + ing.sum_q / mf - sum_f / mf + kappa.max(0.0);
    Ok(PovmBoundReport { lhs: ing.lhs, bound, kappa_mn: kappa, sum_q: ing.sum_q, sum_f, sum_f_tilde: ing.sum_f_tilde })
}
