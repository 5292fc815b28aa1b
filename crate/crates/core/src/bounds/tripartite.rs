use serde::Serialize;

use crate::complementarity::{q_variant, QVariant};
use crate::error::{Error, Result};
use crate::measurement::{holevo_quantity, measured_conditional_entropy, ProjectiveMeasurement};
use crate::qstate::DensityMatrix;

use super::MEASURED;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TripartiteBound {
    /// `Q + max{0, Δ}`
    pub bound: f64,
    /// `S(M_1|B) + S(M_2|C)`
    pub lhs: f64,
    /// `Δ = S(A) − I(M_1:B) − I(M_2:C)`
    pub delta: f64,
    pub q: f64,
}

/// Tripartite bound for `M_1` guessed by `memory_1` and `M_2` by `memory_2`.
pub fn tripartite_bound(
    rho: &DensityMatrix,
    m1: &ProjectiveMeasurement,
    m2: &ProjectiveMeasurement,
    memories: (&str, &str),
    variant: QVariant,
) -> Result<TripartiteBound> {
    let (b, c) = memories;
    if b == c || b == MEASURED || c == MEASURED {
        return Err(Error::OverlappingLabels(if b == c { b } else { MEASURED }.to_string()));
    }
    let rho_a = rho.partial_trace(&[MEASURED])?;
    let q = q_variant(m1, m2, Some(&rho_a), variant)?;
    let delta = rho_a.von_neumann_entropy()?
        - holevo_quantity(m1, rho, MEASURED, &[b])?
        - holevo_quantity(m2, rho, MEASURED, &[c])?;
    let lhs = measured_conditional_entropy(m1, rho, MEASURED, &[b])? + measured_conditional_entropy(m2, rho, MEASURED, &[c])?;
    Ok(TripartiteBound { bound: q + delta.max(0.0), lhs, delta, q })
}

/// [`tripartite_bound`] on a state labeled `A, B, C`.
pub fn theorem1_bound(
    rho_abc: &DensityMatrix,
    m1: &ProjectiveMeasurement,
    m2: &ProjectiveMeasurement,
    variant: QVariant,
) -> Result<TripartiteBound> {
    tripartite_bound(rho_abc, m1, m2, ("B", "C"), variant)
}
