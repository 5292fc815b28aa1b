use crate::error::{Error, Result};
use crate::linalg::eigvalsh;
use crate::measurement::{Measurement, Povm};
use crate::qstate::DensityMatrix;

/// `h_j(X_1, X_2) = ‖Σ_k X²_k X¹_j X²_k‖_∞`, one entry per effect of `x1`.
pub fn povm_h(x1: &Povm, x2: &Povm) -> Vec<f64> {
    x1.effects()
        .iter()
        .map(|e1| {
            let sum = x2.effects().iter().fold(e1.scale(0.0), |acc, e2| acc + e2 * e1 * e2);
            *eigvalsh(&sum).last().expect("non-empty spectrum")
        })
        .collect()
}

/// `max{q(ρ_A, X_1, X_2), q(ρ_A, X_2, X_1)}` with `q(ρ_A, X_1, X_2) = −Σ_j p_j log2 h_j`.
pub fn q_povm_state(rho_a: &DensityMatrix, x1: &Povm, x2: &Povm) -> Result<f64> {
    if x1.dim() != x2.dim() {
        return Err(Error::DimensionMismatch { expected: x1.dim(), found: x2.dim() });
    }
    let directional = |a: &Povm, b: &Povm| -> Result<f64> {
        let p = a.probabilities(rho_a)?;
        Ok(p.entries().iter().zip(povm_h(a, b)).filter(|(&pj, _)| pj > 0.0).map(|(&pj, h)| -pj * h.log2()).sum())
    };
    Ok(directional(x1, x2)?.max(directional(x2, x1)?))
}
