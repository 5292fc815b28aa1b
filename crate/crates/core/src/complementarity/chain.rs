use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::measurement::{overlap_matrix, ProjectiveMeasurement};

/// `b = max_{k_m} Σ_{k_2..k_{m−1}} max_{k_1} c^{12}_{k_1 k_2} ∏_i c^{i,i+1}_{k_i k_{i+1}}`,
/// evaluated as a vector contraction along the chain.
pub fn chain_b(ms: &[ProjectiveMeasurement]) -> Result<f64> {
    Ok(chain_vector(ms)?.max())
}

/// The contracted chain before the final maximum, indexed by `k_m`.
pub(crate) fn chain_vector(ms: &[ProjectiveMeasurement]) -> Result<DVector<f64>> {
    if ms.len() < 2 {
        return Err(Error::TooFewMeasurements { required: 2, found: ms.len() });
    }
    let first = overlap_matrix(&ms[0], &ms[1])?.c;
    let mut v = DVector::from_iterator(first.ncols(), first.column_iter().map(|c| c.max()));
    for pair in ms[1..].windows(2) {
        let c = overlap_matrix(&pair[0], &pair[1])?.c;
        v = c.tr_mul(&v);
    }
    Ok(v)
}
