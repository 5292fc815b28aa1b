//! Post-measurement classical-quantum states and the entropies read off them.

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::qstate::{shannon_entropy, DensityMatrix, ProbabilityVector, SystemDims};

use super::{Povm, ProjectiveMeasurement};

/// Anything that can be measured on one subsystem and leaves a classical
/// register behind.
pub trait Measurement {
    fn dim(&self) -> usize;

    /// `p_j = tr(X_j rho_A)`.
    fn probabilities(&self, rho_a: &DensityMatrix) -> Result<ProbabilityVector>;

    /// The post-measurement state and the label of the subsystem holding the
    /// outcome.
    fn cq_state(&self, rho: &DensityMatrix, measured: &str) -> Result<(DensityMatrix, String)>;
}

impl Measurement for ProjectiveMeasurement {
    fn dim(&self) -> usize {
        ProjectiveMeasurement::dim(self)
    }

    fn probabilities(&self, rho_a: &DensityMatrix) -> Result<ProbabilityVector> {
        check_dim(self.dim(), rho_a.dim())?;
        let p = self.vectors().iter().map(|v| v.dotc(&(rho_a.matrix() * v)).re.max(0.0)).collect();
        ProbabilityVector::new(p)
    }

    fn cq_state(&self, rho: &DensityMatrix, measured: &str) -> Result<(DensityMatrix, String)> {
        Ok((projective_cq_state(self, rho, measured)?, measured.to_string()))
    }
}

impl Measurement for Povm {
    fn dim(&self) -> usize {
        Povm::dim(self)
    }

    fn probabilities(&self, rho_a: &DensityMatrix) -> Result<ProbabilityVector> {
        check_dim(self.dim(), rho_a.dim())?;
        let p = self.effects().iter().map(|e| (e * rho_a.matrix()).trace().re.max(0.0)).collect();
        ProbabilityVector::new(p)
    }

    fn cq_state(&self, rho: &DensityMatrix, measured: &str) -> Result<(DensityMatrix, String)> {
        let out = povm_cq_state(self, rho, measured)?;
        Ok((out, register_label(measured)))
    }
}

/// Label of the classical register appended by [`povm_cq_state`].
pub fn register_label(measured: &str) -> String {
    format!("X:{measured}")
}

/// `Σ_k (P_k ⊗ I) rho (P_k ⊗ I)`: dephasing of `measured` in the basis.
pub fn projective_cq_state(m: &ProjectiveMeasurement, rho: &DensityMatrix, measured: &str) -> Result<DensityMatrix> {
    let k = rho.dims().index_of(measured)?;
    check_dim(m.dim(), rho.dims().dims()[k])?;
    let n = rho.dim();
    let mut out = CMatrix::zeros(n, n);
    for p in m.projectors() {
        out += rho.conjugate_local(k, &p);
    }
    Ok(DensityMatrix::from_map_output(rho.dims().clone(), out))
}

/// `Σ_j (√X_j ⊗ I) rho (√X_j ⊗ I) ⊗ |j><j|` with the register `X:<measured>`
/// appended as the last subsystem.
pub fn povm_cq_state(x: &Povm, rho: &DensityMatrix, measured: &str) -> Result<DensityMatrix> {
    let k = rho.dims().index_of(measured)?;
    check_dim(x.dim(), rho.dims().dims()[k])?;
    let label = register_label(measured);
    if rho.dims().contains(&label) {
        return Err(Error::LabelCollision(label));
    }
    let r = x.len();
    let reg = SystemDims::allowing_trivial([label], [r])?;
    let dims = rho.dims().concat(&reg)?;
    let n = rho.dim();
    let mut out = CMatrix::zeros(n * r, n * r);
    for (j, kraus) in x.kraus().iter().enumerate() {
        let block = rho.conjugate_local(k, kraus);
        for a in 0..n {
            for b in 0..n {
                out[(a * r + j, b * r + j)] = block[(a, b)];
            }
        }
    }
    Ok(DensityMatrix::from_map_output(dims, out))
}

/// `S(M|B) = S(ρ_{MB}) − S(ρ_B)` on the post-measurement state. An empty
/// memory gives the Shannon entropy of the outcomes.
pub fn measured_conditional_entropy<M: Measurement + ?Sized, S: AsRef<str>>(
    m: &M,
    rho: &DensityMatrix,
    measured: &str,
    memory: &[S],
) -> Result<f64> {
    check_memory(measured, memory)?;
    let (cq, reg) = m.cq_state(rho, measured)?;
    cq.conditional_entropy(&[reg.as_str()], memory)
}

/// `I(M:B) = S(M) + S(ρ_B) − S(ρ_{MB})`.
pub fn holevo_quantity<M: Measurement + ?Sized, S: AsRef<str>>(
    m: &M,
    rho: &DensityMatrix,
    measured: &str,
    memory: &[S],
) -> Result<f64> {
    check_memory(measured, memory)?;
    let (cq, reg) = m.cq_state(rho, measured)?;
    cq.mutual_information(&[reg.as_str()], memory)
}

/// Shannon entropy of the outcome distribution on the marginal of `measured`.
pub fn outcome_entropy<M: Measurement + ?Sized>(m: &M, rho: &DensityMatrix, measured: &str) -> Result<f64> {
    let rho_a = rho.partial_trace(&[measured])?;
    Ok(shannon_entropy(&m.probabilities(&rho_a)?))
}

/// Free-function form of [`Measurement::probabilities`].
pub fn outcome_probabilities<M: Measurement + ?Sized>(m: &M, rho_a: &DensityMatrix) -> Result<ProbabilityVector> {
    m.probabilities(rho_a)
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn check_memory<S: AsRef<str>>(measured: &str, memory: &[S]) -> Result<()> {
    if memory.iter().any(|b| b.as_ref() == measured) {
        return Err(Error::OverlappingLabels(measured.to_string()));
    }
    Ok(())
}

