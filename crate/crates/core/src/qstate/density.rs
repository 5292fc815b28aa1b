use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::linalg::{eigh, eigvalsh, embed_local, hermiticity_defect, hermitize, trace, CMatrix, CVector, C64, ZERO};

use super::SystemDims;

/// Tolerance for the Hermitian, trace and positivity invariants.
pub const STATE_TOL: f64 = 1e-8;

/// A density operator on a labeled composite system, stored dense.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: SystemDims,
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates shape, hermiticity, unit trace and positivity.
    pub fn new(dims: SystemDims, matrix: CMatrix) -> Result<Self> {
        let out = Self::from_parts(dims, matrix)?;
        out.validate()?;
        Ok(out)
    }

    /// Shape check only; callers guarantee the physical invariants.
    pub(crate) fn from_parts(dims: SystemDims, matrix: CMatrix) -> Result<Self> {
        let total = dims.total();
        if matrix.nrows() != total || matrix.ncols() != total {
            return Err(Error::DimensionMismatch { expected: total, found: matrix.nrows() });
        }
        Ok(Self { dims, matrix })
    }

    /// Hermitized wrapper for matrices produced by trace-preserving maps.
    pub(crate) fn from_map_output(dims: SystemDims, matrix: CMatrix) -> Self {
        Self { dims, matrix: hermitize(&matrix) }
    }

    /// `|psi><psi|` after normalizing `psi`.
    pub fn pure(dims: SystemDims, psi: &CVector) -> Result<Self> {
        let norm = psi.norm();
        if psi.len() != dims.total() {
            return Err(Error::DimensionMismatch { expected: dims.total(), found: psi.len() });
        }
        if norm < 1e-300 {
            return Err(Error::invariant("trace", "zero state vector"));
        }
        let v = psi.unscale(norm);
        Ok(Self { dims, matrix: &v * v.adjoint() })
    }

    pub fn maximally_mixed(dims: SystemDims) -> Self {
        let n = dims.total();
        let matrix = CMatrix::identity(n, n).unscale(n as f64);
        Self { dims, matrix }
    }

    /// Diagonal state in the computational basis.
    pub fn from_diagonal(dims: SystemDims, probs: &[f64]) -> Result<Self> {
        if probs.len() != dims.total() {
            return Err(Error::DimensionMismatch { expected: dims.total(), found: probs.len() });
        }
        let diag = CVector::from_iterator(probs.len(), probs.iter().map(|&p| C64::new(p, 0.0)));
        Self::new(dims, CMatrix::from_diagonal(&diag))
    }

    pub fn validate(&self) -> Result<()> {
        let herm = hermiticity_defect(&self.matrix);
        if herm > STATE_TOL {
            return Err(Error::invariant("hermitian", format!("max |M - M^dagger| = {herm:e}")));
        }
        let tr = trace(&self.matrix);
        if (tr.re - 1.0).abs() > STATE_TOL || tr.im.abs() > STATE_TOL {
            return Err(Error::invariant("trace", format!("trace = {} + {}i", tr.re, tr.im)));
        }
        let min = eigvalsh(&self.matrix).first().copied().unwrap_or(0.0);
        if min < -STATE_TOL {
            return Err(Error::invariant("positivity", format!("smallest eigenvalue {min:e}")));
        }
        Ok(())
    }

    pub fn dims(&self) -> &SystemDims {
        &self.dims
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    /// Kronecker product with concatenated labels.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let dims = self.dims.concat(&other.dims)?;
        Ok(Self { dims, matrix: self.matrix.kronecker(&other.matrix) })
    }

    /// Reduced state on `keep`; kept subsystems stay in their original order.
    pub fn partial_trace<S: AsRef<str>>(&self, keep: &[S]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::InvalidParameter("partial trace needs at least one kept label".into()));
        }
        let kept = self.dims.indices_of(keep)?;
        Ok(self.reduce_to(&kept))
    }

    pub(crate) fn reduce_to(&self, kept: &[usize]) -> DensityMatrix {
        let n = self.dims.len();
        if kept.len() == n {
            return self.clone();
        }
        let strides = self.dims.strides();
        let dims = self.dims.dims();
        let traced: Vec<usize> = (0..n).filter(|k| !kept.contains(k)).collect();
        let kept_offsets = offsets(kept, dims, &strides);
        let traced_offsets = offsets(&traced, dims, &strides);
        let dk = kept_offsets.len();
        let mut out = CMatrix::zeros(dk, dk);
        for (a, &ia) in kept_offsets.iter().enumerate() {
            for (b, &ib) in kept_offsets.iter().enumerate() {
                let mut acc = ZERO;
                for &t in &traced_offsets {
                    acc += self.matrix[(ia + t, ib + t)];
                }
                out[(a, b)] = acc;
            }
        }
        DensityMatrix { dims: self.dims.select(kept), matrix: out }
    }

    /// Eigenvalues (ascending) with `[-1e-8, 0)` clipped to zero.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        clip_spectrum(eigvalsh(&self.matrix))
    }

    /// `S(rho) = -tr rho log2 rho`, in bits.
    pub fn von_neumann_entropy(&self) -> Result<f64> {
        Ok(entropy_of_spectrum(&self.eigenvalues()?))
    }

    /// Entropy of the marginal on `labels`; the empty set has zero entropy.
    pub fn marginal_entropy<S: AsRef<str>>(&self, labels: &[S]) -> Result<f64> {
        if labels.is_empty() {
            return Ok(0.0);
        }
        self.partial_trace(labels)?.von_neumann_entropy()
    }

    /// `S(target | given) = S(target ∪ given) − S(given)`.
    pub fn conditional_entropy<S: AsRef<str>, T: AsRef<str>>(&self, target: &[S], given: &[T]) -> Result<f64> {
        disjoint(target, given)?;
        let joint: Vec<&str> = target.iter().map(AsRef::as_ref).chain(given.iter().map(AsRef::as_ref)).collect();
        Ok(self.marginal_entropy(&joint)? - self.marginal_entropy(given)?)
    }

    /// `I(x : y) = S(x) + S(y) − S(x ∪ y)`.
    pub fn mutual_information<S: AsRef<str>, T: AsRef<str>>(&self, x: &[S], y: &[T]) -> Result<f64> {
        disjoint(x, y)?;
        let joint: Vec<&str> = x.iter().map(AsRef::as_ref).chain(y.iter().map(AsRef::as_ref)).collect();
        Ok(self.marginal_entropy(x)? + self.marginal_entropy(y)? - self.marginal_entropy(&joint)?)
    }

    /// Spectral purification onto a fresh subsystem labeled `E`.
    pub fn purify(&self) -> Result<DensityMatrix> {
        self.purify_as("E")
    }

    /// Spectral purification onto a fresh subsystem `label` of dimension
    /// `rank(rho)`. Eigenpairs are taken in descending eigenvalue order, ties
    /// broken by lexicographic order of the eigenvector's (re, im) entries.
    pub fn purify_as(&self, label: &str) -> Result<DensityMatrix> {
        if self.dims.contains(label) {
            return Err(Error::LabelCollision(label.to_string()));
        }
        let (vals, vecs) = eigh(&self.matrix);
        let vals = clip_spectrum(vals)?;
        let mut pairs: Vec<(f64, CVector)> = vals
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 1e-12)
            .map(|(i, &v)| (v, vecs.column(i).into_owned()))
            .collect();
        pairs.sort_by(|a, b| match b.0.total_cmp(&a.0) {
            Ordering::Equal => lexicographic(&a.1, &b.1),
            o if (a.0 - b.0).abs() < 1e-12 => lexicographic(&a.1, &b.1).then(o),
            o => o,
        });
        let rank = pairs.len();
        let n = self.dim();
        let mut psi = CVector::zeros(n * rank);
        for (k, (lambda, v)) in pairs.iter().enumerate() {
            let amp = lambda.sqrt();
            for i in 0..n {
                psi[i * rank + k] += v[i] * amp;
            }
        }
        let mut labels: Vec<String> = self.dims.labels().to_vec();
        labels.push(label.to_string());
        let mut dims: Vec<usize> = self.dims.dims().to_vec();
        dims.push(rank);
        let dims = SystemDims::allowing_trivial(labels, dims)?;
        let matrix = &psi * psi.adjoint();
        Ok(DensityMatrix { dims, matrix })
    }

    /// `(I ⊗ op_k ⊗ I) rho (I ⊗ op_k ⊗ I)†` on subsystem `k`, without renormalizing.
    pub(crate) fn conjugate_local(&self, k: usize, op: &CMatrix) -> CMatrix {
        let full = embed_local(op, k, self.dims.dims());
        &full * &self.matrix * full.adjoint()
    }
}

fn offsets(subsystems: &[usize], dims: &[usize], strides: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize];
    for &k in subsystems {
        let mut next = Vec::with_capacity(out.len() * dims[k]);
        for &base in &out {
            for digit in 0..dims[k] {
                next.push(base + digit * strides[k]);
            }
        }
        out = next;
    }
    out
}

fn disjoint<S: AsRef<str>, T: AsRef<str>>(x: &[S], y: &[T]) -> Result<()> {
    for a in x {
        if y.iter().any(|b| b.as_ref() == a.as_ref()) {
            return Err(Error::OverlappingLabels(a.as_ref().to_string()));
        }
    }
    Ok(())
}

fn lexicographic(a: &CVector, b: &CVector) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

pub(crate) fn clip_spectrum(mut vals: Vec<f64>) -> Result<Vec<f64>> {
    for v in vals.iter_mut() {
        if *v < -STATE_TOL {
            return Err(Error::invariant("positivity", format!("eigenvalue {v:e} below -1e-8")));
        }
        *v = v.clamp(0.0, 1.0);
    }
    Ok(vals)
}

/// `-Σ λ log2 λ` with `0 log 0 = 0`.
pub(crate) fn entropy_of_spectrum(vals: &[f64]) -> f64 {
    vals.iter().filter(|&&l| l > 0.0).map(|&l| -l * l.log2()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::states::*;

    const LOG2_3: f64 = 1.584_962_500_721_156_3;

    #[test]
    fn tensor_of_maximally_mixed_is_maximally_mixed() {
        let a = DensityMatrix::maximally_mixed(SystemDims::uniform(&["A"], 2).unwrap());
        let b = DensityMatrix::maximally_mixed(SystemDims::uniform(&["B"], 2).unwrap());
        let ab = a.tensor(&b).unwrap();
        assert_eq!(ab.dims().labels(), &["A".to_string(), "B".to_string()]);
        let i4 = DensityMatrix::maximally_mixed(SystemDims::uniform(&["A", "B"], 2).unwrap());
        assert!(crate::linalg::max_abs_diff(ab.matrix(), i4.matrix()) < 1e-15);
        assert!(matches!(a.tensor(&a), Err(Error::LabelCollision(_))));
    }

    #[test]
    fn pure_product_tensor() {
        let zero = basis_state(&["A"], 2, 0);
        let one = basis_state(&["B"], 2, 1);
        let prod = zero.tensor(&one).unwrap();
        let expected = basis_state(&["A", "B"], 2, 1);
        assert!(crate::linalg::max_abs_diff(prod.matrix(), expected.matrix()) < 1e-15);
    }

    #[test]
    fn qutrit_marginal_tensor_is_i9() {
        let ghz = ghz(3, 3);
        let a = ghz.partial_trace(&["A"]).unwrap();
        let b = DensityMatrix::maximally_mixed(SystemDims::uniform(&["X"], 3).unwrap());
        let ab = a.tensor(&b).unwrap();
        let i9 = CMatrix::identity(9, 9).unscale(9.0);
        assert!(crate::linalg::max_abs_diff(ab.matrix(), &i9) < 1e-14);
    }

    #[test]
    fn marginals_of_entangled_states() {
        let bell = bell();
        let a = bell.partial_trace(&["A"]).unwrap();
        assert!(crate::linalg::max_abs_diff(a.matrix(), &CMatrix::identity(2, 2).unscale(2.0)) < 1e-15);
        let ghz = ghz(3, 3);
        let a = ghz.partial_trace(&["A"]).unwrap();
        assert!(crate::linalg::max_abs_diff(a.matrix(), &CMatrix::identity(3, 3).unscale(3.0)) < 1e-15);
        assert!(matches!(ghz.partial_trace(&["Q"]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn product_marginal_recovers_factor() {
        let sigma = DensityMatrix::from_diagonal(SystemDims::uniform(&["A"], 2).unwrap(), &[0.3, 0.7]).unwrap();
        let tau = DensityMatrix::from_diagonal(SystemDims::uniform(&["B"], 3).unwrap(), &[0.2, 0.5, 0.3]).unwrap();
        let st = sigma.tensor(&tau).unwrap();
        let back = st.partial_trace(&["B"]).unwrap();
        assert!(crate::linalg::max_abs_diff(back.matrix(), tau.matrix()) < 1e-15);
    }

    #[test]
    fn entropy_examples() {
        assert!(bell().von_neumann_entropy().unwrap().abs() < 1e-12);
        let i3 = DensityMatrix::maximally_mixed(SystemDims::uniform(&["A"], 3).unwrap());
        assert!((i3.von_neumann_entropy().unwrap() - LOG2_3).abs() < 1e-12);
        let half = DensityMatrix::from_diagonal(SystemDims::uniform(&["A"], 3).unwrap(), &[0.5, 0.5, 0.0]).unwrap();
        assert!((half.von_neumann_entropy().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_rejects_negative_spectrum() {
        let dims = SystemDims::uniform(&["A"], 2).unwrap();
        let bad = CMatrix::from_diagonal(&CVector::from_vec(vec![C64::new(1.1, 0.0), C64::new(-0.1, 0.0)]));
        assert!(matches!(
            DensityMatrix::new(dims.clone(), bad.clone()),
            Err(Error::Invariant { invariant: "positivity", .. })
        ));
        let unchecked = DensityMatrix::from_parts(dims, bad).unwrap();
        assert!(unchecked.von_neumann_entropy().is_err());
    }

    #[test]
    fn conditional_entropy_examples() {
        assert!((bell().conditional_entropy(&["A"], &["B"]).unwrap() + 1.0).abs() < 1e-12);
        assert!((ghz(3, 3).conditional_entropy(&["A"], &["B", "C"]).unwrap() + LOG2_3).abs() < 1e-12);
        let prod = DensityMatrix::maximally_mixed(SystemDims::uniform(&["A", "B"], 2).unwrap());
        assert!((prod.conditional_entropy(&["A"], &["B"]).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(prod.conditional_entropy(&["A"], &["A"]), Err(Error::OverlappingLabels(_))));
    }

    #[test]
    fn mutual_information_examples() {
        let prod = DensityMatrix::maximally_mixed(SystemDims::uniform(&["A", "B"], 2).unwrap());
        assert!(prod.mutual_information(&["A"], &["B"]).unwrap().abs() < 1e-12);
        assert!((bell().mutual_information(&["A"], &["B"]).unwrap() - 2.0).abs() < 1e-12);
        // GHZ qutrit: rho_AB is classically correlated with S(rho_AB) = log2 3.
        assert!((ghz(3, 3).mutual_information(&["A"], &["B"]).unwrap() - LOG2_3).abs() < 1e-12);
    }

    #[test]
    fn purification_examples() {
        let i2 = DensityMatrix::maximally_mixed(SystemDims::uniform(&["A"], 2).unwrap());
        let p = i2.purify().unwrap();
        assert_eq!(p.dims().dims(), &[2, 2]);
        assert!((p.purity() - 1.0).abs() < 1e-12);
        assert!((p.mutual_information(&["A"], &["E"]).unwrap() - 2.0).abs() < 1e-12);

        let skew = DensityMatrix::from_diagonal(SystemDims::uniform(&["A"], 2).unwrap(), &[0.75, 0.25]).unwrap();
        let p = skew.purify().unwrap();
        // |psi> = sqrt(.75)|00> + sqrt(.25)|11>
        let m = p.matrix();
        assert!((m[(0, 0)].re - 0.75).abs() < 1e-12);
        assert!((m[(3, 3)].re - 0.25).abs() < 1e-12);
        assert!((m[(0, 3)].norm() - (0.75f64 * 0.25).sqrt()).abs() < 1e-12);

        let pure = bell();
        let p = pure.purify().unwrap();
        assert_eq!(p.dims().dims(), &[2, 2, 1]);
        let back = p.partial_trace(&["A", "B"]).unwrap();
        assert!(crate::linalg::max_abs_diff(back.matrix(), pure.matrix()) < 1e-12);
        assert!(matches!(p.purify_as("A"), Err(Error::LabelCollision(_))));
    }
}
