use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::linalg::{outer, overlap_sq, CMatrix, CVector, C64};
use crate::qstate::random_unitary;

/// Gram and completeness tolerance for bases and POVMs.
pub const MEASUREMENT_TOL: f64 = 1e-8;

/// An orthonormal basis `{|φ_k>}`; outcome `k` corresponds to `vectors[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveMeasurement {
    vectors: Vec<CVector>,
}

impl ProjectiveMeasurement {
    pub fn new(vectors: Vec<CVector>) -> Result<Self> {
        let d = vectors.len();
        if d < 2 {
            return Err(Error::InvalidDims(format!("basis with {d} vectors")));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: v.len() });
        }
        for i in 0..d {
            for j in 0..d {
                let g = vectors[i].dotc(&vectors[j]);
                let target = if i == j { 1.0 } else { 0.0 };
                if (g - C64::new(target, 0.0)).norm() > MEASUREMENT_TOL {
                    return Err(Error::invariant(
                        "orthonormality",
                        format!("<φ_{i}|φ_{j}> = {} + {}i", g.re, g.im),
                    ));
                }
            }
        }
        Ok(Self { vectors })
    }

    /// Basis vectors given as rows of complex amplitudes.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| CVector::from_column_slice(r)).collect())
    }

    /// Basis vectors given as rows of real amplitudes.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| CVector::from_iterator(r.len(), r.iter().map(|&x| C64::new(x, 0.0))))
                .collect(),
        )
    }

    /// The columns of a unitary matrix.
    pub fn from_columns(u: &CMatrix) -> Result<Self> {
        Self::new(u.column_iter().map(|c| c.into_owned()).collect())
    }

    pub fn computational(d: usize) -> Self {
        Self::from_columns(&CMatrix::identity(d, d)).expect("identity is unitary")
    }

    /// `|f_k> = Σ_j ω^{jk} |j> / sqrt d` with `ω = exp(2πi/d)`.
    pub fn fourier(d: usize) -> Self {
        let norm = (d as f64).sqrt();
        let vectors = (0..d)
            .map(|k| {
                CVector::from_iterator(
                    d,
                    (0..d).map(|j| C64::from_polar(1.0 / norm, 2.0 * std::f64::consts::PI * (j * k) as f64 / d as f64)),
                )
            })
            .collect();
        Self::new(vectors).expect("Fourier basis is orthonormal")
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[CVector] {
        &self.vectors
    }

    pub fn projector(&self, k: usize) -> CMatrix {
        outer(&self.vectors[k], &self.vectors[k])
    }

    pub fn projectors(&self) -> Vec<CMatrix> {
        (0..self.dim()).map(|k| self.projector(k)).collect()
    }
}

/// `c_{kl} = |<φ^i_k|φ^j_l>|^2` with its largest and second-largest entries.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapData {
    pub c: DMatrix<f64>,
    pub c_max: f64,
    /// Second element of the descending multiset of all `d²` entries; equals
    /// `c_max` when the maximum is attained more than once.
    pub c_second: f64,
}

pub fn overlap_matrix(mi: &ProjectiveMeasurement, mj: &ProjectiveMeasurement) -> Result<OverlapData> {
    let d = mi.dim();
    if mj.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: mj.dim() });
    }
    let c = DMatrix::from_fn(d, d, |k, l| overlap_sq(&mi.vectors[k], &mj.vectors[l]));
    let mut sorted: Vec<f64> = c.iter().copied().collect();
    sorted.sort_by(|a, b| b.total_cmp(a));
    Ok(OverlapData { c_max: sorted[0], c_second: sorted[1], c })
}

/// True iff every cross-basis overlap is `1/d` within `tol`.
pub fn is_mub_family(ms: &[ProjectiveMeasurement], tol: f64) -> bool {
    let Some(first) = ms.first() else { return true };
    let d = first.dim();
    if ms.iter().any(|m| m.dim() != d) {
        return false;
    }
    let target = 1.0 / d as f64;
    for (i, a) in ms.iter().enumerate() {
        for b in &ms[i + 1..] {
            for u in a.vectors() {
                for v in b.vectors() {
                    if (overlap_sq(u, v) - target).abs() > tol {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Eigenbasis of a seeded random Hermitian matrix (same recipe as random states).
pub fn random_projective_measurement(dim: usize, seed: u64) -> ProjectiveMeasurement {
    random_projective_measurement_from(&mut ChaCha20Rng::seed_from_u64(seed), dim)
}

pub fn random_projective_measurement_from<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ProjectiveMeasurement {
    ProjectiveMeasurement::from_columns(&random_unitary(rng, dim)).expect("eigenvectors are orthonormal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_orthogonal() {
        let err = ProjectiveMeasurement::from_real_rows(&[vec![1.0, 0.0], vec![1.0, 0.0]]).unwrap_err();
        assert!(matches!(err, Error::Invariant { invariant: "orthonormality", .. }));
    }

    #[test]
    fn identical_bases_give_identity_overlap() {
        let z = ProjectiveMeasurement::computational(3);
        let o = overlap_matrix(&z, &z).unwrap();
        assert_eq!(o.c, DMatrix::identity(3, 3));
        assert_eq!(o.c_max, 1.0);
        assert_eq!(o.c_second, 1.0);
    }

    #[test]
    fn computational_and_fourier_are_unbiased() {
        let o = overlap_matrix(&ProjectiveMeasurement::computational(3), &ProjectiveMeasurement::fourier(3)).unwrap();
        assert!(o.c.iter().all(|&x| (x - 1.0 / 3.0).abs() < 1e-12));
    }

    #[test]
    fn overlap_rows_and_columns_sum_to_one() {
        for s in 0..20 {
            let a = random_projective_measurement(3, s);
            let b = random_projective_measurement(3, 100 + s);
            let o = overlap_matrix(&a, &b).unwrap();
            for k in 0..3 {
                assert!((o.c.row(k).sum() - 1.0).abs() < 1e-10);
                assert!((o.c.column(k).sum() - 1.0).abs() < 1e-10);
            }
            assert!(o.c_max >= o.c_second);
            let t = overlap_matrix(&b, &a).unwrap();
            assert!((t.c.transpose() - &o.c).abs().max() < 1e-15);
        }
    }

    #[test]
    fn random_measurement_is_deterministic_and_orthonormal() {
        let a = random_projective_measurement(3, 5);
        let b = random_projective_measurement(3, 5);
        assert_eq!(a, b);
        let u = CMatrix::from_columns(a.vectors());
        let gram = u.adjoint() * &u;
        assert!((gram - CMatrix::identity(3, 3)).iter().all(|x| x.norm() < 1e-10));
    }

    #[test]
    fn distinct_seeds_give_incompatible_bases() {
        for s in 0..50 {
            let o = overlap_matrix(&random_projective_measurement(3, 2 * s), &random_projective_measurement(3, 2 * s + 1))
                .unwrap();
            assert!((o.c.clone() - DMatrix::identity(3, 3)).abs().max() > 1e-6);
        }
    }

    #[test]
    fn mub_detection() {
        let z = ProjectiveMeasurement::computational(2);
        let x = ProjectiveMeasurement::fourier(2);
        assert!(is_mub_family(&[z.clone(), x], 1e-9));
        assert!(!is_mub_family(&[z.clone(), z], 1e-9));
    }
}
