//! Dense complex matrix helpers shared by every module.

use nalgebra::{Complex, DMatrix, DVector, SymmetricEigen};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);

/// (M + M†) / 2
pub fn hermitize(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).scale(0.5)
}

/// Largest absolute entry of `M − M†`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Eigen-decomposition of a Hermitian matrix with eigenvalues in ascending
/// order and eigenvectors as the matching columns. The input is hermitized first.
pub fn eigh(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = m.nrows();
    let eig = SymmetricEigen::new(hermitize(m));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vectors.set_column(col, &eig.eigenvectors.column(i));
    }
    (values, vectors)
}

/// Eigenvalues only, ascending.
pub fn eigvalsh(m: &CMatrix) -> Vec<f64> {
    let mut v: Vec<f64> = SymmetricEigen::new(hermitize(m)).eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Identity on `dims[..k]`, `op` on subsystem `k`, identity on the rest.
pub fn embed_local(op: &CMatrix, k: usize, dims: &[usize]) -> CMatrix {
    let left: usize = dims[..k].iter().product();
    let right: usize = dims[k + 1..].iter().product();
    let l = CMatrix::identity(left, left);
    let r = CMatrix::identity(right, right);
    kron(&kron(&l, op), &r)
}

/// Square root of a positive semidefinite matrix via its spectral form.
/// Eigenvalues in `[-1e-8, 0)` are clipped to zero.
pub fn psd_sqrt(m: &CMatrix) -> CMatrix {
    let (vals, vecs) = eigh(m);
    let roots = DVector::from_iterator(
        vals.len(),
        vals.iter().map(|&v| C64::new(v.max(0.0).sqrt(), 0.0)),
    );
    &vecs * CMatrix::from_diagonal(&roots) * vecs.adjoint()
}

/// Inverse square root restricted to the support of a PSD matrix.
pub(crate) fn psd_inv_sqrt(m: &CMatrix) -> CMatrix {
    let (vals, vecs) = eigh(m);
    let roots = DVector::from_iterator(
        vals.len(),
        vals.iter().map(|&v| if v > 1e-14 { C64::new(1.0 / v.sqrt(), 0.0) } else { ZERO }),
    );
    &vecs * CMatrix::from_diagonal(&roots) * vecs.adjoint()
}

pub fn outer(u: &CVector, v: &CVector) -> CMatrix {
    u * v.adjoint()
}

/// `|<u|v>|^2`
pub fn overlap_sq(u: &CVector, v: &CVector) -> f64 {
    u.dotc(v).norm_sqr()
}

pub fn trace(m: &CMatrix) -> C64 {
    m.diagonal().iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigh_sorts_ascending_and_reconstructs() {
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(2.0, 0.0), C64::new(0.0, 1.0), C64::new(0.0, -1.0), C64::new(2.0, 0.0)],
        );
        let (vals, vecs) = eigh(&m);
        assert!((vals[0] - 1.0).abs() < 1e-12 && (vals[1] - 3.0).abs() < 1e-12);
        let d = CMatrix::from_diagonal(&DVector::from_iterator(2, vals.iter().map(|&v| C64::new(v, 0.0))));
        let back = &vecs * d * vecs.adjoint();
        assert!(max_abs_diff(&back, &m) < 1e-12);
    }

    #[test]
    fn psd_sqrt_squares_back() {
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(0.75, 0.0), C64::new(0.1, 0.2), C64::new(0.1, -0.2), C64::new(0.25, 0.0)],
        );
        let r = psd_sqrt(&m);
        assert!(max_abs_diff(&(&r * &r), &m) < 1e-12);
    }

    #[test]
    fn embed_local_matches_kron() {
        let one = C64::new(1.0, 0.0);
        let x = CMatrix::from_row_slice(2, 2, &[ZERO, one, one, ZERO]);
        let e = embed_local(&x, 1, &[3, 2, 2]);
        assert_eq!(e.nrows(), 12);
        let manual = kron(&kron(&CMatrix::identity(3, 3), &x), &CMatrix::identity(2, 2));
        assert!(max_abs_diff(&e, &manual) == 0.0);
    }
}
