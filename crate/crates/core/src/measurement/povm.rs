use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{eigvalsh, hermiticity_defect, psd_inv_sqrt, psd_sqrt, CMatrix};
use crate::qstate::random_hermitian;

use super::{ProjectiveMeasurement, MEASUREMENT_TOL};

/// Positive operators `X_j` summing to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Povm {
    effects: Vec<CMatrix>,
}

impl Povm {
    pub fn new(effects: Vec<CMatrix>) -> Result<Self> {
        let Some(first) = effects.first() else {
            return Err(Error::InvalidParameter("POVM without effects".into()));
        };
        let d = first.nrows();
        let mut sum = CMatrix::zeros(d, d);
        for (j, e) in effects.iter().enumerate() {
            if e.nrows() != d || e.ncols() != d {
                return Err(Error::DimensionMismatch { expected: d, found: e.nrows() });
            }
            let herm = hermiticity_defect(e);
            if herm > MEASUREMENT_TOL {
                return Err(Error::invariant("hermitian", format!("effect {j}: max |X - X^dagger| = {herm:e}")));
            }
            let min = eigvalsh(e)[0];
            if min < -MEASUREMENT_TOL {
                return Err(Error::invariant("positivity", format!("effect {j}: smallest eigenvalue {min:e}")));
            }
            sum += e;
        }
        let defect = (sum - CMatrix::identity(d, d)).iter().map(|x| x.norm()).fold(0.0, f64::max);
        if defect > MEASUREMENT_TOL {
            return Err(Error::invariant("completeness", format!("max |Σ X_j - I| = {defect:e}")));
        }
        Ok(Self { effects })
    }

    pub fn dim(&self) -> usize {
        self.effects[0].nrows()
    }

    pub fn len(&self) -> usize {
        self.effects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.effects.is_empty()
    }

    pub fn effects(&self) -> &[CMatrix] {
        &self.effects
    }

    /// Square-root Kraus operators `√X_j`.
    pub fn kraus(&self) -> Vec<CMatrix> {
        self.effects.iter().map(psd_sqrt).collect()
    }
}

impl From<&ProjectiveMeasurement> for Povm {
    fn from(m: &ProjectiveMeasurement) -> Self {
        Povm { effects: m.projectors() }
    }
}

/// `X_j = S^{-1/2} G_j S^{-1/2}` with `G_j = H_j H_j†` for random Hermitian
/// `H_j` and `S = Σ G_j`.
pub fn random_povm<R: Rng + ?Sized>(rng: &mut R, dim: usize, outcomes: usize) -> Povm {
    let g: Vec<CMatrix> = (0..outcomes)
        .map(|_| {
            let h = random_hermitian(rng, dim);
            &h * h.adjoint()
        })
        .collect();
    let s = g.iter().fold(CMatrix::zeros(dim, dim), |acc, x| acc + x);
    let w = psd_inv_sqrt(&s);
    let effects = g.iter().map(|x| crate::linalg::hermitize(&(&w * x * &w))).collect();
    Povm::new(effects).expect("normalized random POVM")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn rejects_incomplete_effects() {
        let half = CMatrix::identity(2, 2).scale(0.5);
        assert!(Povm::new(vec![half.clone(), half.clone()]).is_ok());
        let err = Povm::new(vec![half]).unwrap_err();
        assert!(matches!(err, Error::Invariant { invariant: "completeness", .. }));
    }

    #[test]
    fn random_povms_are_valid() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for k in 2..5 {
            let p = random_povm(&mut rng, 2, k);
            assert_eq!(p.len(), k);
            Povm::new(p.effects().to_vec()).unwrap();
        }
    }

    #[test]
    fn kraus_squares_to_effects() {
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        let p = random_povm(&mut rng, 3, 4);
        for (k, e) in p.kraus().iter().zip(p.effects()) {
            assert!((k * k - e).iter().all(|x| x.norm() < 1e-10));
        }
    }
}
