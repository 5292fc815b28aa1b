use serde::Serialize;

use crate::error::{Error, Result};

/// A classical outcome distribution.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if let Some(p) = entries.iter().find(|&&p| !(-1e-12..=1.0 + 1e-12).contains(&p)) {
            return Err(Error::invariant("probability range", format!("entry {p} outside [0, 1]")));
        }
        let sum: f64 = entries.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::invariant("normalization", format!("entries sum to {sum}")));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Shannon entropy in bits.
pub fn shannon_entropy(p: &ProbabilityVector) -> f64 {
    p.0.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shannon_examples() {
        let h = |v: Vec<f64>| shannon_entropy(&ProbabilityVector::new(v).unwrap());
        assert_eq!(h(vec![1.0, 0.0, 0.0]), 0.0);
        assert!((h(vec![0.5, 0.5]) - 1.0).abs() < 1e-15);
        assert!((h(vec![1.0 / 3.0; 3]) - 3f64.log2()).abs() < 1e-15);
    }

    #[test]
    fn rejects_unnormalized() {
        assert!(ProbabilityVector::new(vec![0.5, 0.6]).is_err());
        assert!(ProbabilityVector::new(vec![1.5, -0.5]).is_err());
    }
}
