use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered, labeled subsystem dimensions of a composite Hilbert space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDims {
    labels: Vec<String>,
    dims: Vec<usize>,
}

impl SystemDims {
    /// Every subsystem must have dimension at least 2 and a unique label.
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        dims: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let out = Self::build(labels, dims)?;
        if let Some(pos) = out.dims.iter().position(|&d| d < 2) {
            return Err(Error::InvalidDims(format!(
                "subsystem `{}` has dimension {} (< 2)",
                out.labels[pos], out.dims[pos]
            )));
        }
        Ok(out)
    }

    /// Like [`SystemDims::new`] but admits one-dimensional factors, which only
    /// arise as the purifying register of an already pure state.
    pub(crate) fn allowing_trivial<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        dims: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let out = Self::build(labels, dims)?;
        if out.dims.contains(&0) {
            return Err(Error::InvalidDims("zero-dimensional subsystem".into()));
        }
        Ok(out)
    }

    fn build<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        dims: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let dims: Vec<usize> = dims.into_iter().collect();
        if labels.len() != dims.len() {
            return Err(Error::InvalidDims(format!(
                "{} labels for {} dimensions",
                labels.len(),
                dims.len()
            )));
        }
        if labels.is_empty() {
            return Err(Error::InvalidDims("no subsystems".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidDims(format!("duplicate label `{l}`")));
            }
        }
        Ok(Self { labels, dims })
    }

    /// Same dimension `d` for every label.
    pub fn uniform(labels: &[&str], d: usize) -> Result<Self> {
        Self::new(labels.iter().copied(), std::iter::repeat(d).take(labels.len()))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.labels.iter().any(|l| l == label)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn dim_of(&self, label: &str) -> Result<usize> {
        Ok(self.dims[self.index_of(label)?])
    }

    /// Positions of `labels`, sorted and de-duplicated.
    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut idx = labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        Ok(idx)
    }

    /// The subsystems at `indices` (assumed sorted), in their original order.
    pub(crate) fn select(&self, indices: &[usize]) -> Self {
        Self {
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
            dims: indices.iter().map(|&i| self.dims[i]).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if let Some(l) = other.labels.iter().find(|l| self.contains(l)) {
            return Err(Error::LabelCollision(l.clone()));
        }
        let mut out = self.clone();
        out.labels.extend(other.labels.iter().cloned());
        out.dims.extend(other.dims.iter().copied());
        Ok(out)
    }

    /// Row-major strides of each subsystem within the composite index.
    pub(crate) fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for k in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.dims[k + 1];
        }
        strides
    }
}
