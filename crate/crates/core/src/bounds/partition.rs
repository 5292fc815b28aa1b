use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qstate::SystemDims;

/// Label of the measured subsystem in every bound.
pub const MEASURED: &str = "A";

/// Assignment of measurements `0..m` to memories: group `t` holds the
/// measurements whose outcomes are guessed by `memory_labels[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemoryPartition {
    m: usize,
    groups: Vec<Vec<usize>>,
    memory_labels: Vec<String>,
}

impl MemoryPartition {
    pub fn new<S: Into<String>>(m: usize, groups: Vec<Vec<usize>>, memory_labels: Vec<S>) -> Result<Self> {
        let memory_labels: Vec<String> = memory_labels.into_iter().map(Into::into).collect();
        if groups.len() != memory_labels.len() {
            return Err(Error::InvalidPartition(format!(
                "{} groups but {} memory labels",
                groups.len(),
                memory_labels.len()
            )));
        }
        if groups.is_empty() {
            return Err(Error::InvalidPartition("no groups".into()));
        }
        if groups.len() > m {
            return Err(Error::InvalidPartition(format!("{} groups for {m} measurements", groups.len())));
        }
        let mut seen = HashSet::new();
        for (t, g) in groups.iter().enumerate() {
            if g.is_empty() {
                return Err(Error::InvalidPartition(format!("group {t} is empty")));
            }
            for &i in g {
                if i >= m {
                    return Err(Error::InvalidPartition(format!("measurement index {i} out of range 0..{m}")));
                }
                if !seen.insert(i) {
                    return Err(Error::InvalidPartition(format!("groups are not disjoint: index {i} repeated")));
                }
            }
        }
        if seen.len() != m {
            let missing: Vec<usize> = (0..m).filter(|i| !seen.contains(i)).collect();
            return Err(Error::InvalidPartition(format!("measurements {missing:?} are not assigned")));
        }
        let mut labels = HashSet::new();
        for l in &memory_labels {
            if l == MEASURED {
                return Err(Error::InvalidPartition(format!("memory label `{MEASURED}` is the measured system")));
            }
            if !labels.insert(l.as_str()) {
                return Err(Error::InvalidPartition(format!("memory label `{l}` used twice")));
            }
        }
        Ok(Self { m, groups, memory_labels })
    }

    /// Parses `"0,1;2"`: groups separated by `;`, 0-based measurement indices
    /// by `,`. Group `t` is bound to `memory_labels[t]`.
    pub fn parse<S: AsRef<str>>(spec: &str, m: usize, memory_labels: &[S]) -> Result<Self> {
        let mut groups = Vec::new();
        for part in spec.split(';') {
            let mut g = Vec::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                let i = tok
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("`{tok}` is not a measurement index")))?;
                g.push(i);
            }
            groups.push(g);
        }
        if groups.len() > memory_labels.len() {
            return Err(Error::InvalidPartition(format!(
                "{} groups but only {} memory subsystems",
                groups.len(),
                memory_labels.len()
            )));
        }
        let labels: Vec<String> = memory_labels[..groups.len()].iter().map(|s| s.as_ref().to_string()).collect();
        Self::new(m, groups, labels)
    }

    /// All measurements guessed by one memory.
    pub fn single(m: usize, memory: &str) -> Result<Self> {
        Self::new(m, vec![(0..m).collect()], vec![memory])
    }

    /// Measurement `i` guessed by `memories[i]`.
    pub fn separate<S: AsRef<str>>(memories: &[S]) -> Result<Self> {
        let m = memories.len();
        Self::new(m, (0..m).map(|i| vec![i]).collect(), memories.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn memory_labels(&self) -> &[String] {
        &self.memory_labels
    }

    /// `m_t(m_t − 1)/2` per group.
    pub fn pair_weights(&self) -> Vec<f64> {
        self.groups.iter().map(|g| (g.len() * (g.len().saturating_sub(1))) as f64 / 2.0).collect()
    }

    /// `(measurement index, memory label)` for every measurement.
    pub fn assignments(&self) -> impl Iterator<Item = (usize, &str)> + '_ {
        self.groups
            .iter()
            .zip(&self.memory_labels)
            .flat_map(|(g, l)| g.iter().map(move |&i| (i, l.as_str())))
    }

    /// Checks that the measured system and every memory exist in `dims`.
    pub fn check_against(&self, dims: &SystemDims) -> Result<()> {
        dims.index_of(MEASURED)?;
        for l in &self.memory_labels {
            dims.index_of(l)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_groups_in_declared_order() {
        let p = MemoryPartition::parse("0,1;2", 3, &["B", "C"]).unwrap();
        assert_eq!(p.groups(), &[vec![0, 1], vec![2]]);
        assert_eq!(p.memory_labels(), &["B".to_string(), "C".to_string()]);
        assert_eq!(p.pair_weights(), vec![1.0, 0.0]);
    }

    #[test]
    fn rejects_overlap_and_gaps() {
        let err = MemoryPartition::parse("0,1;1", 3, &["B", "C"]).unwrap_err();
        assert!(err.to_string().contains("disjoint"));
        assert!(MemoryPartition::parse("0;2", 3, &["B", "C"]).is_err());
        assert!(MemoryPartition::parse("0,1,x", 3, &["B"]).is_err());
        assert!(MemoryPartition::parse("0;1;2", 3, &["B", "C"]).is_err());
    }

    #[test]
    fn rejects_measured_label_as_memory() {
        assert!(MemoryPartition::single(2, "A").is_err());
        assert!(MemoryPartition::separate(&["B", "B"]).is_err());
    }
}
