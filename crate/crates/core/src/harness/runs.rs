//! Entry points for user-supplied states and measurements.

use crate::applications::{coherence_sum_bound, key_rate_bounds, CoherenceReport, KeyRateReport};
use crate::bounds::{optimal_bound, BoundOptions, BoundReport, MemoryPartition, MEASURED};
use crate::complementarity::QVariant;
use crate::error::{Error, Result};
use crate::measurement::ProjectiveMeasurement;
use crate::qstate::DensityMatrix;

/// Every subsystem except the measured one, in declared order.
pub fn memory_labels(rho: &DensityMatrix) -> Vec<String> {
    rho.dims().labels().iter().filter(|l| l.as_str() != MEASURED).cloned().collect()
}

fn partition_for(rho: &DensityMatrix, m: usize, spec: Option<&str>) -> Result<MemoryPartition> {
    let labels = memory_labels(rho);
    match spec {
        Some(s) => MemoryPartition::parse(s, m, &labels),
        None if labels.len() == 1 => MemoryPartition::single(m, &labels[0]),
        None => Err(Error::InvalidPartition(format!(
            "state has {} memory subsystems; a partition is required",
            labels.len()
        ))),
    }
}

/// Full bound report; group `t` of `partition` is guessed by the `t`-th
/// memory subsystem of `rho`.
pub fn run_bound(
    rho: &DensityMatrix,
    ms: &[ProjectiveMeasurement],
    partition: &str,
    options: BoundOptions,
) -> Result<BoundReport> {
    let p = partition_for(rho, ms.len(), Some(partition))?;
    optimal_bound(rho, &p, ms, options)
}

/// Coherence sum and bound. Without a partition the state must have exactly
/// one memory subsystem, which then guesses every measurement.
pub fn run_coherence(
    rho: &DensityMatrix,
    ms: &[ProjectiveMeasurement],
    partition: Option<&str>,
    options: BoundOptions,
) -> Result<CoherenceReport> {
    let p = partition_for(rho, ms.len(), partition)?;
    coherence_sum_bound(rho, &p, ms, options)
}

/// Key-rate bounds for a state on `A, B` with two measurements on each side.
pub fn run_qkd(
    rho: &DensityMatrix,
    alice: &[ProjectiveMeasurement],
    bob: &[ProjectiveMeasurement],
    variant: QVariant,
) -> Result<KeyRateReport> {
    if rho.dims().labels() != ["A", "B"] {
        return Err(Error::InvalidDims(format!(
            "key-rate state must have subsystems [A, B], found {:?}",
            rho.dims().labels()
        )));
    }
    for side in [alice, bob] {
        if side.len() != 2 {
            return Err(Error::InvalidParameter(format!("expected 2 measurements per party, found {}", side.len())));
        }
    }
    key_rate_bounds(rho, (&alice[0], &alice[1]), (&bob[0], &bob[1]), variant)
}
