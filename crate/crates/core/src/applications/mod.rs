//! Coherence trade-offs and key-rate bounds derived from the uncertainty bounds.

mod coherence;
mod qkd;

pub use coherence::{
    coherence_sum_bound, unilateral_coherence, unilateral_coherence_relative, CoherenceReport, COHERENCE_TOL,
};
pub use qkd::{classical_conditional_entropy, devetak_winter_rhs, key_rate_bounds, KeyRateReport};
