//! Lower bounds on summed conditional entropies of measurement outcomes.
//!
//! The measured system is always the subsystem labeled [`MEASURED`]; the
//! memories are named by a [`MemoryPartition`].

mod differences;
mod multi;
mod partition;
mod povm;
mod special;
mod tripartite;

pub use differences::{difference_report, DifferenceEntry, DifferenceReport, IDENTITY_TOL};
pub use multi::{
    admixture_bound, optimal_bound, pairwise_bound, prior_lb1, prior_lb2, uncertainty_lhs, BoundOptions,
    BoundReport, QPair,
};
pub use partition::{MemoryPartition, MEASURED};
pub use povm::{
    povm_bipartite_bounds, povm_f, povm_residual_entropy, theorem4_bound, BoundPair, PovmBoundReport,
    PovmPairBounds,
};
pub use special::{
    optimal_bound_separate_memories, optimal_bound_single_memory, theorem4_separate_memories,
    theorem4_single_memory,
};
pub use tripartite::{theorem1_bound, tripartite_bound, TripartiteBound};

pub(crate) mod internal {
    pub(crate) use super::multi::{admixture_or_none, Ingredients};
}
