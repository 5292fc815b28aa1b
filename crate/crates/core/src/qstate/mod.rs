//! Composite-system density matrices and the entropic quantities built on them.

mod density;
mod dims;
mod prob;
mod random;
pub mod states;

pub use density::{DensityMatrix, STATE_TOL};
pub use dims::SystemDims;
pub use prob::{shannon_entropy, ProbabilityVector};
pub use random::{
    cascade_spectrum, random_density_state, random_hermitian, random_pure_state, random_unitary, substream, xi,
    RandomStateRecipe,
};
