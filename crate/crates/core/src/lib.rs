//! Entropic uncertainty relations with quantum memory.
//!
//! The crate is organized bottom-up: [`qstate`] (density matrices and
//! entropies), [`measurement`] (projective measurements, POVMs and their
//! post-measurement states), [`complementarity`] (incompatibility scalars),
//! [`bounds`] (the lower bounds themselves), [`applications`] (coherence and
//! key rates) and [`harness`] (examples, figures and file formats).

pub mod error;
pub mod harness;
pub mod linalg;
pub mod applications;
pub mod bounds;
pub mod complementarity;
pub mod measurement;
pub mod qstate;

pub use error::{Error, Result};
pub use qstate::{DensityMatrix, ProbabilityVector, RandomStateRecipe, SystemDims};
