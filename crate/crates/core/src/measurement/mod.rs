//! Projective measurements, POVMs and their classical-quantum output states.

mod cq;
mod povm;
mod projective;

pub use cq::{
    holevo_quantity, measured_conditional_entropy, outcome_entropy, outcome_probabilities, povm_cq_state,
    projective_cq_state, register_label, Measurement,
};
pub use povm::{random_povm, Povm};
pub use projective::{
    is_mub_family, overlap_matrix, random_projective_measurement, random_projective_measurement_from,
    OverlapData, ProjectiveMeasurement, MEASUREMENT_TOL,
};
