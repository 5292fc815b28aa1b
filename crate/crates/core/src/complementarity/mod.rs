//! Incompatibility scalars for pairs and families of measurements.

mod admixture;
mod chain;
mod povm_q;
mod q;

pub use admixture::{majorization_data, xiao_admixture_term, AdmixtureMode, AdmixtureTerm, MajorizationData};
pub use chain::chain_b;
pub use povm_q::{povm_h, q_povm_state};
pub use q::{q_mu, q_optimized, q_state, q_tilde, q_variant, MixingFamily, QVariant, Q_OPT_MAX_ITER, Q_OPT_TOL};
