use serde::Serialize;

use crate::complementarity::{q_variant, QVariant};
use crate::error::Result;
use crate::measurement::{holevo_quantity, measured_conditional_entropy, projective_cq_state, ProjectiveMeasurement};
use crate::qstate::DensityMatrix;

const ALICE: &str = "A";
const BOB: &str = "B";
const EVE: &str = "C";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KeyRateReport {
    /// `Q − S(M_1|M′_1) − S(M_2|M′_2)`
    pub k_base: f64,
    /// `k_base + max{0, Δ}`
    pub k_tilde: f64,
    /// `S(A) − I(M_1:B) − I(M_2:C)` with `C` the purifying system of `ρ_AB`.
    pub delta: f64,
    pub q_used: f64,
    pub s_m1_given_m1p: f64,
    pub s_m2_given_m2p: f64,
}

/// `S(M|M′)` on the state with `A` dephased in `alice` and `B` in `bob`.
pub fn classical_conditional_entropy(
    rho_ab: &DensityMatrix,
    alice: &ProjectiveMeasurement,
    bob: &ProjectiveMeasurement,
) -> Result<f64> {
    let cc = projective_cq_state(bob, &projective_cq_state(alice, rho_ab, ALICE)?, BOB)?;
    cc.conditional_entropy(&[ALICE], &[BOB])
}

/// Key-rate lower bounds for Alice measuring `(M_1, M_2)` and Bob `(M′_1, M′_2)`.
pub fn key_rate_bounds(
    rho_ab: &DensityMatrix,
    alice: (&ProjectiveMeasurement, &ProjectiveMeasurement),
    bob: (&ProjectiveMeasurement, &ProjectiveMeasurement),
    variant: QVariant,
) -> Result<KeyRateReport> {
    let rho_a = rho_ab.partial_trace(&[ALICE])?;
    let q = q_variant(alice.0, alice.1, Some(&rho_a), variant)?;
    let s1 = classical_conditional_entropy(rho_ab, alice.0, bob.0)?;
    let s2 = classical_conditional_entropy(rho_ab, alice.1, bob.1)?;
    let k_base = q - s1 - s2;
    let pure = rho_ab.partial_trace(&[ALICE, BOB])?.purify_as(EVE)?;
    let delta = rho_a.von_neumann_entropy()?
        - holevo_quantity(alice.0, &pure, ALICE, &[BOB])?
        - holevo_quantity(alice.1, &pure, ALICE, &[EVE])?;
    Ok(KeyRateReport { k_base, k_tilde: k_base + delta.max(0.0), delta, q_used: q, s_m1_given_m1p: s1, s_m2_given_m2p: s2 })
}

/// `S(M_2|C) + S(M_2|B)` on an explicit tripartite state.
pub fn devetak_winter_rhs(rho_abc: &DensityMatrix, m2: &ProjectiveMeasurement, bob: &str, charlie: &str) -> Result<f64> {
    Ok(measured_conditional_entropy(m2, rho_abc, ALICE, &[charlie])?
        + measured_conditional_entropy(m2, rho_abc, ALICE, &[bob])?)
}
