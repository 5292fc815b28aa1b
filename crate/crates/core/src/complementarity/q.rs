use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{eigvalsh, CMatrix};
use crate::measurement::{overlap_matrix, Measurement, ProjectiveMeasurement};
use crate::qstate::DensityMatrix;

/// Default bracket width for [`q_optimized`].
pub const Q_OPT_TOL: f64 = 1e-10;
/// Golden-section iteration cap for [`q_optimized`].
pub const Q_OPT_MAX_ITER: usize = 200;

/// Which complementarity scalar stands in for `Q` in the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QVariant {
    /// `−log2 c_max`
    Mu,
    /// `q_MU` plus the second-largest-overlap correction.
    #[default]
    Tilde,
    /// State-dependent form using the outcome distribution on `rho_A`.
    State,
    /// `max_p λ_min[p Δ12 + (1 − p) Δ21]`
    Opt,
}

impl fmt::Display for QVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QVariant::Mu => "mu",
            QVariant::Tilde => "tilde",
            QVariant::State => "state",
            QVariant::Opt => "opt",
        })
    }
}

impl FromStr for QVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mu" => Ok(QVariant::Mu),
            "tilde" => Ok(QVariant::Tilde),
            "state" => Ok(QVariant::State),
            "opt" => Ok(QVariant::Opt),
            other => Err(Error::InvalidParameter(format!("unknown q-variant `{other}` (mu|tilde|state|opt)"))),
        }
    }
}

pub fn q_mu(mi: &ProjectiveMeasurement, mj: &ProjectiveMeasurement) -> Result<f64> {
    Ok(-overlap_matrix(mi, mj)?.c_max.log2())
}

pub fn q_tilde(mi: &ProjectiveMeasurement, mj: &ProjectiveMeasurement) -> Result<f64> {
    let o = overlap_matrix(mi, mj)?;
    let mu = -o.c_max.log2();
    if o.c_max >= 1.0 {
        return Ok(mu);
    }
    Ok(mu + 0.5 * (1.0 - o.c_max.sqrt()) * (o.c_max / o.c_second).log2())
}

/// `max{q(ρ_A, M_i, M_j), q(ρ_A, M_j, M_i)}` with
/// `q(ρ_A, M_1, M_2) = Σ_j p_j log2(1 / max_k c_jk)`.
pub fn q_state(rho_a: &DensityMatrix, mi: &ProjectiveMeasurement, mj: &ProjectiveMeasurement) -> Result<f64> {
    let o = overlap_matrix(mi, mj)?;
    let pi = mi.probabilities(rho_a)?;
    let pj = mj.probabilities(rho_a)?;
    let d = mi.dim();
    let forward: f64 = (0..d).map(|r| -pi.entries()[r] * o.c.row(r).max().log2()).sum();
    let backward: f64 = (0..d).map(|c| -pj.entries()[c] * o.c.column(c).max().log2()).sum();
    Ok(forward.max(backward))
}

/// The two diagonal operators whose convex mixtures define the optimized `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingFamily {
    /// `Σ_j log2(1 / max_k c_jk) |φ^1_j><φ^1_j|`
    pub delta_12: CMatrix,
    /// `Σ_k log2(1 / max_j c_jk) |φ^2_k><φ^2_k|`
    pub delta_21: CMatrix,
}

impl MixingFamily {
    pub fn new(mi: &ProjectiveMeasurement, mj: &ProjectiveMeasurement) -> Result<Self> {
        let o = overlap_matrix(mi, mj)?;
        let d = mi.dim();
        let mut delta_12 = CMatrix::zeros(d, d);
        let mut delta_21 = CMatrix::zeros(d, d);
        for k in 0..d {
            delta_12 += mi.projector(k).scale(-o.c.row(k).max().log2());
            delta_21 += mj.projector(k).scale(-o.c.column(k).max().log2());
        }
        Ok(Self { delta_12, delta_21 })
    }

    /// `λ_min[p Δ12 + (1 − p) Δ21]`
    pub fn objective(&self, p: f64) -> f64 {
        let m = self.delta_12.scale(p) + self.delta_21.scale(1.0 - p);
        eigvalsh(&m)[0]
    }
}

/// Golden-section maximization of the concave [`MixingFamily::objective`] on
/// `[0, 1]`; both endpoints are always evaluated.
pub fn q_optimized(mi: &ProjectiveMeasurement, mj: &ProjectiveMeasurement, tol: f64) -> Result<f64> {
    let family = MixingFamily::new(mi, mj)?;
    let f = |p: f64| family.objective(p);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (0.0f64, 1.0f64);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    let mut iter = 0;
    while b - a >= tol {
        if iter == Q_OPT_MAX_ITER {
            return Err(Error::NoConvergence(Q_OPT_MAX_ITER));
        }
        iter += 1;
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    let interior = f(0.5 * (a + b)).max(f1).max(f2);
    Ok(interior.max(f(0.0)).max(f(1.0)))
}

/// Dispatch on `variant`; `rho_a` is required only for [`QVariant::State`].
pub fn q_variant(
    mi: &ProjectiveMeasurement,
    mj: &ProjectiveMeasurement,
    rho_a: Option<&DensityMatrix>,
    variant: QVariant,
) -> Result<f64> {
    match variant {
        QVariant::Mu => q_mu(mi, mj),
        QVariant::Tilde => q_tilde(mi, mj),
        QVariant::State => q_state(rho_a.ok_or(Error::MissingState)?, mi, mj),
        QVariant::Opt => q_optimized(mi, mj, Q_OPT_TOL),
    }
}
