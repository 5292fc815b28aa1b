//! The majorization admixture term `ω·β` of the multi-measurement bound.
//!
//! `β` is the descending sort of `log2 𝔘_{i_1…i_m}` where `𝔘 = ∏_k g_k(i_k)` and
//! `g_k` is the overlap chain that ends at measurement `k` and starts at the
//! one following it cyclically. `ω` holds the consecutive differences of the
//! caps `Ω_k = min{1, (s_k / m)^m}`, where `s_k` is the largest
//! `λ_max(Σ_j Π_{S_j})` over non-empty outcome subsets `S_j` of total size
//! `k + m − 1` (made non-decreasing in `k`).

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{eigvalsh, CMatrix};
use crate::measurement::{is_mub_family, ProjectiveMeasurement};

use super::chain::chain_vector;

const MUB_TOL: f64 = 1e-9;

/// How the admixture term is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdmixtureMode {
    /// Closed form `ω·β = −m log2 d` for mutually unbiased families; any
    /// other family is rejected with [`Error::AdmixtureUnresolved`].
    #[default]
    MubOnly,
    /// The cyclic-chain majorization construction described in the module docs.
    Reconstructed,
}

impl fmt::Display for AdmixtureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdmixtureMode::MubOnly => "mub-only",
            AdmixtureMode::Reconstructed => "reconstructed",
        })
    }
}

impl FromStr for AdmixtureMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mub-only" => Ok(AdmixtureMode::MubOnly),
            "reconstructed" => Ok(AdmixtureMode::Reconstructed),
            other => Err(Error::InvalidParameter(format!(
                "unknown admixture mode `{other}` (mub-only|reconstructed)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MajorizationData {
    pub omega: Vec<f64>,
    pub beta: Vec<f64>,
    pub omega_caps: Vec<f64>,
    /// First index `k` (1-based) with `Ω_k = 1`.
    pub cutoff: usize,
}

impl MajorizationData {
    /// `Σ_k ω_k β_k`; entries with `ω_k = 0` are skipped so that vanishing
    /// overlaps (`β_k = −∞`) past the cutoff do not poison the sum.
    pub fn omega_beta(&self) -> f64 {
        self.omega.iter().zip(&self.beta).filter(|(&w, _)| w != 0.0).map(|(w, b)| w * b).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdmixtureTerm {
    pub omega_beta: f64,
    pub mode: AdmixtureMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<MajorizationData>,
}

/// `ω·β` for the family `ms`. The term does not depend on the state.
pub fn xiao_admixture_term(ms: &[ProjectiveMeasurement], mode: AdmixtureMode) -> Result<AdmixtureTerm> {
    let m = ms.len();
    if m < 2 {
        return Err(Error::TooFewMeasurements { required: 2, found: m });
    }
    let d = ms[0].dim();
    if let Some(bad) = ms.iter().find(|x| x.dim() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: bad.dim() });
    }
    match mode {
        AdmixtureMode::MubOnly => {
            if !is_mub_family(ms, MUB_TOL) {
                return Err(Error::AdmixtureUnresolved);
            }
            Ok(AdmixtureTerm { omega_beta: -(m as f64) * (d as f64).log2(), mode, data: None })
        }
        AdmixtureMode::Reconstructed => {
            let data = majorization_data(ms)?;
            Ok(AdmixtureTerm { omega_beta: data.omega_beta(), mode, data: Some(data) })
        }
    }
}

pub fn majorization_data(ms: &[ProjectiveMeasurement]) -> Result<MajorizationData> {
    let m = ms.len();
    let d = ms[0].dim();
    let beta = beta_vector(ms)?;
    let caps = omega_caps(ms, d.pow(m as u32));
    let mut omega = Vec::with_capacity(caps.len());
    let mut prev = 0.0;
    for &c in &caps {
        omega.push(c - prev);
        prev = c;
    }
    let cutoff = caps.iter().position(|&c| c >= 1.0).map_or(caps.len(), |i| i + 1);
    Ok(MajorizationData { omega, beta, omega_caps: caps, cutoff })
}

fn beta_vector(ms: &[ProjectiveMeasurement]) -> Result<Vec<f64>> {
    let m = ms.len();
    let d = ms[0].dim();
    let mut g = Vec::with_capacity(m);
    for k in 0..m {
        let order: Vec<ProjectiveMeasurement> = (0..m).map(|t| ms[(k + 1 + t) % m].clone()).collect();
        g.push(chain_vector(&order)?);
    }
    let mut beta: Vec<f64> = (0..m)
        .map(|_| 0..d)
        .multi_cartesian_product()
        .map(|idx| idx.iter().enumerate().map(|(k, &i)| g[k][i].log2()).sum())
        .collect();
    beta.sort_by(|a, b| b.total_cmp(a));
    Ok(beta)
}

fn omega_caps(ms: &[ProjectiveMeasurement], len: usize) -> Vec<f64> {
    let m = ms.len();
    let d = ms[0].dim();
    let subsets: Vec<Vec<usize>> = (1..=d).flat_map(|r| (0..d).combinations(r)).collect();
    let projectors: Vec<Vec<CMatrix>> = ms.iter().map(|x| x.projectors()).collect();
    let mut s = vec![0.0f64; m * (d - 1) + 2];
    for choice in (0..m).map(|_| 0..subsets.len()).multi_cartesian_product() {
        let mut sum = CMatrix::zeros(d, d);
        let mut size = 0;
        for (j, &c) in choice.iter().enumerate() {
            for &k in &subsets[c] {
                sum += &projectors[j][k];
            }
            size += subsets[c].len();
        }
        let k = size + 1 - m;
        let top = *eigvalsh(&sum).last().expect("non-empty spectrum");
        s[k] = s[k].max(top);
    }
    let mut caps = Vec::with_capacity(len);
    let mut best = 0.0f64;
    for k in 1..=len {
        if k < s.len() {
            best = best.max(s[k]);
        }
        caps.push((best / m as f64).powi(m as i32).min(1.0));
    }
    caps
}
