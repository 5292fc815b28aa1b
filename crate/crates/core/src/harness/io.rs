//! JSON file formats for states and measurement families.
//!
//! A state file is `{"labels": [...], "dims": [...], "matrix": [[[re, im], ...], ...]}`.
//! A measurement file is an array of entries, each either
//! `{"kind": "projective", "dim": d, "vectors": [[[re, im], ...], ...]}` with
//! one basis vector per row, or `{"kind": "povm", "dim": d, "effects": [matrix, ...]}`.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector, C64};
use crate::measurement::{Povm, ProjectiveMeasurement};
use crate::qstate::{DensityMatrix, SystemDims};

type Complex = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    pub matrix: Vec<Vec<Complex>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MeasurementFile {
    Projective { dim: usize, vectors: Vec<Vec<Complex>> },
    Povm { dim: usize, effects: Vec<Vec<Vec<Complex>>> },
}

/// A measurement read from file, before it is known which kind the caller needs.
#[derive(Debug, Clone, PartialEq)]
pub enum LoadedMeasurement {
    Projective(ProjectiveMeasurement),
    Povm(Povm),
}

impl LoadedMeasurement {
    pub fn to_povm(&self) -> Povm {
        match self {
            LoadedMeasurement::Projective(m) => Povm::from(m),
            LoadedMeasurement::Povm(p) => p.clone(),
        }
    }

    pub fn as_projective(&self) -> Option<&ProjectiveMeasurement> {
        match self {
            LoadedMeasurement::Projective(m) => Some(m),
            LoadedMeasurement::Povm(_) => None,
        }
    }
}

fn parse_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { path: path.into(), message: message.into() }
}

fn to_matrix(rows: &[Vec<Complex>], n: usize, path: &str) -> Result<CMatrix> {
    if rows.len() != n {
        return Err(parse_error(path, format!("expected {n} rows, found {}", rows.len())));
    }
    let mut m = CMatrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(parse_error(format!("{path}[{i}]"), format!("expected {n} entries, found {}", row.len())));
        }
        for (j, z) in row.iter().enumerate() {
            m[(i, j)] = C64::new(z[0], z[1]);
        }
    }
    Ok(m)
}

fn from_matrix(m: &CMatrix) -> Vec<Vec<Complex>> {
    m.row_iter().map(|r| r.iter().map(|z| [z.re, z.im]).collect()).collect()
}

impl StateFile {
    pub fn from_state(rho: &DensityMatrix) -> Self {
        Self {
            labels: rho.dims().labels().to_vec(),
            dims: rho.dims().dims().to_vec(),
            matrix: from_matrix(rho.matrix()),
        }
    }

    /// Validates dimensions and every state invariant.
    pub fn to_state(&self) -> Result<DensityMatrix> {
        let dims = SystemDims::new(self.labels.clone(), self.dims.clone())?;
        let m = to_matrix(&self.matrix, dims.total(), "matrix")?;
        DensityMatrix::new(dims, m)
    }
}

impl MeasurementFile {
    pub fn from_projective(m: &ProjectiveMeasurement) -> Self {
        MeasurementFile::Projective {
            dim: m.dim(),
            vectors: m.vectors().iter().map(|v| v.iter().map(|z| [z.re, z.im]).collect()).collect(),
        }
    }

    pub fn from_povm(p: &Povm) -> Self {
        MeasurementFile::Povm { dim: p.dim(), effects: p.effects().iter().map(from_matrix).collect() }
    }

    fn load(&self, path: &str) -> Result<LoadedMeasurement> {
        match self {
            MeasurementFile::Projective { dim, vectors } => {
                if vectors.len() != *dim {
                    return Err(parse_error(
                        format!("{path}.vectors"),
                        format!("expected {dim} vectors, found {}", vectors.len()),
                    ));
                }
                let mut vs = Vec::with_capacity(*dim);
                for (k, v) in vectors.iter().enumerate() {
                    if v.len() != *dim {
                        return Err(parse_error(
                            format!("{path}.vectors[{k}]"),
                            format!("expected {dim} entries, found {}", v.len()),
                        ));
                    }
                    vs.push(CVector::from_iterator(*dim, v.iter().map(|z| C64::new(z[0], z[1]))));
                }
                Ok(LoadedMeasurement::Projective(ProjectiveMeasurement::new(vs)?))
            }
            MeasurementFile::Povm { dim, effects } => {
                let ms = effects
                    .iter()
                    .enumerate()
                    .map(|(k, e)| to_matrix(e, *dim, &format!("{path}.effects[{k}]")))
                    .collect::<Result<Vec<_>>>()?;
                Ok(LoadedMeasurement::Povm(Povm::new(ms)?))
            }
        }
    }
}

/// Deserializes `text`, reporting the failing field path on schema errors.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        parse_error(path, e.into_inner().to_string())
    })
}

pub fn parse_state(text: &str) -> Result<DensityMatrix> {
    parse_json::<StateFile>(text)?.to_state()
}

pub fn parse_measurements(text: &str) -> Result<Vec<LoadedMeasurement>> {
    let files: Vec<MeasurementFile> = parse_json(text)?;
    files.iter().enumerate().map(|(k, f)| f.load(&format!("[{k}]"))).collect()
}

/// Like [`parse_measurements`], rejecting POVM entries.
pub fn parse_projective_measurements(text: &str) -> Result<Vec<ProjectiveMeasurement>> {
    parse_measurements(text)?
        .into_iter()
        .enumerate()
        .map(|(k, m)| match m {
            LoadedMeasurement::Projective(p) => Ok(p),
            LoadedMeasurement::Povm(_) => Err(parse_error(format!("[{k}].kind"), "a projective measurement is required")),
        })
        .collect()
}

pub fn read_state(path: &Path) -> Result<DensityMatrix> {
    parse_state(&fs::read_to_string(path)?)
}

pub fn read_measurements(path: &Path) -> Result<Vec<LoadedMeasurement>> {
    parse_measurements(&fs::read_to_string(path)?)
}

pub fn read_projective_measurements(path: &Path) -> Result<Vec<ProjectiveMeasurement>> {
    parse_projective_measurements(&fs::read_to_string(path)?)
}

pub fn write_state(path: &Path, rho: &DensityMatrix) -> Result<()> {
    fs::write(path, to_json(&StateFile::from_state(rho)))?;
    Ok(())
}

pub fn write_projective_measurements(path: &Path, ms: &[ProjectiveMeasurement]) -> Result<()> {
    let files: Vec<_> = ms.iter().map(MeasurementFile::from_projective).collect();
    fs::write(path, to_json(&files))?;
    Ok(())
}

pub fn write_povms(path: &Path, ps: &[Povm]) -> Result<()> {
    let files: Vec<_> = ps.iter().map(MeasurementFile::from_povm).collect();
    fs::write(path, to_json(&files))?;
    Ok(())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}
