//! Frequently used named states.

use crate::linalg::{CVector, C64};

use super::{DensityMatrix, SystemDims};

const LABELS: [&str; 6] = ["A", "B", "C", "D", "E", "F"];

/// Computational basis state `|index>` on `labels`, each of dimension `d`.
pub fn basis_state(labels: &[&str], d: usize, index: usize) -> DensityMatrix {
    let dims = SystemDims::uniform(labels, d).expect("valid labels");
    let mut psi = CVector::zeros(dims.total());
    psi[index] = C64::new(1.0, 0.0);
    DensityMatrix::pure(dims, &psi).expect("normalized")
}

/// `(|00> + |11>)/sqrt 2` on `A, B`.
pub fn bell() -> DensityMatrix {
    ghz(2, 2)
}

/// `Σ_i |i…i> / sqrt d` on `parties` subsystems labeled `A, B, C, …`.
pub fn ghz(d: usize, parties: usize) -> DensityMatrix {
    let dims = SystemDims::uniform(&LABELS[..parties], d).expect("valid labels");
    let stride: usize = (0..parties).map(|k| d.pow(k as u32)).sum();
    let mut psi = CVector::zeros(dims.total());
    for i in 0..d {
        psi[i * stride] = C64::new(1.0, 0.0);
    }
    DensityMatrix::pure(dims, &psi).expect("normalized")
}

/// Pure state with the given computational-basis amplitudes.
pub fn from_amplitudes(labels: &[&str], d: usize, amps: &[(usize, C64)]) -> DensityMatrix {
    let dims = SystemDims::uniform(labels, d).expect("valid labels");
    let mut psi = CVector::zeros(dims.total());
    for &(i, a) in amps {
        psi[i] += a;
    }
    DensityMatrix::pure(dims, &psi).expect("normalized")
}

/// Werner-type mixture `p |Φ+><Φ+| + (1 − p) I/4` on two qubits.
pub fn werner(p: f64) -> DensityMatrix {
    let bell = bell();
    let mixed = DensityMatrix::maximally_mixed(bell.dims().clone());
    let m = bell.matrix().scale(p) + mixed.matrix().scale(1.0 - p);
    DensityMatrix::new(bell.dims().clone(), m).expect("convex mixture")
}
