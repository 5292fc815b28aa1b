//! States and measurement families of the worked examples.

use std::f64::consts::PI;

use crate::linalg::C64;
use crate::measurement::ProjectiveMeasurement;
use crate::qstate::{states, DensityMatrix};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn r(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// `(√a, √(1−a), 0)`, `(e^{iφ}√(1−a), −e^{iφ}√a, 0)`, `(0, 0, 1)`.
pub fn tilted_basis(a: f64, phi: f64) -> ProjectiveMeasurement {
    let e = C64::from_polar(1.0, phi);
    ProjectiveMeasurement::from_rows(&[
        vec![r(a.sqrt()), r((1.0 - a).sqrt()), r(0.0)],
        vec![e * (1.0 - a).sqrt(), -e * a.sqrt(), r(0.0)],
        vec![r(0.0), r(0.0), r(1.0)],
    ])
    .expect("tilted basis is orthonormal")
}

fn omega() -> C64 {
    C64::from_polar(1.0, 2.0 * PI / 3.0)
}

/// `(1,1,1)`, `(1,ω*,ω)`, `(1,ω,ω*)`, each over `√3`.
pub fn fourier_qutrit() -> ProjectiveMeasurement {
    let (w, s) = (omega(), 3f64.sqrt());
    let one = r(1.0);
    ProjectiveMeasurement::from_rows(&[
        vec![one / s, one / s, one / s],
        vec![one / s, w.conj() / s, w / s],
        vec![one / s, w / s, w.conj() / s],
    ])
    .expect("Fourier basis is orthonormal")
}

/// `(1,1,ω*)`, `(1,ω,ω)`, `(1,ω*,1)`, each over `√3`.
pub fn shifted_fourier_qutrit() -> ProjectiveMeasurement {
    let (w, s) = (omega(), 3f64.sqrt());
    let one = r(1.0);
    ProjectiveMeasurement::from_rows(&[
        vec![one / s, one / s, w.conj() / s],
        vec![one / s, w / s, w / s],
        vec![one / s, w.conj() / s, one / s],
    ])
    .expect("shifted Fourier basis is orthonormal")
}

/// `(|000> + |111> + |222>)/√3` on `A, B, C`.
pub fn example1_state() -> DensityMatrix {
    states::ghz(3, 3)
}

pub fn example1_measurements(a: f64, phi: f64) -> Vec<ProjectiveMeasurement> {
    vec![tilted_basis(a, phi), fourier_qutrit(), shifted_fourier_qutrit()]
}

/// `(|012> + |120> + |201>)/√3` on `A, B, C`.
pub fn example2_state() -> DensityMatrix {
    let amp = r(1.0);
    states::from_amplitudes(&["A", "B", "C"], 3, &[(5, amp), (15, amp), (19, amp)])
}

pub fn example2_measurements(a: f64, phi: f64) -> Vec<ProjectiveMeasurement> {
    let s5 = 5f64.sqrt();
    let n1 = ProjectiveMeasurement::from_real_rows(&[vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0], vec![0.0, -1.0, 0.0]])
        .expect("orthonormal");
    let n2 = ProjectiveMeasurement::from_real_rows(&[
        vec![-1.0 / 3.0, -2.0 / 3.0, 2.0 / 3.0],
        vec![-2.0 / s5, 1.0 / s5, 0.0],
        vec![2.0 / (3.0 * s5), 4.0 / (3.0 * s5), 5.0 / (3.0 * s5)],
    ])
    .expect("orthonormal");
    vec![n1, n2, tilted_basis(a, phi)]
}

/// The three real qutrit bases of the coherence example.
pub fn example3_measurements() -> Vec<ProjectiveMeasurement> {
    let (h2, h3, h6) = (2f64.sqrt() / 2.0, 3f64.sqrt() / 3.0, 6f64.sqrt() / 6.0);
    let rows = |v: [[f64; 3]; 3]| {
        ProjectiveMeasurement::from_real_rows(&v.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).expect("orthonormal")
    };
    vec![
        rows([[h2, h2, 0.0], [-h2, h2, 0.0], [0.0, 0.0, 1.0]]),
        rows([[h6, -h6, 2.0 * h6], [-h3, h3, h3], [h2, h2, 0.0]]),
        rows([[h2, 0.0, h2], [0.0, 1.0, 0.0], [-h2, 0.0, h2]]),
    ]
}

/// Pauli `Z`, `X` and `Y` eigenbases: a complete qubit MUB triple.
pub fn qubit_mub_triple() -> Vec<ProjectiveMeasurement> {
    let h = 0.5f64.sqrt();
    let x = ProjectiveMeasurement::from_rows(&[vec![r(h), r(h)], vec![r(h), r(-h)]]).expect("orthonormal");
    let y = ProjectiveMeasurement::from_rows(&[vec![r(h), c(0.0, h)], vec![r(h), c(0.0, -h)]]).expect("orthonormal");
    vec![ProjectiveMeasurement::computational(2), x, y]
}

/// Computational basis and the two Fourier-type qutrit bases: a qutrit MUB triple.
pub fn qutrit_mub_triple() -> Vec<ProjectiveMeasurement> {
    vec![ProjectiveMeasurement::computational(3), fourier_qutrit(), shifted_fourier_qutrit()]
}
