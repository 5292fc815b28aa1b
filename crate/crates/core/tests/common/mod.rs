#![allow(dead_code)]

use eur_core::linalg::{CMatrix, C64};
use eur_core::measurement::{random_projective_measurement, ProjectiveMeasurement};
use eur_core::qstate::{random_density_state, DensityMatrix, RandomStateRecipe, SystemDims};

pub fn random_state(seed: u64, labels: &[&str], dims: &[usize]) -> DensityMatrix {
    let dims = SystemDims::new(labels.iter().copied(), dims.iter().copied()).unwrap();
    random_density_state(&RandomStateRecipe::new(seed, dims))
}

pub fn random_bases(seed: u64, d: usize, m: usize) -> Vec<ProjectiveMeasurement> {
    (0..m).map(|k| random_projective_measurement(d, seed.wrapping_mul(31).wrapping_add(k as u64))).collect()
}

/// Partial trace by explicit summation over matching multi-indices.
pub fn partial_trace_oracle(m: &CMatrix, dims: &[usize], keep: &[usize]) -> CMatrix {
    let n: usize = dims.iter().product();
    let digits = |mut x: usize| {
        let mut out = vec![0; dims.len()];
        for k in (0..dims.len()).rev() {
            out[k] = x % dims[k];
            x /= dims[k];
        }
        out
    };
    let kept: usize = keep.iter().map(|&k| dims[k]).product();
    let index_of = |d: &[usize]| keep.iter().fold(0, |acc, &k| acc * dims[k] + d[k]);
    let mut out = CMatrix::zeros(kept, kept);
    for i in 0..n {
        let di = digits(i);
        for j in 0..n {
            let dj = digits(j);
            let traced_match = (0..dims.len()).filter(|k| !keep.contains(k)).all(|k| di[k] == dj[k]);
            if traced_match {
                out[(index_of(&di), index_of(&dj))] += m[(i, j)];
            }
        }
    }
    out
}

/// `-Σ p log2 p` over eigenvalues computed by the Jacobi method on the real
/// symmetric embedding `[[Re, -Im], [Im, Re]]`, whose spectrum is that of the
/// Hermitian matrix with every eigenvalue doubled in multiplicity.
pub fn entropy_oracle(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut a = vec![vec![0.0f64; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let z: C64 = m[(i, j)];
            a[i][j] = z.re;
            a[i + n][j + n] = z.re;
            a[i][j + n] = -z.im;
            a[i + n][j] = z.im;
        }
    }
    let evs = jacobi_eigenvalues(a);
    let mut s = 0.0;
    for p in evs {
        if p > 1e-15 {
            s -= p * p.log2();
        }
    }
    s / 2.0
}

fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _ in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub struct Instance {
    pub rho: DensityMatrix,
    pub partition: eur_core::bounds::MemoryPartition,
    pub ms: Vec<ProjectiveMeasurement>,
}

/// Random `d ∈ {2,3}`, `m ∈ {2,3}`, `n ∈ 1..=m`, a random state on `A` plus
/// `n` qubit memories, random bases and a random surjective assignment of
/// measurements to memories.
pub fn random_instance(seed: u64) -> Instance {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    let d = rng.random_range(2..=3usize);
    let m = rng.random_range(2..=3usize);
    let n = rng.random_range(1..=m);
    let memories = ["B", "C", "D"];
    let mut labels = vec!["A"];
    labels.extend(&memories[..n]);
    let mut dims = vec![d];
    dims.extend(std::iter::repeat_n(2, n));
    let rho = random_state(rng.random(), &labels, &dims);
    let ms = random_bases(rng.random(), d, m);
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut rng);
    let mut groups: Vec<Vec<usize>> = order[..n].iter().map(|&i| vec![i]).collect();
    for &i in &order[n..] {
        let t = rng.random_range(0..n);
        groups[t].push(i);
    }
    let partition = eur_core::bounds::MemoryPartition::new(m, groups, memories[..n].to_vec()).unwrap();
    Instance { rho, partition, ms }
}

pub fn overlaps(a: &ProjectiveMeasurement, b: &ProjectiveMeasurement) -> Vec<Vec<f64>> {
    a.vectors().iter().map(|u| b.vectors().iter().map(|v| u.dotc(v).norm_sqr()).collect()).collect()
}

/// Smallest eigenvalue of `p Δ12 + (1 − p) Δ21`, with both operators built
/// from explicit outer products.
pub fn lambda_min_oracle(a: &ProjectiveMeasurement, b: &ProjectiveMeasurement, p: f64) -> f64 {
    let c = overlaps(a, b);
    let d = a.dim();
    let mut m = CMatrix::zeros(d, d);
    for k in 0..d {
        let w12 = -c[k].iter().cloned().fold(0.0, f64::max).log2();
        let w21 = -(0..d).map(|j| c[j][k]).fold(0.0, f64::max).log2();
        for (v, w) in [(&a.vectors()[k], p * w12), (&b.vectors()[k], (1.0 - p) * w21)] {
            for i in 0..d {
                for j in 0..d {
                    m[(i, j)] += v[i] * v[j].conj() * C64::new(w, 0.0);
                }
            }
        }
    }
    min_eigenvalue(&m)
}

/// Closed-form smallest eigenvalue of a 2×2 or 3×3 Hermitian matrix.
pub fn min_eigenvalue(m: &CMatrix) -> f64 {
    let r = |i: usize, j: usize| m[(i, j)].re;
    match m.nrows() {
        2 => {
            let mean = 0.5 * (r(0, 0) + r(1, 1));
            mean - (0.25 * (r(0, 0) - r(1, 1)).powi(2) + m[(0, 1)].norm_sqr()).sqrt()
        }
        3 => {
            let q = (r(0, 0) + r(1, 1) + r(2, 2)) / 3.0;
            let off = m[(0, 1)].norm_sqr() + m[(0, 2)].norm_sqr() + m[(1, 2)].norm_sqr();
            let p2 = (r(0, 0) - q).powi(2) + (r(1, 1) - q).powi(2) + (r(2, 2) - q).powi(2) + 2.0 * off;
            if p2 < 1e-30 {
                return q;
            }
            let p = (p2 / 6.0).sqrt();
            let b = (m - CMatrix::identity(3, 3).scale(q)).unscale(p);
            let det = (b[(0, 0)] * (b[(1, 1)] * b[(2, 2)] - b[(1, 2)] * b[(2, 1)])
                - b[(0, 1)] * (b[(1, 0)] * b[(2, 2)] - b[(1, 2)] * b[(2, 0)])
                + b[(0, 2)] * (b[(1, 0)] * b[(2, 1)] - b[(1, 1)] * b[(2, 0)]))
                .re;
            let phi = (det / 2.0).clamp(-1.0, 1.0).acos() / 3.0;
            q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos()
        }
        n => panic!("no closed form for dimension {n}"),
    }
}

pub fn grid_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, points: usize) -> (f64, f64) {
    (0..points)
        .map(|k| lo + (hi - lo) * k as f64 / (points - 1) as f64)
        .map(|p| (f(p), p))
        .fold((f64::NEG_INFINITY, 0.0), |best, x| if x.0 > best.0 { x } else { best })
}

