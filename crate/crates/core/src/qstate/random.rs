//! Seeded random states following the cascade-spectrum construction.
//!
//! All randomness comes from ChaCha20 (`rand_chacha`), seeded with
//! `seed_from_u64`. `ξ(a, b)` is a uniform draw on the closed interval `[a, b]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{eigh, CMatrix, CVector, C64};

use super::{DensityMatrix, SystemDims};

/// Seed plus target dimensions; equal recipes give bit-identical states.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomStateRecipe {
    pub seed: u64,
    pub dims: SystemDims,
}

impl RandomStateRecipe {
    pub fn new(seed: u64, dims: SystemDims) -> Self {
        Self { seed, dims }
    }

    /// The generator every draw of this recipe comes from.
    pub fn rng(&self) -> ChaCha20Rng {
        ChaCha20Rng::seed_from_u64(self.seed)
    }
}

/// Independent stream `index` under `master`; used for per-sample seeding so
/// results do not depend on evaluation order.
pub fn substream(master: u64, index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(master);
    rng.set_stream(index);
    rng
}

/// `ξ(lo, hi)`
pub fn xi<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..=hi)
}

/// `p_1 = ξ(0,1)`, `p_{s+1} = ξ(0,1) p_s` for `n` values, normalized. The
/// result is non-increasing.
pub fn cascade_spectrum<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut p = Vec::with_capacity(n);
    let mut last = xi(rng, 0.0, 1.0);
    p.push(last);
    for _ in 1..n {
        last *= xi(rng, 0.0, 1.0);
        p.push(last);
    }
    let total: f64 = p.iter().sum();
    p.iter().map(|x| x / total).collect()
}

/// Hermitian matrix from a real `n × n` draw `R` with entries `ξ(-1,1)`
/// (row-major): diagonal of `R`, real part `U + Uᵀ` from the strict upper
/// triangle, imaginary part `L − Lᵀ` from the strict lower triangle.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let r: Vec<f64> = (0..n * n).map(|_| xi(rng, -1.0, 1.0)).collect();
    let mut m = CMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = C64::new(r[i * n + i], 0.0);
        for j in i + 1..n {
            let upper = r[i * n + j];
            let lower = r[j * n + i];
            m[(i, j)] = C64::new(upper, -lower);
            m[(j, i)] = C64::new(upper, lower);
        }
    }
    m
}

/// Unitary whose columns are the eigenvectors of [`random_hermitian`], in
/// ascending eigenvalue order.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    eigh(&random_hermitian(rng, n)).1
}

/// `V diag(λ) V†` with `λ` the cascade spectrum (drawn first) and `V` from the
/// random Hermitian matrix (drawn second). The k-th largest `λ` is paired with
/// the eigenvector of the k-th smallest eigenvalue.
pub fn random_density_state(recipe: &RandomStateRecipe) -> DensityMatrix {
    let mut rng = recipe.rng();
    random_density_state_from(&mut rng, recipe.dims.clone())
}

pub(crate) fn random_density_state_from<R: Rng + ?Sized>(rng: &mut R, dims: SystemDims) -> DensityMatrix {
    let n = dims.total();
    let lambda = cascade_spectrum(rng, n);
    let v = random_unitary(rng, n);
    let weights = CVector::from_iterator(n, lambda.iter().map(|&l| C64::new(l, 0.0)));
    let rho = &v * CMatrix::from_diagonal(&weights) * v.adjoint();
    DensityMatrix::from_map_output(dims, rho)
}

/// Pure state whose vector is the lowest eigenvector of a random Hermitian matrix.
pub fn random_pure_state<R: Rng + ?Sized>(rng: &mut R, dims: SystemDims) -> DensityMatrix {
    let v = random_unitary(rng, dims.total());
    DensityMatrix::pure(dims, &v.column(0).into_owned()).expect("unit eigenvector")
}
