//! Test-matrix constructors and seeded generators.
//!
//! A 4×4 state can be read as two qubits or as a single j = 3/2 qudit; the
//! matrix is the same either way and only the [`BlockPartition`] chosen at
//! verification time carries structure.
//!
//! # Random number generation
//!
//! Every generator is a pure function of its seed:
//!
//! * The stream is xoshiro256++ whose 256-bit state is expanded from the
//!   64-bit seed with SplitMix64 (increment `0x9E3779B97F4A7C15`, mixers
//!   `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`, shifts 30/27/31).
//! * A uniform double in [0, 1) is `(next_u64 >> 11) · 2⁻⁵³`.
//! * Gaussians come in Box–Muller pairs from two uniforms `u1`, `u2`:
//!   `r = sqrt(−2 ln(1 − u1))`, `(r cos 2πu2, r sin 2πu2)`.
//! * A standard complex Gaussian is one pair divided by √2 (E|z|² = 1).
//! * Matrices are filled in row-major order. Fuzz drivers derive the seed
//!   of trial `i` as `seed ^ i`.
//!
//! [`BlockPartition`]: crate::blocks::BlockPartition

use std::f64::consts::{SQRT_2, TAU};
use std::fmt;

use num_complex::Complex64;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::ProbabilityGrid;
use crate::tolerance::NORMALIZATION_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// Seed for the `index`-th trial of a campaign.
    pub fn derive(self, index: u64) -> Self {
        RngSeed(self.0 ^ index)
    }
}

impl From<u64> for RngSeed {
    fn from(v: u64) -> Self {
        RngSeed(v)
    }
}

/// Seeded uniform and Gaussian samples.
pub struct SampleStream {
    rng: Xoshiro256PlusPlus,
}

impl SampleStream {
    pub fn new(seed: RngSeed) -> Self {
        Self {
            rng: Xoshiro256PlusPlus::seed_from_u64(seed.0),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn normal_pair(&mut self) -> (f64, f64) {
        let u1 = self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * (1.0 - u1).ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        (r * c, r * s)
    }

    pub fn complex_normal(&mut self) -> Complex64 {
        let (a, b) = self.normal_pair();
        Complex64::new(a / SQRT_2, b / SQRT_2)
    }

    /// Uniform index in [0, bound).
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.uniform() * bound as f64) as usize).min(bound - 1)
    }
}

/// I_N / N.
pub fn maximally_mixed(dim: usize) -> ComplexMatrix {
    ComplexMatrix::identity(dim).scale(1.0 / dim as f64)
}

/// |ψ⟩⟨ψ| for a unit vector ψ.
pub fn pure_state(amplitudes: &[Complex64]) -> Result<ComplexMatrix> {
    if amplitudes.is_empty() {
        return Err(Error::NotNormalized { sum: 0.0 });
    }
    let norm: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
    if (norm - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::NotNormalized { sum: norm });
    }
    Ok(outer(amplitudes))
}

fn outer(v: &[Complex64]) -> ComplexMatrix {
    let n = v.len();
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        out[(i, i)] = Complex64::new(v[i].norm_sqr(), 0.0);
        for j in (i + 1)..n {
            let z = v[i] * v[j].conj();
            out[(i, j)] = z;
            out[(j, i)] = z.conj();
        }
    }
    out
}

/// (|00⟩ + |11⟩)/√2 as a 4×4 density matrix.
pub fn bell_state() -> ComplexMatrix {
    let h = Complex64::new(1.0 / SQRT_2, 0.0);
    let z = Complex64::new(0.0, 0.0);
    outer(&[h, z, z, h])
}

/// diag(P₁₁, P₁₂, …, P_nm) in row-major grid order.
pub fn diagonal_from_grid(grid: &ProbabilityGrid) -> Result<ComplexMatrix> {
    if !grid.is_normalized() {
        return Err(Error::NotNormalized { sum: grid.total() });
    }
    Ok(ComplexMatrix::from_real_diagonal(grid.values()))
}

/// Ginibre-induced state G G† / Tr(G G†), G an N×rank complex Gaussian
/// matrix.
pub fn random_density_matrix(dim: usize, rank: usize, seed: RngSeed) -> Result<ComplexMatrix> {
    if dim == 0 || rank == 0 || rank > dim {
        return Err(Error::BadRank { rank, dim });
    }
    let mut stream = SampleStream::new(seed);
    let g: Vec<Complex64> = (0..dim * rank).map(|_| stream.complex_normal()).collect();
    let row = |i: usize| &g[i * rank..(i + 1) * rank];
    let mut out = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            let z: Complex64 = row(i).iter().zip(row(j)).map(|(a, b)| a * b.conj()).sum();
            if i == j {
                out[(i, i)] = Complex64::new(z.re, 0.0);
            } else {
                out[(i, j)] = z;
                out[(j, i)] = z.conj();
            }
        }
    }
    let tr = out.trace().re;
    Ok(out.scale(1.0 / tr))
}

/// (M + M†)/2 with M iid complex Gaussian scaled by `scale`.
pub fn random_hermitian(dim: usize, scale: f64, seed: RngSeed) -> ComplexMatrix {
    let mut stream = SampleStream::new(seed);
    ComplexMatrix::from_fn(dim, |_, _| stream.complex_normal() * scale).hermitian_part()
}

/// Normalized n×m grid with iid uniform weights.
pub fn random_probability_grid(n: usize, m: usize, seed: RngSeed) -> ProbabilityGrid {
    let mut stream = SampleStream::new(seed);
    let raw: Vec<f64> = (0..n * m).map(|_| stream.uniform()).collect();
    let total: f64 = raw.iter().sum();
    let values = if total > 0.0 {
        raw.iter().map(|v| v / total).collect()
    } else {
        vec![1.0 / (n * m) as f64; n * m]
    };
    ProbabilityGrid::new(n, m, values).expect("generated grid is valid")
}

/// A bijection on {0, …, N−1}; displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Builds σ from its 0-based images `sigma[j] = σ(j)`.
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::NotAPermutation(format!("{sigma:?}")));
            }
            seen[s] = true;
        }
        Ok(Self(sigma))
    }

    pub fn from_one_based(sigma: &[usize]) -> Result<Self> {
        if sigma.contains(&0) {
            return Err(Error::NotAPermutation(format!("{sigma:?}")));
        }
        Self::new(sigma.iter().map(|s| s - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Fisher–Yates shuffle driven by the seeded stream.
    pub fn random(n: usize, seed: RngSeed) -> Self {
        let mut stream = SampleStream::new(seed);
        let mut sigma: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = stream.below(i + 1);
            sigma.swap(i, j);
        }
        Self(sigma)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|s| s + 1).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// ρ′ with ρ′_{σ(j)σ(k)} = ρ_jk, i.e. P_σ ρ P_σᵀ.
pub fn apply_permutation(rho: &ComplexMatrix, perm: &Permutation) -> Result<ComplexMatrix> {
    if perm.len() != rho.dim() {
        return Err(Error::NotAPermutation(format!(
            "permutation of {} indices applied to a {}x{} matrix",
            perm.len(),
            rho.dim(),
            rho.dim()
        )));
    }
    let s = perm.as_slice();
    let mut out = ComplexMatrix::zeros(rho.dim());
    for j in 0..rho.dim() {
        for k in 0..rho.dim() {
            out[(s[j], s[k])] = rho[(j, k)];
        }
    }
    Ok(out)
}
