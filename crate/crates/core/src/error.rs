use std::fmt;

use thiserror::Error;

/// Which density-matrix conditions a candidate failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DensityFailures {
    pub not_hermitian: bool,
    pub not_psd: bool,
    pub bad_trace: bool,
}

impl DensityFailures {
    pub fn any(&self) -> bool {
        self.not_hermitian || self.not_psd || self.bad_trace
    }
}

impl fmt::Display for DensityFailures {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.not_hermitian {
            parts.push("not Hermitian");
        }
        if self.not_psd {
            parts.push("not positive semidefinite");
        }
        if self.bad_trace {
            parts.push("trace differs from 1");
        }
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max |A_jk - conj(A_kj)| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("not a density matrix: {0}")]
    NotDensityMatrix(DensityFailures),

    #[error("partition {n}x{m} is too small for dimension {dim}")]
    PartitionTooSmall { n: usize, m: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("block index ({j}, {k}) out of range for {n} block rows (1-based)")]
    IndexOutOfRange { j: usize, k: usize, n: usize },

    #[error("exponent p = {p} is invalid (must be finite and > 0)")]
    InvalidExponent { p: f64 },

    #[error("exponent p = {p} is out of range (J(p) is defined for p >= 1)")]
    ExponentOutOfRange { p: f64 },

    #[error("shift x = {x} leaves A + xI with eigenvalue {min_eigenvalue:e}")]
    ShiftInsufficient { x: f64, min_eigenvalue: f64 },

    #[error("exhaustive permutations requested for N = {dim} (limit is 8)")]
    TooManyPermutations { dim: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("weights are not normalized (sum = {sum})")]
    NotNormalized { sum: f64 },

    #[error("rank {rank} is invalid for dimension {dim}")]
    BadRank { rank: usize, dim: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid campaign: {0}")]
    InvalidCampaign(String),
}

pub type Result<T> = std::result::Result<T, Error>;
