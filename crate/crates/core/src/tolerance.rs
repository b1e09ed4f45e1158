//! Numerical thresholds shared across the crate.

use crate::linalg::ComplexMatrix;

/// Relative Hermiticity tolerance: |A_jk − conj(A_kj)| ≤ 1e-10 · max(1, ‖A‖_max).
pub const HERMITICITY_REL: f64 = 1e-10;

/// Relative clipping tolerance for round-off negative eigenvalues.
pub const CLIP_REL: f64 = 1e-10;

/// Absolute trace tolerance for density-matrix validation.
pub const DENSITY_TRACE_TOL: f64 = 1e-8;

/// Relative satisfaction slack for inequality reports.
pub const DEFAULT_SLACK_REL: f64 = 1e-9;

/// Normalization tolerance for probability grids and weight vectors.
pub const NORMALIZATION_TOL: f64 = 1e-10;

pub fn hermiticity_tol(a: &ComplexMatrix) -> f64 {
    HERMITICITY_REL * a.max_abs().max(1.0)
}

/// clip_tol = 1e-10 · max(1, ‖A‖_max).
pub fn clip_tol(a: &ComplexMatrix) -> f64 {
    CLIP_REL * a.max_abs().max(1.0)
}

/// Multiple of dim · ε · ‖A‖_F below which a positive eigenvalue of a
/// rotated matrix is indistinguishable from round-off.
pub const ROUNDOFF_ULPS: f64 = 8.0;

/// Round-off floor for positive eigenvalues. Diagonal matrices are
/// diagonalized exactly, so their floor is 0.
pub fn roundoff_floor(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let off_diagonal =
        (0..n).any(|i| (0..n).any(|j| i != j && a[(i, j)] != num_complex::Complex64::default()));
    if off_diagonal {
        ROUNDOFF_ULPS * n as f64 * f64::EPSILON * a.frobenius_norm()
    } else {
        0.0
    }
}
