//! Both sides of the block Minkowski trace inequality
//!
//! ```text
//! [Tr (Σ_j a_jj)^p]^{1/p}  ≤  Tr [ (Tr a_jk(p))_{jk} ]^{1/p}      p ≥ 1
//! ```
//!
//! where a_jk are the m×m blocks of ρ and a_jk(p) those of ρ^p. The
//! inequality reverses for 0 < p < 1 and is an identity at p = 1. The
//! Hermitian variant evaluates the same pipeline on A(x) = A + x·I.

use itertools::Itertools;

use crate::blocks::{block_trace_matrix, diagonal_block_sum, BlockPartition};
use crate::error::{DensityFailures, Error, Result};
use crate::exec::Execution;
use crate::linalg::{
    check_exponent, hermitian_eigendecomposition, matrix_power, trace_of_power, ComplexMatrix,
};
use crate::report::InequalityReport;
use crate::states::{apply_permutation, Permutation, RngSeed};
use crate::tolerance::{self, DENSITY_TRACE_TOL};

/// Largest N for which all N! permutations are enumerated.
pub const MAX_EXHAUSTIVE_DIM: usize = 8;

/// Checks Hermiticity, positivity (within clip_tol) and unit trace.
pub fn validate_density(rho: &ComplexMatrix) -> Result<()> {
    let mut failures = DensityFailures::default();
    if !rho.is_hermitian(tolerance::hermiticity_tol(rho)) {
        failures.not_hermitian = true;
    } else {
        let min = hermitian_eigendecomposition(rho)?.min_eigenvalue();
        failures.not_psd = min < -tolerance::clip_tol(rho);
    }
    let tr = rho.trace();
    failures.bad_trace = (tr.re - 1.0).abs() > DENSITY_TRACE_TOL || tr.im.abs() > DENSITY_TRACE_TOL;
    if failures.any() {
        return Err(Error::NotDensityMatrix(failures));
    }
    Ok(())
}

fn lhs_of_padded(a: &ComplexMatrix, partition: &BlockPartition, p: f64) -> Result<f64> {
    let reduced = diagonal_block_sum(a, partition)?;
    Ok(trace_of_power(&reduced, p)?.powf(1.0 / p))
}

fn rhs_of_padded(a: &ComplexMatrix, partition: &BlockPartition, p: f64) -> Result<f64> {
    let powered = matrix_power(a, p)?;
    let traces = block_trace_matrix(&powered, partition)?;
    trace_of_power(&traces, 1.0 / p)
}

/// [Tr (Σ_j a_jj)^p]^{1/p}. `rho` may be given at its original or padded
/// dimension.
pub fn minkowski_lhs(rho: &ComplexMatrix, partition: &BlockPartition, p: f64) -> Result<f64> {
    check_exponent(p)?;
    lhs_of_padded(&partition.fit(rho)?, partition, p)
}

/// Tr[(Tr a_jk(p))^{1/p}].
pub fn minkowski_rhs(rho: &ComplexMatrix, partition: &BlockPartition, p: f64) -> Result<f64> {
    check_exponent(p)?;
    rhs_of_padded(&partition.fit(rho)?, partition, p)
}

/// Shared pipeline for the density and Hermitian entry points. `a` is
/// already padded and shifted.
fn evaluate(
    a: &ComplexMatrix,
    partition: &BlockPartition,
    p: f64,
    x: f64,
) -> Result<InequalityReport> {
    let lhs = lhs_of_padded(a, partition, p)?;
    let rhs = rhs_of_padded(a, partition, p)?;
    Ok(InequalityReport::with_default_slack(
        p,
        x,
        (partition.n(), partition.m(), partition.padding()),
        lhs,
        rhs,
    ))
}

fn check_partition_for(a: &ComplexMatrix, partition: &BlockPartition) -> Result<()> {
    if a.dim() > partition.padded_dim() {
        return Err(Error::PartitionTooSmall {
            n: partition.n(),
            m: partition.m(),
            dim: a.dim(),
        });
    }
    if a.dim() != partition.original_dim() && a.dim() != partition.padded_dim() {
        return Err(Error::DimensionMismatch {
            expected: partition.original_dim(),
            found: a.dim(),
        });
    }
    Ok(())
}

/// Checks the inequality for a density matrix, zero-padding it to n·m first
/// when needed.
pub fn verify_density(
    rho: &ComplexMatrix,
    partition: &BlockPartition,
    p: f64,
) -> Result<InequalityReport> {
    check_exponent(p)?;
    check_partition_for(rho, partition)?;
    validate_density(rho)?;
    evaluate(&partition.fit(rho)?, partition, p, 0.0)
}

/// J(p) = rhs − lhs, defined for p ≥ 1.
pub fn correlation_measure_j(
    rho: &ComplexMatrix,
    partition: &BlockPartition,
    p: f64,
) -> Result<f64> {
    check_exponent(p)?;
    if p < 1.0 {
        return Err(Error::ExponentOutOfRange { p });
    }
    Ok(verify_density(rho, partition, p)?.j_value)
}

/// (A + x·I, x) with x = max(0, −λ_min(A)) + margin.
pub fn shift_to_nonnegative(a: &ComplexMatrix, margin: f64) -> Result<(ComplexMatrix, f64)> {
    let min = hermitian_eigendecomposition(a)?.min_eigenvalue();
    let x = (-min).max(0.0) + margin;
    if x == 0.0 {
        return Ok((a.clone(), 0.0));
    }
    Ok((a.add_scaled_identity(x), x))
}

/// Checks the inequality for A(x) = A′ + x·I, where A′ is `a` zero-padded
/// to n·m.
pub fn verify_hermitian(
    a: &ComplexMatrix,
    partition: &BlockPartition,
    p: f64,
    x: f64,
) -> Result<InequalityReport> {
    check_exponent(p)?;
    if !x.is_finite() {
        return Err(Error::ShiftInsufficient {
            x,
            min_eigenvalue: f64::NAN,
        });
    }
    check_partition_for(a, partition)?;
    let deviation = a.hermitian_deviation();
    if deviation > tolerance::hermiticity_tol(a) {
        return Err(Error::NotHermitian { deviation });
    }
    let padded = partition.fit(a)?;
    let shifted = if x == 0.0 {
        padded
    } else {
        padded.add_scaled_identity(x)
    };
    let min = hermitian_eigendecomposition(&shifted)?.min_eigenvalue();
    if min < -tolerance::clip_tol(&shifted) {
        return Err(Error::ShiftInsufficient {
            x,
            min_eigenvalue: min,
        });
    }
    evaluate(&shifted, partition, p, x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermutationMode {
    /// All N! permutations in lexicographic order; N ≤ 8.
    Exhaustive,
    /// `count` random permutations, the i-th drawn from `seed ^ i`.
    Sampled { count: usize, seed: RngSeed },
}

fn permutations_for(dim: usize, mode: PermutationMode) -> Result<Vec<Permutation>> {
    match mode {
        PermutationMode::Exhaustive => {
            if dim > MAX_EXHAUSTIVE_DIM {
                return Err(Error::TooManyPermutations { dim });
            }
            Ok((0..dim)
                .permutations(dim)
                .map(|s| Permutation::new(s).expect("itertools yields bijections"))
                .collect())
        }
        PermutationMode::Sampled { count, seed } => Ok((0..count)
            .map(|i| Permutation::random(dim, seed.derive(i as u64)))
            .collect()),
    }
}

/// Reports for every conjugation P_σ ρ P_σᵀ.
pub fn verify_all_permutations(
    rho: &ComplexMatrix,
    partition: &BlockPartition,
    p: f64,
    mode: PermutationMode,
) -> Result<Vec<(Permutation, InequalityReport)>> {
    verify_all_permutations_with(rho, partition, p, mode, Execution::default())
}

pub fn verify_all_permutations_with(
    rho: &ComplexMatrix,
    partition: &BlockPartition,
    p: f64,
    mode: PermutationMode,
    exec: Execution,
) -> Result<Vec<(Permutation, InequalityReport)>> {
    check_exponent(p)?;
    check_partition_for(rho, partition)?;
    validate_density(rho)?;
    let perms = permutations_for(rho.dim(), mode)?;
    let reports = exec.try_map(perms.len(), |i| {
        let permuted = apply_permutation(rho, &perms[i])?;
        evaluate(&partition.fit(&permuted)?, partition, p, 0.0)
    })?;
    Ok(perms.into_iter().zip(reports).collect())
}

/// One report per exponent, in input order.
pub fn scan_p(
    rho: &ComplexMatrix,
    partition: &BlockPartition,
    p_values: &[f64],
) -> Result<Vec<InequalityReport>> {
    if p_values.is_empty() {
        return Err(Error::InvalidExponent { p: f64::NAN });
    }
    for &p in p_values {
        check_exponent(p)?;
    }
    check_partition_for(rho, partition)?;
    validate_density(rho)?;
    let padded = partition.fit(rho)?;
    Execution::default().try_map(p_values.len(), |i| {
        evaluate(&padded, partition, p_values[i], 0.0)
    })
}

/// All (n, m) with n, m ≥ 2 and N ≤ n·m ≤ N + max_padding, ordered by n·m
/// then n.
pub fn enumerate_partitions(dim: usize, max_padding: usize) -> Vec<BlockPartition> {
    let mut out = Vec::new();
    for total in dim..=dim + max_padding {
        for n in 2..=total / 2 {
            if total % n == 0 && total / n >= 2 {
                out.push(BlockPartition::new(dim, n, total / n).expect("n·m ≥ dim"));
            }
        }
    }
    out
}

pub fn scan_partitions(
    rho: &ComplexMatrix,
    p: f64,
    max_padding: usize,
) -> Result<Vec<(BlockPartition, InequalityReport)>> {
    check_exponent(p)?;
    validate_density(rho)?;
    let partitions = enumerate_partitions(rho.dim(), max_padding);
    let reports = Execution::default().try_map(partitions.len(), |i| {
        let partition = &partitions[i];
        evaluate(&partition.fit(rho)?, partition, p, 0.0)
    })?;
    Ok(partitions.into_iter().zip(reports).collect())
}
