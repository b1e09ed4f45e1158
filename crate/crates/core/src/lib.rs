//! Numerical verification of the block Minkowski trace inequality for
//! Hermitian and density matrices.
//!
//! An (n·m)×(n·m) matrix is viewed as an n×n array of m×m blocks a_jk. For
//! a density matrix ρ and p ≥ 1
//!
//! ```text
//! [Tr (Σ_j a_jj)^p]^{1/p}  ≤  Tr [ (Tr a_jk(p))_{jk} ]^{1/p}
//! ```
//!
//! with a_jk(p) the blocks of ρ^p; the inequality reverses for 0 < p ≤ 1.
//! No tensor-product structure is assumed, so any dimension works after
//! zero padding to n·m. The crate also covers the shifted Hermitian form
//! A + x·I, the scalar probability-grid forms, the gap J(p) and mutual
//! information.
//!
//! Work that fans out over independent items (fuzz trials, permutations,
//! exponent and partition scans) runs on rayon when the `parallel` feature
//! is enabled, and sequentially otherwise.

pub mod blocks;
pub mod campaign;
pub mod engine;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod states;
pub mod tolerance;

pub use blocks::{
    block, block_trace_matrix, diagonal_block_sum, make_partition, pad, BlockPartition,
};
pub use campaign::{
    run_campaign, run_campaign_with, CampaignMode, CampaignOutcome, CampaignSpec, CampaignSummary,
    TrialRecord,
};
pub use engine::{
    correlation_measure_j, enumerate_partitions, minkowski_lhs, minkowski_rhs, scan_p,
    scan_partitions, shift_to_nonnegative, validate_density, verify_all_permutations,
    verify_all_permutations_with, verify_density, verify_hermitian, PermutationMode,
};
pub use error::{DensityFailures, Error, Result};
pub use exec::Execution;
pub use linalg::{
    hermitian_eigendecomposition, is_hermitian, matrix_power, min_eigenvalue, trace, ComplexMatrix,
    HermitianEigensystem,
};
pub use num_complex::Complex64;
pub use report::{Direction, InequalityReport, ReportRecord};
pub use scalar::{
    mutual_information, p1_function, p2_diagonal_bound, p2_function, scalar_correlation_j,
    shannon_entropy, vector_minkowski_sides, verify_shifted_scalar, verify_vector, ProbabilityGrid,
};
pub use states::{
    apply_permutation, bell_state, diagonal_from_grid, maximally_mixed, pure_state,
    random_density_matrix, random_hermitian, random_probability_grid, Permutation, RngSeed,
};
