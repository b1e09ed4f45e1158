//! Dense complex matrices, Hermitian eigendecomposition and spectral powers.

mod eigen;
mod io;
mod matrix;

pub(crate) use eigen::check_exponent;
pub use eigen::{
    hermitian_eigendecomposition, matrix_power, min_eigenvalue, trace_of_power,
    HermitianEigensystem, MAX_SWEEPS, OFF_DIAGONAL_REL,
};
pub use io::{parse_matrix, read_matrix, write_matrix, MatrixFile};
pub use matrix::{is_hermitian, trace, ComplexMatrix};
