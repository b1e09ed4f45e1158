//! Block partitions of an (n·m)×(n·m) matrix into an n×n array of m×m
//! blocks, zero padding, and the two partial traces.
//!
//! Block indices are 1-based in the public API and in reports, 0-based
//! internally.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// `n` block rows of size `m`, covering a matrix of `original_dim` padded
/// with `padding = n·m − original_dim` zero rows and columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BlockPartition {
    n: usize,
    m: usize,
    original_dim: usize,
    padding: usize,
}

impl BlockPartition {
    pub fn new(original_dim: usize, n: usize, m: usize) -> Result<Self> {
        if original_dim == 0 || n == 0 || m == 0 {
            return Err(Error::PartitionTooSmall {
                n,
                m,
                dim: original_dim,
            });
        }
        let total = n.checked_mul(m).ok_or(Error::PartitionTooSmall {
            n,
            m,
            dim: original_dim,
        })?;
        if total < original_dim {
            return Err(Error::PartitionTooSmall {
                n,
                m,
                dim: original_dim,
            });
        }
        Ok(Self {
            n,
            m,
            original_dim,
            padding: total - original_dim,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn original_dim(&self) -> usize {
        self.original_dim
    }

    pub fn padding(&self) -> usize {
        self.padding
    }

    /// N′ = n·m.
    pub fn padded_dim(&self) -> usize {
        self.n * self.m
    }

    /// Brings `a` to the padded dimension, accepting either the original or
    /// the already-padded size.
    pub(crate) fn fit(&self, a: &ComplexMatrix) -> Result<ComplexMatrix> {
        if a.dim() == self.padded_dim() {
            Ok(a.clone())
        } else {
            pad(a, self)
        }
    }

    fn check_padded(&self, a: &ComplexMatrix) -> Result<()> {
        if a.dim() != self.padded_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.padded_dim(),
                found: a.dim(),
            });
        }
        Ok(())
    }
}

pub fn make_partition(dim: usize, n: usize, m: usize) -> Result<BlockPartition> {
    BlockPartition::new(dim, n, m)
}

/// Embeds `a` in the top-left corner of an (n·m)×(n·m) zero matrix.
pub fn pad(a: &ComplexMatrix, partition: &BlockPartition) -> Result<ComplexMatrix> {
    if a.dim() != partition.original_dim {
        return Err(Error::DimensionMismatch {
            expected: partition.original_dim,
            found: a.dim(),
        });
    }
    if partition.padding == 0 {
        return Ok(a.clone());
    }
    let d = a.dim();
    Ok(ComplexMatrix::from_fn(partition.padded_dim(), |i, j| {
        if i < d && j < d {
            a[(i, j)]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

/// The m×m block a_jk, with 1-based `j`, `k`.
pub fn block(
    a: &ComplexMatrix,
    partition: &BlockPartition,
    j: usize,
    k: usize,
) -> Result<ComplexMatrix> {
    partition.check_padded(a)?;
    let n = partition.n;
    if j == 0 || k == 0 || j > n || k > n {
        return Err(Error::IndexOutOfRange { j, k, n });
    }
    let m = partition.m;
    let (r0, c0) = ((j - 1) * m, (k - 1) * m);
    Ok(ComplexMatrix::from_fn(m, |r, c| a[(r0 + r, c0 + c)]))
}

/// Σ_j a_jj, the trace over the block-row index.
pub fn diagonal_block_sum(a: &ComplexMatrix, partition: &BlockPartition) -> Result<ComplexMatrix> {
    partition.check_padded(a)?;
    let (n, m) = (partition.n, partition.m);
    let mut out = ComplexMatrix::zeros(m);
    for j in 0..n {
        let off = j * m;
        for r in 0..m {
            for c in 0..m {
                out[(r, c)] += a[(off + r, off + c)];
            }
        }
    }
    Ok(out)
}

/// The n×n matrix of block traces Tr a_jk, the trace over the intra-block
/// index.
pub fn block_trace_matrix(a: &ComplexMatrix, partition: &BlockPartition) -> Result<ComplexMatrix> {
    partition.check_padded(a)?;
    let (n, m) = (partition.n, partition.m);
    Ok(ComplexMatrix::from_fn(n, |j, k| {
        (0..m).map(|r| a[(j * m + r, k * m + r)]).sum()
    }))
}
