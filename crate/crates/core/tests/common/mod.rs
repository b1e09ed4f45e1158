//! Independent reference computations. Nothing here goes through the Jacobi
//! eigensolver or the crate's partial-trace helpers.

#![allow(dead_code)]

use minkowski_trace::{Complex64, ComplexMatrix};

/// Entrywise product of square matrices given as plain row-major slices.
pub fn naive_mul(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                acc += a[i * n + k] * b[k * n + j];
            }
            out[i * n + j] = acc;
        }
    }
    out
}

/// A^k by repeated multiplication.
pub fn naive_int_power(a: &ComplexMatrix, k: u32) -> Vec<Complex64> {
    let n = a.dim();
    let base = a.entries().to_vec();
    let mut acc = base.clone();
    for _ in 1..k {
        acc = naive_mul(&acc, &base, n);
    }
    acc
}

/// Eigenvalues of a 2×2 Hermitian [[a, b], [conj b, d]] from the quadratic
/// formula, ascending.
pub fn eig2(m: [Complex64; 4]) -> [f64; 2] {
    let (a, d) = (m[0].re, m[3].re);
    let b = m[1];
    let mid = 0.5 * (a + d);
    let rad = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    [mid - rad, mid + rad]
}

/// Σ_j a_jj for a 4×4 matrix with 2×2 blocks, straight from indices.
pub fn block_sum_2x2(m: &[Complex64]) -> [Complex64; 4] {
    [
        m[0] + m[2 * 4 + 2],
        m[1] + m[2 * 4 + 3],
        m[4] + m[3 * 4 + 2],
        m[5] + m[3 * 4 + 3],
    ]
}

/// (Tr a_jk) for a 4×4 matrix with 2×2 blocks.
pub fn block_traces_2x2(m: &[Complex64]) -> [Complex64; 4] {
    let at = |i: usize, j: usize| m[i * 4 + j];
    [
        at(0, 0) + at(1, 1),
        at(0, 2) + at(1, 3),
        at(2, 0) + at(3, 1),
        at(2, 2) + at(3, 3),
    ]
}

fn clipped_pow(l: f64, p: f64) -> f64 {
    l.max(0.0).powf(p)
}

/// (lhs, rhs) for a 4×4 PSD matrix, partition (2, 2) and integer p, using
/// repeated multiplication for matrix powers and the closed-form 2×2
/// spectrum for the outer traces.
pub fn oracle_sides_2x2(rho: &ComplexMatrix, p: u32) -> (f64, f64) {
    assert_eq!(rho.dim(), 4);
    let pf = p as f64;
    let s = block_sum_2x2(rho.entries());
    let [s0, s1] = eig2(s);
    let lhs = (clipped_pow(s0, pf) + clipped_pow(s1, pf)).powf(1.0 / pf);
    let powered = naive_int_power(rho, p);
    let [t0, t1] = eig2(block_traces_2x2(&powered));
    let rhs = clipped_pow(t0, 1.0 / pf) + clipped_pow(t1, 1.0 / pf);
    (lhs, rhs)
}
