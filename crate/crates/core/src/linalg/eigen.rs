//! Hermitian eigendecomposition by cyclic complex Jacobi rotations, and the
//! spectral matrix functions built on it.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::tolerance;

/// Maximum number of full cyclic sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius norm target, relative to ‖A‖_F.
pub const OFF_DIAGONAL_REL: f64 = 1e-12;

/// Eigenvalues in ascending order with the matching unit eigenvectors as
/// the columns of `eigenvectors`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigensystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigensystem {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[self.dim() - 1]
    }

    /// U f(Λ) U†, with the result mirrored so it is exactly Hermitian.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let values: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        self.with_spectrum(&values)
    }

    /// U diag(values) U†.
    pub fn with_spectrum(&self, values: &[f64]) -> ComplexMatrix {
        assert_eq!(values.len(), self.dim(), "spectrum length mismatch");
        let n = self.dim();
        let u = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, &fk) in values.iter().enumerate() {
                    if fk != 0.0 {
                        acc += u[(i, k)] * u[(j, k)].conj() * fk;
                    }
                }
                if i == j {
                    out[(i, i)] = Complex64::new(acc.re, 0.0);
                } else {
                    out[(i, j)] = acc;
                    out[(j, i)] = acc.conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply(|l| l)
    }

    /// ‖U†U − I‖_max.
    pub fn orthonormality_error(&self) -> f64 {
        let u = &self.eigenvectors;
        let gram = &u.adjoint() * u;
        gram.max_abs_diff(&ComplexMatrix::identity(self.dim()))
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn check_hermitian(a: &ComplexMatrix) -> Result<()> {
    let deviation = a.hermitian_deviation();
    if deviation > tolerance::hermiticity_tol(a) {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

/// Diagonalizes a Hermitian matrix.
///
/// The input is first replaced by its exact Hermitian part. Each rotation
/// zeroes one off-diagonal pair `(p, q)` with the unitary
/// `J = [[c, s·e], [−s·ē, c]]` where `e` is the phase of `a_pq`, so the
/// 2×2 subproblem reduces to the real symmetric Jacobi step. Output is
/// deterministic: the rotation order is fixed and the final sort is stable.
pub fn hermitian_eigendecomposition(a: &ComplexMatrix) -> Result<HermitianEigensystem> {
    check_hermitian(a)?;
    let n = a.dim();
    let mut w = a.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_REL * a.frobenius_norm();

    let sweep = |w: &mut ComplexMatrix, v: &mut ComplexMatrix| {
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                rotate(w, v, p, q);
            }
        }
    };
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&w);
        if off <= threshold {
            // convergence is quadratic, so one more sweep takes the residual
            // from the threshold down to round-off
            if off > 0.0 {
                sweep(&mut w, &mut v);
            }
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }
        sweep(&mut w, &mut v);
        sweeps += 1;
    }

    let diag: Vec<f64> = (0..n).map(|i| w[(i, i)].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let eigenvalues = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigensystem {
        eigenvalues,
        eigenvectors,
    })
}

fn rotate(w: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = w[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let e = apq / b;
    let alpha = w[(p, p)].re;
    let beta = w[(q, q)].re;
    let theta = (beta - alpha) / (2.0 * b);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let se = e * s;
    let se_conj = se.conj();
    let n = w.dim();

    // A <- A J
    for k in 0..n {
        let akp = w[(k, p)];
        let akq = w[(k, q)];
        w[(k, p)] = akp * c - akq * se_conj;
        w[(k, q)] = akp * se + akq * c;
    }
    // A <- J† A
    for k in 0..n {
        let apk = w[(p, k)];
        let aqk = w[(q, k)];
        w[(p, k)] = apk * c - aqk * se;
        w[(q, k)] = apk * se_conj + aqk * c;
    }
    w[(p, p)] = Complex64::new(alpha - t * b, 0.0);
    w[(q, q)] = Complex64::new(beta + t * b, 0.0);
    w[(p, q)] = Complex64::new(0.0, 0.0);
    w[(q, p)] = Complex64::new(0.0, 0.0);

    // V <- V J
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * se_conj;
        v[(k, q)] = vkp * se + vkq * c;
    }
}

pub fn min_eigenvalue(a: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigendecomposition(a)?.min_eigenvalue())
}

pub(crate) fn check_exponent(p: f64) -> Result<()> {
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::InvalidExponent { p });
    }
    Ok(())
}

fn is_positive_integer(p: f64) -> bool {
    p.fract() == 0.0 && p >= 1.0 && p <= i32::MAX as f64
}

/// λ ↦ λ^p with the clipping rules: eigenvalues in [−clip, floor] become 0,
/// 0^p = 0, and genuinely negative eigenvalues are only allowed for
/// positive integer exponents.
///
/// The positive side is clipped at the round-off floor because λ^p is not
/// Lipschitz at 0 for p < 1: a round-off eigenvalue of 1e-17 would otherwise
/// contribute 3e-9 at p = 0.5.
fn scalar_power(lambda: f64, p: f64, clip: f64, floor: f64) -> Result<f64> {
    if lambda < -clip {
        if is_positive_integer(p) {
            return Ok(lambda.powi(p as i32));
        }
        return Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: lambda,
        });
    }
    if lambda <= floor.max(0.0) {
        return Ok(0.0);
    }
    if is_positive_integer(p) {
        Ok(lambda.powi(p as i32))
    } else {
        Ok(lambda.powf(p))
    }
}

fn powered_spectrum(a: &ComplexMatrix, eig: &HermitianEigensystem, p: f64) -> Result<Vec<f64>> {
    let clip = tolerance::clip_tol(a);
    let floor = tolerance::roundoff_floor(a);
    eig.eigenvalues
        .iter()
        .map(|&l| scalar_power(l, p, clip, floor))
        .collect()
}

/// A^p = U diag(λ_i^p) U† for Hermitian A.
pub fn matrix_power(a: &ComplexMatrix, p: f64) -> Result<ComplexMatrix> {
    check_exponent(p)?;
    let eig = hermitian_eigendecomposition(a)?;
    let powered = powered_spectrum(a, &eig, p)?;
    Ok(eig.with_spectrum(&powered))
}

/// Tr(A^p) evaluated on the spectrum, with the same clipping as
/// [`matrix_power`].
pub fn trace_of_power(a: &ComplexMatrix, p: f64) -> Result<f64> {
    check_exponent(p)?;
    let eig = hermitian_eigendecomposition(a)?;
    Ok(powered_spectrum(a, &eig, p)?.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn real(rows: &[&[f64]]) -> ComplexMatrix {
        ComplexMatrix::from_real_rows(rows).unwrap()
    }

    #[test]
    fn eigenvalue_examples() {
        let e = hermitian_eigendecomposition(&ComplexMatrix::identity(3)).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 1.0, 1.0]);

        let e = hermitian_eigendecomposition(&real(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[1], 1.0, epsilon = 1e-14);

        let e = hermitian_eigendecomposition(&real(&[&[2.0, 1.0], &[1.0, 2.0]])).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[1], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn complex_two_by_two_closed_form() {
        // [[1, 2+i],[2-i, 3]]: eigenvalues 2 ± sqrt(1 + 5)
        let a = ComplexMatrix::from_rows(&[
            &[Complex64::new(1.0, 0.0), Complex64::new(2.0, 1.0)],
            &[Complex64::new(2.0, -1.0), Complex64::new(3.0, 0.0)],
        ])
        .unwrap();
        let e = hermitian_eigendecomposition(&a).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], 2.0 - 6f64.sqrt(), epsilon = 1e-13);
        assert_abs_diff_eq!(e.eigenvalues[1], 2.0 + 6f64.sqrt(), epsilon = 1e-13);
        assert!(e.reconstruct().max_abs_diff(&a) <= 1e-13);
        assert!(e.orthonormality_error() <= 1e-13);
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(
            hermitian_eigendecomposition(&a),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn min_eigenvalue_examples() {
        assert_abs_diff_eq!(min_eigenvalue(&ComplexMatrix::identity(4)).unwrap(), 1.0);
        assert_abs_diff_eq!(
            min_eigenvalue(&real(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap(),
            -1.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            min_eigenvalue(&ComplexMatrix::from_real_diagonal(&[0.1, 0.9])).unwrap(),
            0.1
        );
    }

    #[test]
    fn power_examples() {
        let id = ComplexMatrix::identity(4);
        assert!(matrix_power(&id, 2.7).unwrap().max_abs_diff(&id) <= 1e-14);

        let d = ComplexMatrix::from_real_diagonal(&[4.0, 9.0]);
        let r = matrix_power(&d, 0.5).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[2.0, 3.0])) <= 1e-14);

        // |psi><psi| with psi = (1, i, 1)/sqrt(3)
        let psi = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(1.0, 0.0),
        ];
        let proj = ComplexMatrix::from_fn(3, |i, j| psi[i] * psi[j].conj() / 3.0);
        for p in [0.3, 1.0, 2.5, 7.0] {
            assert!(matrix_power(&proj, p).unwrap().max_abs_diff(&proj) <= 1e-12);
        }
    }

    #[test]
    fn power_rejects_indefinite_fractional() {
        let a = real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert!(matches!(
            matrix_power(&a, 0.5),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
        // integer exponent on an indefinite matrix agrees with multiplication
        let cube = matrix_power(&a, 3.0).unwrap();
        assert!(cube.max_abs_diff(&(&(&a * &a) * &a)) <= 1e-13);
    }

    #[test]
    fn power_clips_round_off_negatives() {
        let a = ComplexMatrix::from_real_diagonal(&[-1e-14, 0.5]);
        let r = matrix_power(&a, 0.5).unwrap();
        assert_eq!(r[(0, 0)].re, 0.0);
        assert_abs_diff_eq!(r[(1, 1)].re, 0.5f64.sqrt(), epsilon = 1e-15);

        // rank-one projector onto (1, 1)/√2: the null eigenvalue comes back
        // as round-off and must not survive λ^0.3
        let projector = ComplexMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap();
        assert_abs_diff_eq!(
            trace_of_power(&projector, 0.3).unwrap(),
            1.0,
            epsilon = 1e-14
        );

        // on a diagonal matrix small entries are exact and kept
        let tiny = ComplexMatrix::from_real_diagonal(&[1e-17, 0.5]);
        assert_eq!(
            trace_of_power(&tiny, 0.5).unwrap(),
            1e-17f64.sqrt() + 0.5f64.sqrt()
        );
    }

    #[test]
    fn power_rejects_bad_exponent() {
        let id = ComplexMatrix::identity(2);
        for p in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                matrix_power(&id, p),
                Err(Error::InvalidExponent { .. })
            ));
        }
    }

    #[test]
    fn zero_matrix_decomposes() {
        let e = hermitian_eigendecomposition(&ComplexMatrix::zeros(3)).unwrap();
        assert_eq!(e.eigenvalues, vec![0.0; 3]);
        assert_eq!(
            matrix_power(&ComplexMatrix::zeros(3), 0.5).unwrap(),
            ComplexMatrix::zeros(3)
        );
    }
}
