//! Scalar forms of the inequality: nonnegative grids P_jα (rows j = 1..n,
//! columns α = 1..m), the shifted functions 𝒫₁/𝒫₂, the scalar J(p) and the
//! Shannon mutual information of a joint distribution.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::check_exponent;
use crate::report::InequalityReport;
use crate::tolerance::{DEFAULT_SLACK_REL, NORMALIZATION_TOL};

/// An n×m array of nonnegative finite reals, row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbabilityGrid {
    n: usize,
    m: usize,
    values: Vec<f64>,
    normalized: bool,
}

impl ProbabilityGrid {
    pub fn new(n: usize, m: usize, values: Vec<f64>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidGrid("n and m must be positive".into()));
        }
        if values.len() != n * m {
            return Err(Error::InvalidGrid(format!(
                "expected {} values for a {n}x{m} grid, found {}",
                n * m,
                values.len()
            )));
        }
        if let Some((i, v)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::InvalidGrid(format!(
                "value {i} ({v}) is negative or not finite"
            )));
        }
        let total: f64 = values.iter().sum();
        Ok(Self {
            n,
            m,
            values,
            normalized: (total - 1.0).abs() <= NORMALIZATION_TOL,
        })
    }

    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidGrid("rows have different lengths".into()));
        }
        Self::new(n, m, rows.concat())
    }

    /// Fills an n×m grid from a flat vector, appending zeros when it has
    /// fewer than n·m components.
    pub fn from_vector_padded(values: &[f64], n: usize, m: usize) -> Result<Self> {
        if values.len() > n * m {
            return Err(Error::InvalidGrid(format!(
                "{} values do not fit a {n}x{m} grid",
                values.len()
            )));
        }
        let mut padded = values.to_vec();
        padded.resize(n * m, 0.0);
        Self::new(n, m, padded)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// P_jα with 0-based indices.
    pub fn get(&self, j: usize, alpha: usize) -> f64 {
        self.values[j * self.m + alpha]
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.values[j * self.m..(j + 1) * self.m]
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.row(j).iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<f64> {
        (0..self.m)
            .map(|a| (0..self.n).map(|j| self.get(j, a)).sum())
            .collect()
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }
}

fn power_sum(values: impl IntoIterator<Item = f64>, p: f64) -> f64 {
    values.into_iter().map(|v| v.powf(p)).sum()
}

fn check_shift(x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::InvalidGrid(format!(
            "shift x = {x} must be finite and >= 0"
        )));
    }
    Ok(())
}

/// (lhs, rhs) with lhs = [Σ_α (Σ_j P_jα)^p]^{1/p} and rhs = Σ_j [Σ_α P_jα^p]^{1/p}.
pub fn vector_minkowski_sides(grid: &ProbabilityGrid, p: f64) -> Result<(f64, f64)> {
    check_exponent(p)?;
    let lhs = power_sum(grid.column_sums(), p).powf(1.0 / p);
    let rhs = (0..grid.n)
        .map(|j| power_sum(grid.row(j).iter().copied(), p).powf(1.0 / p))
        .sum();
    Ok((lhs, rhs))
}

/// Report for the unshifted vector inequality.
pub fn verify_vector(grid: &ProbabilityGrid, p: f64) -> Result<InequalityReport> {
    let (lhs, rhs) = vector_minkowski_sides(grid, p)?;
    Ok(InequalityReport::new(
        p,
        0.0,
        grid.n,
        grid.m,
        0,
        lhs,
        rhs,
        DEFAULT_SLACK_REL,
    ))
}

/// 𝒫₁(x, p) = {Σ_α (n·x + Σ_j P_jα)^p}^{1/p}.
pub fn p1_function(grid: &ProbabilityGrid, x: f64, p: f64) -> Result<f64> {
    check_exponent(p)?;
    check_shift(x)?;
    let nx = grid.n as f64 * x;
    Ok(power_sum(grid.column_sums().into_iter().map(|c| nx + c), p).powf(1.0 / p))
}

/// 𝒫₂(x, p) = Σ_j {[(Σ_α P_jα) + m·x]^p}^{1/p}, evaluated literally; the
/// inner powers cancel so this equals Σ_j (R_j + m·x) up to rounding.
pub fn p2_function(grid: &ProbabilityGrid, x: f64, p: f64) -> Result<f64> {
    check_exponent(p)?;
    check_shift(x)?;
    let mx = grid.m as f64 * x;
    Ok(grid
        .row_sums()
        .into_iter()
        .map(|r| (r + mx).powf(p).powf(1.0 / p))
        .sum())
}

/// Σ_j [Σ_α (P_jα + x)^p]^{1/p}: the right-hand side of the matrix
/// inequality applied to diag(P) + x·I. It lies between 𝒫₁ and 𝒫₂.
pub fn p2_diagonal_bound(grid: &ProbabilityGrid, x: f64, p: f64) -> Result<f64> {
    check_exponent(p)?;
    check_shift(x)?;
    Ok((0..grid.n)
        .map(|j| power_sum(grid.row(j).iter().map(|v| v + x), p).powf(1.0 / p))
        .sum())
}

/// Compares 𝒫₁ (lhs) against 𝒫₂ (rhs).
pub fn verify_shifted_scalar(grid: &ProbabilityGrid, x: f64, p: f64) -> Result<InequalityReport> {
    let lhs = p1_function(grid, x, p)?;
    let rhs = p2_function(grid, x, p)?;
    Ok(InequalityReport::new(
        p,
        x,
        grid.n,
        grid.m,
        0,
        lhs,
        rhs,
        DEFAULT_SLACK_REL,
    ))
}

/// J(p) for a normalized grid: rhs − lhs of the vector inequality.
pub fn scalar_correlation_j(grid: &ProbabilityGrid, p: f64) -> Result<f64> {
    check_exponent(p)?;
    if p < 1.0 {
        return Err(Error::ExponentOutOfRange { p });
    }
    if !grid.normalized {
        return Err(Error::NotNormalized { sum: grid.total() });
    }
    let (lhs, rhs) = vector_minkowski_sides(grid, p)?;
    Ok(rhs - lhs)
}

fn xlnx(v: f64) -> f64 {
    if v > 0.0 {
        v * v.ln()
    } else {
        0.0
    }
}

/// I = Σ P ln P − Σ_j R_j ln R_j − Σ_α C_α ln C_α, in nats.
pub fn mutual_information(grid: &ProbabilityGrid) -> Result<f64> {
    if !grid.normalized {
        return Err(Error::NotNormalized { sum: grid.total() });
    }
    let joint: f64 = grid.values.iter().map(|&v| xlnx(v)).sum();
    let rows: f64 = grid.row_sums().into_iter().map(xlnx).sum();
    let cols: f64 = grid.column_sums().into_iter().map(xlnx).sum();
    Ok(joint - rows - cols)
}

/// −Σ w ln w in nats, with 0·ln 0 = 0.
pub fn shannon_entropy(weights: &[f64]) -> Result<f64> {
    if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
        return Err(Error::InvalidGrid(format!(
            "weight {w} is negative or not finite"
        )));
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::NotNormalized { sum });
    }
    Ok(-weights.iter().map(|&w| xlnx(w)).sum::<f64>())
}
