//! Matrix file format: `{"dim": N, "entries": [[re, im], ...]}` with exactly
//! N² row-major entries.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
}

impl From<&ComplexMatrix> for MatrixFile {
    fn from(m: &ComplexMatrix) -> Self {
        Self {
            dim: m.dim(),
            entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

#[derive(Deserialize)]
struct RawFile {
    dim: Value,
    entries: Vec<Value>,
}

fn entry_error(idx: usize, what: &str) -> Error {
    Error::InvalidMatrix(format!("entry {idx}: {what}"))
}

fn parse_entry(idx: usize, v: &Value) -> Result<Complex64> {
    let pair = v
        .as_array()
        .ok_or_else(|| entry_error(idx, "expected a [re, im] pair"))?;
    if pair.len() != 2 {
        return Err(entry_error(
            idx,
            &format!("expected 2 components, found {}", pair.len()),
        ));
    }
    let mut parts = [0.0; 2];
    for (slot, comp) in parts.iter_mut().zip(pair) {
        let x = comp
            .as_f64()
            .ok_or_else(|| entry_error(idx, "component is not a number"))?;
        if !x.is_finite() {
            return Err(entry_error(idx, "component is not finite"));
        }
        *slot = x;
    }
    Ok(Complex64::new(parts[0], parts[1]))
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let raw: RawFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidMatrix(e.to_string()))?;
    let dim = raw
        .dim
        .as_u64()
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::InvalidMatrix("dim must be a positive integer".into()))?
        as usize;
    let expected = dim
        .checked_mul(dim)
        .ok_or_else(|| Error::InvalidMatrix("dim is too large".into()))?;
    if raw.entries.len() != expected {
        return Err(Error::InvalidMatrix(format!(
            "expected {expected} entries for dim {dim}, found {}",
            raw.entries.len()
        )));
    }
    let entries = raw
        .entries
        .iter()
        .enumerate()
        .map(|(i, v)| parse_entry(i, v))
        .collect::<Result<Vec<_>>>()?;
    ComplexMatrix::new(dim, entries)
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidMatrix(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn write_matrix(m: &ComplexMatrix) -> String {
    serde_json::to_string(&MatrixFile::from(m)).expect("matrix serialization cannot fail")
}
