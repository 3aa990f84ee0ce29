//! On-disk matrix format and loading helpers.
//!
//! A matrix file is a single JSON document:
//!
//! ```json
//! {
//!   "dim": 8,
//!   "basis": "ABC",
//!   "label": "ghz",
//!   "entries": [[[0.5, 0.0], ...], ...]
//! }
//! ```
//!
//! `entries[r][c]` is the `[re, im]` pair of the row-major entry.
//! `basis` records the index convention: `"ABC"` (8x8, row `4i + 2j + k`)
//! or `"XY"` (4x4, row `2m + n`). Reals are written in serde_json's
//! shortest round-trip decimal form, so serialize/deserialize preserves
//! every entry bit for bit.
//!
//! Loading a file as a state validates it (tolerance 1e-8, covering files
//! that were hand-edited or truncated), then symmetrizes and rescales the
//! trace to absorb serialization slack before the strict validation that
//! every in-memory density matrix carries.

use std::io::Read;

use serde::{Deserialize, Serialize};

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::{is_density_matrix, DensityMatrix4, DensityMatrix8, SquareMatrix};

/// Validation tolerance applied to matrices read from disk.
pub const FILE_VALIDATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub entries: Vec<Vec<[f64; 2]>>,
}

fn basis_for_dim(dim: usize) -> &'static str {
    match dim {
        8 => "ABC",
        4 => "XY",
        _ => unreachable!("matrix files are written for dims 4 and 8"),
    }
}

impl MatrixFile {
    pub fn from_matrix(m: &SquareMatrix, label: Option<String>) -> Self {
        let dim = m.dim();
        let entries = (0..dim)
            .map(|r| (0..dim).map(|c| [m.get(r, c).re, m.get(r, c).im]).collect())
            .collect();
        MatrixFile {
            dim,
            basis: basis_for_dim(dim).to_string(),
            label,
            entries,
        }
    }

    pub fn to_matrix(&self) -> Result<SquareMatrix, Error> {
        if self.dim != 4 && self.dim != 8 {
            return Err(Error::InvalidInput(format!(
                "matrix files carry dim 4 or 8, got {}",
                self.dim
            )));
        }
        let expected_basis = basis_for_dim(self.dim);
        if self.basis != expected_basis {
            return Err(Error::InvalidInput(format!(
                "dim {} expects basis tag {expected_basis:?}, got {:?}",
                self.dim, self.basis
            )));
        }
        if self.entries.len() != self.dim || self.entries.iter().any(|row| row.len() != self.dim) {
            return Err(Error::InvalidInput(format!(
                "entry array does not have shape {0}x{0}",
                self.dim
            )));
        }
        let flat = self
            .entries
            .iter()
            .flatten()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        SquareMatrix::from_entries(self.dim, flat)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix files serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Reads a matrix file from a path, `-` meaning standard input.
pub fn read_matrix_file(path: &str) -> Result<MatrixFile, Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    MatrixFile::from_json(&text)
}

/// Writes a matrix file to a path, or to standard output when `out` is
/// `None`.
pub fn write_matrix_file(file: &MatrixFile, out: Option<&str>) -> Result<(), Error> {
    let mut text = file.to_json();
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Symmetrize and rescale the trace to absorb slack in hand-written
/// files; applied only when the raw matrix does not already pass strict
/// validation, so freshly serialized states load back bit for bit.
fn cleaned(m: &SquareMatrix) -> SquareMatrix {
    let sym = m.symmetrized();
    let trace = sym.trace().re;
    sym.scale(1.0 / trace)
}

fn gate(m: &SquareMatrix, want_dim: usize) -> Result<(), Error> {
    if m.dim() != want_dim {
        return Err(Error::InvalidInput(format!(
            "expected a {want_dim}x{want_dim} state, file carries dim {}",
            m.dim()
        )));
    }
    let check = is_density_matrix(m, FILE_VALIDATION_TOL);
    if !check.passed() {
        return Err(Error::NotDensityMatrix(check));
    }
    Ok(())
}

/// Interprets a matrix file as a three-qubit state.
pub fn state_from_file(file: &MatrixFile) -> Result<DensityMatrix8, Error> {
    let m = file.to_matrix()?;
    gate(&m, 8)?;
    DensityMatrix8::new(m.clone()).or_else(|_| DensityMatrix8::new(cleaned(&m)))
}

/// Interprets a matrix file as a two-qubit state (an embedding input or a
/// stored reduction).
pub fn reduction_from_file(file: &MatrixFile) -> Result<DensityMatrix4, Error> {
    let m = file.to_matrix()?;
    gate(&m, 4)?;
    DensityMatrix4::new(m.clone()).or_else(|_| DensityMatrix4::new(cleaned(&m)))
}
