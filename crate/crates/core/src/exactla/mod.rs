//! Exact linear algebra over the rationals and prime fields, plus integer
//! normal forms.

mod integer;
mod matrix;
mod scalar;

use thiserror::Error;

pub use integer::{IntMatrix, IntPolynomial};
pub use matrix::{Echelon, Matrix};
pub use scalar::{Field, Fp, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse scalar {0:?}")]
pub struct ScalarParseError(pub String);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("result is not integral")]
    NonIntegral,
}

/// Row-major rendering of a matrix as scalar strings.
pub fn matrix_to_strings<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

pub fn matrix_from_strings<F: Field>(
    rows: usize,
    cols: usize,
    entries: &[Vec<String>],
) -> Result<Matrix<F>, ScalarParseError> {
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        return Err(ScalarParseError(format!("expected a {rows}x{cols} matrix")));
    }
    let data = entries
        .iter()
        .flatten()
        .map(|s| F::parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_vec(rows, cols, data))
}
