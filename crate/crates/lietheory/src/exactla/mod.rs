//! Exact linear algebra over the rationals.
//!
//! Dense matrices of `BigRational` entries, row-reduced canonical
//! subspaces, and characteristic polynomials with rational root
//! extraction. The row convention is used throughout: vectors are rows,
//! operators act on the right, and the kernel of `A` is the space of rows
//! `x` with `x * A = 0`.

mod matrix;
mod poly;
mod rational;
mod subspace;

pub use matrix::QMatrix;
pub use poly::{char_poly, char_poly_with_rational_roots, CharPolyFactors, Polynomial};
pub use rational::{format_rational, parse_rational, rat, rat_int, Rat, RationalParseError};
pub use subspace::{canonicalize, kernel, solve_linear, Subspace};

use thiserror::Error;

/// Errors raised by the exact linear algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// Two objects that must agree in dimension do not.
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },
    /// A matrix constructor was given ragged row data.
    #[error("ragged rows: row {row} has length {found}, expected {expected}")]
    RaggedRows {
        row: usize,
        found: usize,
        expected: usize,
    },
}
