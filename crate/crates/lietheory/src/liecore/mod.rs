//! Lie algebras over `Q` presented by structure constants.

mod algebra;

pub use algebra::{
    unit_row, AlgebraError, DerivationAnalysis, LieAlgebra, SeriesKind, ValidationReport,
};
