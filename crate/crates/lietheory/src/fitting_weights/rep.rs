//! Finite-dimensional representations by explicit operator matrices.

use thiserror::Error;

use crate::exactla::{kernel, QMatrix, Rat, Subspace};
use crate::liecore::LieAlgebra;

/// Errors from building or querying a [`Representation`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{found} operators supplied for an algebra of dimension {expected}")]
    OperatorCount { expected: usize, found: usize },
    #[error("operator {index} is {rows}x{cols}, expected {module_dim}x{module_dim}")]
    OperatorShape {
        index: usize,
        rows: usize,
        cols: usize,
        module_dim: usize,
    },
    #[error("element has {found} coordinates, algebra has dimension {expected}")]
    ElementLength { expected: usize, found: usize },
}

/// A representation of a Lie algebra on `Q^module_dim`, one right-action
/// operator per basis vector. Being a homomorphism is checked by
/// [`Representation::homomorphism_failures`], not the constructor, so
/// defective inputs can be reported coordinate by coordinate.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    module_dim: usize,
    operators: Vec<QMatrix>,
}

impl Representation {
    pub fn new(
        algebra: LieAlgebra,
        module_dim: usize,
        operators: Vec<QMatrix>,
    ) -> Result<Self, RepError> {
        if operators.len() != algebra.dim() {
            return Err(RepError::OperatorCount {
                expected: algebra.dim(),
                found: operators.len(),
            });
        }
        for (index, op) in operators.iter().enumerate() {
            if op.rows() != module_dim || op.cols() != module_dim {
                return Err(RepError::OperatorShape {
                    index,
                    rows: op.rows(),
                    cols: op.cols(),
                    module_dim,
                });
            }
        }
        Ok(Representation {
            algebra,
            module_dim,
            operators,
        })
    }

    /// The adjoint representation: the algebra acting on itself by
    /// `ad`.
    pub fn adjoint(algebra: &LieAlgebra) -> Representation {
        let operators = (0..algebra.dim()).map(|k| algebra.ad_basis(k)).collect();
        Representation {
            algebra: algebra.clone(),
            module_dim: algebra.dim(),
            operators,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn operators(&self) -> &[QMatrix] {
        &self.operators
    }

    pub fn operator(&self, k: usize) -> &QMatrix {
        &self.operators[k]
    }

    /// The operator of an arbitrary element, by linearity.
    pub fn operator_of(&self, x: &[Rat]) -> Result<QMatrix, RepError> {
        if x.len() != self.algebra.dim() {
            return Err(RepError::ElementLength {
                expected: self.algebra.dim(),
                found: x.len(),
            });
        }
        let mut out = QMatrix::zero(self.module_dim, self.module_dim);
        for (k, c) in x.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            out = &out + &self.operators[k].scale(c);
        }
        Ok(out)
    }

    /// Basis pairs `(i, j)` where the bracket fails to map to the
    /// operator commutator. Empty exactly for genuine representations.
    pub fn homomorphism_failures(&self) -> Vec<(usize, usize)> {
        let dim = self.algebra.dim();
        let mut failures = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let lhs = self
                    .operator_of(self.algebra.bracket_basis(i, j))
                    .expect("bracket coordinates have the right length");
                let rhs = &(&self.operators[i] * &self.operators[j])
                    - &(&self.operators[j] * &self.operators[i]);
                if lhs != rhs {
                    failures.push((i, j));
                }
            }
        }
        failures
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_failures().is_empty()
    }

    /// Elements of the algebra acting as zero on the module.
    pub fn kernel_subspace(&self) -> Subspace {
        let dim = self.algebra.dim();
        if dim == 0 {
            return Subspace::zero(0);
        }
        let rows: Vec<Vec<Rat>> = self.operators.iter().map(QMatrix::flatten).collect();
        let stacked = QMatrix::from_rows(rows).expect("flattened operators are rectangular");
        kernel(&stacked)
    }
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Representation({:?} on Q^{})",
            self.algebra, self.module_dim
        )
    }
}
