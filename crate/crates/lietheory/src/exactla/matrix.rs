//! Dense rational matrices.
//!
//! Row convention: a vector is a row, an operator acts on the right, and
//! row `i` of an operator matrix is the image of the `i`-th basis vector.
//! Sizes here are small, so everything is a dense `Vec<Rat>` and the
//! algorithms are the classical ones.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rat;
use super::LinalgError;

/// A dense `rows x cols` matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl QMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    /// The `n x n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from row data, demanding rectangular input.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(LinalgError::RaggedRows {
                    row: i,
                    found: row.len(),
                    expected: ncols,
                });
            }
        }
        Ok(QMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose `(i, j)` entry is `f(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.entries[i * self.cols + j] = value;
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// All rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries, left to right and top to bottom.
    pub fn flatten(&self) -> Vec<Rat> {
        self.entries.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    /// The image `x * self` of a row vector under this operator.
    pub fn apply_row(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.rows, "row vector length must match row count");
        let mut out = vec![Rat::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += xi * self.get(i, j);
            }
        }
        out
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rat) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Matrix power by repeated squaring; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> QMatrix {
        assert!(self.is_square(), "matrix power needs a square matrix");
        let mut result = QMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square(), "trace needs a square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Glues matrices side by side; all operands must agree in row count.
    pub fn hstack(blocks: &[&QMatrix]) -> QMatrix {
        assert!(!blocks.is_empty(), "hstack of no blocks");
        let rows = blocks[0].rows;
        assert!(
            blocks.iter().all(|b| b.rows == rows),
            "hstack blocks must agree in row count"
        );
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = QMatrix::zero(rows, cols);
        for i in 0..rows {
            let mut offset = 0;
            for b in blocks {
                for j in 0..b.cols {
                    out.set(i, offset + j, b.get(i, j).clone());
                }
                offset += b.cols;
            }
        }
        out
    }

    /// Stacks matrices vertically; all operands must agree in column count.
    pub fn vstack(blocks: &[&QMatrix]) -> QMatrix {
        assert!(!blocks.is_empty(), "vstack of no blocks");
        let cols = blocks[0].cols;
        assert!(
            blocks.iter().all(|b| b.cols == cols),
            "vstack blocks must agree in column count"
        );
        let entries = blocks
            .iter()
            .flat_map(|b| b.entries.iter().cloned())
            .collect();
        QMatrix {
            rows: blocks.iter().map(|b| b.rows).sum(),
            cols,
            entries,
        }
    }

    /// Determinant by Gaussian elimination with exact pivoting.
    pub fn determinant(&self) -> Rat {
        assert!(self.is_square(), "determinant needs a square matrix");
        let n = self.rows;
        let mut work = self.to_rows();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !work[r][col].is_zero()) {
                Some(r) => r,
                None => return Rat::zero(),
            };
            if pivot_row != col {
                work.swap(pivot_row, col);
                det = -det;
            }
            let pivot = work[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if work[r][col].is_zero() {
                    continue;
                }
                let factor = &work[r][col] / &pivot;
                for c in col..n {
                    let delta = &factor * &work[col][c];
                    work[r][c] -= delta;
                }
            }
        }
        det
    }

    /// Exact inverse, or `None` when the matrix is singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert!(self.is_square(), "inverse needs a square matrix");
        let n = self.rows;
        let mut work: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                for j in 0..n {
                    row.push(if i == j { Rat::one() } else { Rat::zero() });
                }
                row
            })
            .collect();
        let pivots = super::subspace::rref(&mut work);
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return None;
        }
        Some(QMatrix::from_fn(n, n, |i, j| work[i][n + j].clone()))
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in +");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in -");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "inner dimension mismatch in matrix product"
        );
        let mut out = QMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let delta = a * b;
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + delta);
                }
            }
        }
        out
    }
}
