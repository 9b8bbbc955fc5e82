//! Structure-constant presentations of finite-dimensional Lie algebras.
//!
//! An algebra of dimension `n` is a table of brackets `[e_i, e_j]`
//! expressed in the same basis. Validation (antisymmetry and the Jacobi
//! identity) is a separate, reportable step, so a file can be loaded,
//! inspected and rejected with precise coordinates instead of a panic.
//!
//! The adjoint operator follows the row convention of the crate:
//! `ad(x)` is the matrix of `y -> [y, x]`, acting on row vectors from the
//! right. Its `i`-th row is `[e_i, x]`.

use num_traits::Zero;
use thiserror::Error;

use crate::exactla::{canonicalize, kernel, solve_linear, QMatrix, Rat, Subspace};

/// The standard basis row `e_index` of `Q^len`.
pub fn unit_row(len: usize, index: usize) -> Vec<Rat> {
    assert!(index < len, "unit vector index out of range");
    let mut v = vec![Rat::zero(); len];
    v[index] = Rat::from_integer(1.into());
    v
}

/// Errors from constructing or interrogating a [`LieAlgebra`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure constant table has wrong shape: {context}")]
    ShapeMismatch { context: String },
    #[error("bracket index {index} is out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("element has {found} coordinates, algebra has dimension {expected}")]
    ElementLength { expected: usize, found: usize },
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("change of basis matrix is singular")]
    SingularChangeOfBasis,
    #[error("operator is {rows}x{cols}, expected {dim}x{dim}")]
    OperatorShape { rows: usize, cols: usize, dim: usize },
}

/// Outcome of checking antisymmetry and the Jacobi identity on every
/// basis triple. Empty failure lists mean the table is a Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    /// Pairs `(i, j)` with `[e_i, e_j] + [e_j, e_i] != 0`.
    pub antisymmetry_failures: Vec<(usize, usize)>,
    /// Triples `(i, j, k)` where the Jacobi cycle does not vanish.
    pub jacobi_failures: Vec<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry_failures.is_empty() && self.jacobi_failures.is_empty()
    }
}

/// Which descending series to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `S_{k+1} = [S_k, S_k]`.
    Derived,
    /// `S_{k+1} = [S, S_k]`, bracketing with the starting subalgebra.
    LowerCentral,
}

/// Result of testing a square matrix for the Leibniz rule and for being
/// an adjoint operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationAnalysis {
    pub is_derivation: bool,
    /// Basis pairs `(i, j)` where the Leibniz rule fails.
    pub leibniz_failures: Vec<(usize, usize)>,
    /// An element `a` with `ad(a)` equal to the operator, when one
    /// exists (only sought for genuine derivations).
    pub inner_witness: Option<Vec<Rat>>,
}

/// A finite-dimensional Lie algebra over `Q`, given by labelled basis
/// vectors and the full bracket table `table[i][j] = [e_i, e_j]`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    table: Vec<Vec<Vec<Rat>>>,
}

impl LieAlgebra {
    /// Wraps a complete bracket table. Shape is enforced here; the Lie
    /// axioms are checked by [`LieAlgebra::validate`], not the
    /// constructor, so invalid tables can still be inspected.
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<Rat>>>) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if table.len() != dim {
            return Err(AlgebraError::ShapeMismatch {
                context: format!("{} rows for dimension {}", table.len(), dim),
            });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != dim {
                return Err(AlgebraError::ShapeMismatch {
                    context: format!("row {} has {} entries for dimension {}", i, row.len(), dim),
                });
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != dim {
                    return Err(AlgebraError::ShapeMismatch {
                        context: format!(
                            "bracket [{}, {}] has {} coordinates for dimension {}",
                            i,
                            j,
                            v.len(),
                            dim
                        ),
                    });
                }
            }
        }
        Ok(LieAlgebra { labels, table })
    }

    /// Builds the table from sparse bracket data `(i, j, [(k, c)])`
    /// meaning `[e_i, e_j] = sum c * e_k`, completing `[e_j, e_i]`
    /// antisymmetrically. Pairs may repeat; coefficients accumulate.
    pub fn from_sparse_brackets(
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Rat)>)],
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for (i, j, terms) in brackets {
            for &idx in [i, j] {
                if idx >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index: idx, dim });
                }
            }
            for (k, c) in terms {
                if *k >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index: *k, dim });
                }
                table[*i][*j][*k] += c;
                table[*j][*i][*k] -= c;
            }
        }
        LieAlgebra::new(labels, table)
    }

    /// The abelian algebra of the given dimension with zero brackets.
    pub fn abelian(labels: Vec<String>) -> Self {
        let dim = labels.len();
        LieAlgebra {
            table: vec![vec![vec![Rat::zero(); dim]; dim]; dim],
            labels,
        }
    }

    /// Replaces the basis labels, keeping the bracket table.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim() {
            return Err(AlgebraError::ShapeMismatch {
                context: format!(
                    "{} labels for dimension {}",
                    labels.len(),
                    self.dim()
                ),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// `[e_i, e_j]` as stored.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rat] {
        &self.table[i][j]
    }

    /// `[x, y]` by bilinear expansion.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let dim = self.dim();
        assert_eq!(x.len(), dim, "left bracket operand length");
        assert_eq!(y.len(), dim, "right bracket operand length");
        let mut out = vec![Rat::zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let scale = xi * yj;
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &scale * c;
                    }
                }
            }
        }
        out
    }

    /// Checks antisymmetry on all pairs and Jacobi on all triples,
    /// returning every failure rather than the first.
    pub fn validate(&self) -> ValidationReport {
        let dim = self.dim();
        let mut report = ValidationReport::default();
        for i in 0..dim {
            for j in i..dim {
                let violates = (0..dim)
                    .any(|k| !(&self.table[i][j][k] + &self.table[j][i][k]).is_zero());
                if violates {
                    report.antisymmetry_failures.push((i, j));
                }
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    let ei = unit_row(dim, i);
                    let ej = unit_row(dim, j);
                    let ek = unit_row(dim, k);
                    let mut cycle = self.bracket(&self.table[i][j], &ek);
                    for (t, c) in self.bracket(&self.table[j][k], &ei).into_iter().enumerate() {
                        cycle[t] += c;
                    }
                    for (t, c) in self.bracket(&self.table[k][i], &ej).into_iter().enumerate() {
                        cycle[t] += c;
                    }
                    if cycle.iter().any(|c| !c.is_zero()) {
                        report.jacobi_failures.push((i, j, k));
                    }
                }
            }
        }
        report
    }

    /// The adjoint operator of `x`: the matrix of `y -> [y, x]` in the
    /// row convention, so row `i` is `[e_i, x]`.
    pub fn ad(&self, x: &[Rat]) -> Result<QMatrix, AlgebraError> {
        let dim = self.dim();
        if x.len() != dim {
            return Err(AlgebraError::ElementLength {
                expected: dim,
                found: x.len(),
            });
        }
        let mut m = QMatrix::zero(dim, dim);
        for i in 0..dim {
            for (k, xk) in x.iter().enumerate() {
                if xk.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let c = &self.table[i][k][j];
                    if !c.is_zero() {
                        let updated = m.get(i, j) + &(xk * c);
                        m.set(i, j, updated);
                    }
                }
            }
        }
        Ok(m)
    }

    /// `ad(e_k)` for a basis vector, which cannot fail.
    pub fn ad_basis(&self, k: usize) -> QMatrix {
        self.ad(&unit_row(self.dim(), k))
            .expect("basis vector has the right length")
    }

    /// The span of all `[u, v]` with `u` in `U` and `v` in `V`.
    pub fn bracket_subspaces(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let dim = self.dim();
        assert_eq!(u.ambient(), dim, "left subspace lives in the algebra");
        assert_eq!(v.ambient(), dim, "right subspace lives in the algebra");
        let mut vectors = Vec::with_capacity(u.dim() * v.dim());
        for bu in u.basis() {
            for bv in v.basis() {
                vectors.push(self.bracket(bu, bv));
            }
        }
        canonicalize(&vectors, dim).expect("brackets have ambient length")
    }

    /// Whether `S` is closed under the bracket.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.bracket_subspaces(s, s).is_contained_in(s)
    }

    /// Whether `[L, S]` lands back in `S`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.bracket_subspaces(&Subspace::full(self.dim()), s)
            .is_contained_in(s)
    }

    /// The derived or lower central series of a subalgebra, listed from
    /// the subalgebra itself down to the first repeated term. The last
    /// entry is the stable term; it is zero exactly when the subalgebra
    /// is solvable (respectively nilpotent).
    pub fn series(&self, start: &Subspace, kind: SeriesKind) -> Result<Vec<Subspace>, AlgebraError> {
        if !self.is_subalgebra(start) {
            return Err(AlgebraError::NotSubalgebra);
        }
        let mut chain = vec![start.clone()];
        loop {
            let current = chain.last().expect("chain starts nonempty");
            let next = match kind {
                SeriesKind::Derived => self.bracket_subspaces(current, current),
                SeriesKind::LowerCentral => self.bracket_subspaces(start, current),
            };
            if &next == current {
                break;
            }
            chain.push(next);
        }
        Ok(chain)
    }

    /// Solvability by the derived series alone.
    pub fn is_solvable_subalgebra(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        Ok(self
            .series(s, SeriesKind::Derived)?
            .last()
            .expect("series is nonempty")
            .is_zero())
    }

    /// Nilpotency by the lower central series alone.
    pub fn is_nilpotent_subalgebra(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        Ok(self
            .series(s, SeriesKind::LowerCentral)?
            .last()
            .expect("series is nonempty")
            .is_zero())
    }

    /// The derived subalgebra `[L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_subspaces(&full, &full)
    }

    /// Smallest ideal containing `seed`: the fixed point of
    /// `U -> U + [L, U]`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        let full = Subspace::full(self.dim());
        let mut current = seed.clone();
        loop {
            let grown = current.sum(&self.bracket_subspaces(&full, &current));
            if grown == current {
                return current;
            }
            current = grown;
        }
    }

    /// Smallest subalgebra containing `seed`: the fixed point of
    /// `U -> U + [U, U]`.
    pub fn subalgebra_closure(&self, seed: &Subspace) -> Subspace {
        let mut current = seed.clone();
        loop {
            let grown = current.sum(&self.bracket_subspaces(&current, &current));
            if grown == current {
                return current;
            }
            current = grown;
        }
    }

    /// Elements whose adjoint operator vanishes.
    pub fn centre(&self) -> Subspace {
        let dim = self.dim();
        if dim == 0 {
            return Subspace::zero(0);
        }
        let rows: Vec<Vec<Rat>> = (0..dim).map(|k| self.ad_basis(k).flatten()).collect();
        let stacked = QMatrix::from_rows(rows).expect("flattened operators are rectangular");
        kernel(&stacked)
    }

    /// Direct sum with block-diagonal bracket table; labels are
    /// concatenated unchanged.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim();
        let m = other.dim();
        let dim = n + m;
        let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    table[i][j][k] = self.table[i][j][k].clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    table[n + i][n + j][n + k] = other.table[i][j][k].clone();
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        LieAlgebra { labels, table }
    }

    /// The quotient algebra by an ideal. Representatives are the
    /// standard basis vectors at the non-pivot positions of the ideal's
    /// canonical basis; their positions are returned alongside, and
    /// their labels carry over.
    pub fn quotient_by_ideal(
        &self,
        ideal: &Subspace,
    ) -> Result<(LieAlgebra, Vec<usize>), AlgebraError> {
        if !self.is_ideal(ideal) {
            return Err(AlgebraError::NotIdeal);
        }
        let positions = ideal.complement_positions();
        let qdim = positions.len();
        // Coordinates in the quotient: reduce modulo the ideal, then
        // read off the entries at the representative positions.
        let project = |v: &[Rat]| -> Vec<Rat> {
            let reduced = ideal.reduce(v);
            positions.iter().map(|&p| reduced[p].clone()).collect()
        };
        let mut table = vec![vec![vec![Rat::zero(); qdim]; qdim]; qdim];
        for (a, &i) in positions.iter().enumerate() {
            for (b, &j) in positions.iter().enumerate() {
                table[a][b] = project(&self.table[i][j]);
            }
        }
        let labels = positions.iter().map(|&p| self.labels[p].clone()).collect();
        Ok((LieAlgebra { labels, table }, positions))
    }

    /// Rewrites the bracket table in the basis whose `i`-th vector is
    /// row `i` of `p` (expressed in the current basis).
    pub fn change_basis(&self, p: &QMatrix) -> Result<LieAlgebra, AlgebraError> {
        let dim = self.dim();
        if p.rows() != dim || p.cols() != dim {
            return Err(AlgebraError::OperatorShape {
                rows: p.rows(),
                cols: p.cols(),
                dim,
            });
        }
        let inv = p.inverse().ok_or(AlgebraError::SingularChangeOfBasis)?;
        let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let old_coords = self.bracket(p.row(i), p.row(j));
                table[i][j] = inv.apply_row(&old_coords);
            }
        }
        Ok(LieAlgebra {
            labels: self.labels.clone(),
            table,
        })
    }

    /// Tests the Leibniz rule for a square matrix acting on the right
    /// and, for genuine derivations, looks for an element whose adjoint
    /// equals it.
    pub fn derivation_analyze(&self, d: &QMatrix) -> Result<DerivationAnalysis, AlgebraError> {
        let dim = self.dim();
        if d.rows() != dim || d.cols() != dim {
            return Err(AlgebraError::OperatorShape {
                rows: d.rows(),
                cols: d.cols(),
                dim,
            });
        }
        let mut failures = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let lhs = d.apply_row(&self.table[i][j]);
                let mut rhs = self.bracket(d.row(i), &unit_row(dim, j));
                for (t, c) in self.bracket(&unit_row(dim, i), d.row(j)).into_iter().enumerate() {
                    rhs[t] += c;
                }
                if lhs != rhs {
                    failures.push((i, j));
                }
            }
        }
        let is_derivation = failures.is_empty();
        let inner_witness = if is_derivation {
            let rows: Vec<Vec<Rat>> = (0..dim).map(|k| self.ad_basis(k).flatten()).collect();
            let stacked = QMatrix::from_rows(rows).expect("flattened operators are rectangular");
            solve_linear(&stacked, &d.flatten()).expect("dimensions agree by construction")
        } else {
            None
        };
        Ok(DerivationAnalysis {
            is_derivation,
            leibniz_failures: failures,
            inner_witness,
        })
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}, basis [{}])", self.dim(), self.labels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat_int;
    use crate::fixtures;
    use proptest::prelude::*;

    fn v(entries: &[i64]) -> Vec<Rat> {
        entries.iter().map(|&n| rat_int(n)).collect()
    }

    fn span(algebra_dim: usize, rows: &[&[i64]]) -> Subspace {
        canonicalize(&rows.iter().map(|r| v(r)).collect::<Vec<_>>(), algebra_dim).unwrap()
    }

    #[test]
    fn fixture_algebras_validate() {
        for alg in [
            fixtures::sl2(),
            fixtures::so3(),
            fixtures::r2(),
            fixtures::h3(),
            fixtures::n3(),
            fixtures::abelian(4),
        ] {
            let report = alg.validate();
            assert!(report.is_valid(), "{:?} failed validation", alg);
        }
    }

    #[test]
    fn antisymmetry_violation_is_located() {
        // [e0, e1] = e2 = [e1, e0], deliberately symmetric.
        let mut table = vec![vec![vec![Rat::zero(); 3]; 3]; 3];
        table[0][1] = v(&[0, 0, 1]);
        table[1][0] = v(&[0, 0, 1]);
        let alg = LieAlgebra::new(vec!["a".into(), "b".into(), "c".into()], table).unwrap();
        let report = alg.validate();
        assert_eq!(report.antisymmetry_failures, vec![(0, 1)]);
    }

    #[test]
    fn jacobi_violation_is_located() {
        let alg = LieAlgebra::from_sparse_brackets(
            vec!["a".into(), "b".into(), "c".into()],
            &[
                (0, 1, vec![(2, rat_int(1))]),
                (0, 2, vec![(0, rat_int(1))]),
                (1, 2, vec![(1, rat_int(1))]),
            ],
        )
        .unwrap();
        let report = alg.validate();
        assert!(report.antisymmetry_failures.is_empty());
        assert_eq!(report.jacobi_failures, vec![(0, 1, 2)]);
    }

    #[test]
    fn adjoint_of_sl2_semisimple_element() {
        // Basis (e, h, f). With ad(x): y -> [y, x], the matrix of ad(h)
        // is diagonal with entries (-2, 0, 2).
        let sl2 = fixtures::sl2();
        let ad_h = sl2.ad(&v(&[0, 1, 0])).unwrap();
        let mut expected = QMatrix::zero(3, 3);
        expected.set(0, 0, rat_int(-2));
        expected.set(2, 2, rat_int(2));
        assert_eq!(ad_h, expected);
    }

    #[test]
    fn adjoint_of_so3_generator() {
        let so3 = fixtures::so3();
        let ad_x = so3.ad_basis(0);
        // y -> -z, z -> y, x -> 0.
        assert_eq!(ad_x.row(0), &v(&[0, 0, 0])[..]);
        assert_eq!(ad_x.row(1), &v(&[0, 0, -1])[..]);
        assert_eq!(ad_x.row(2), &v(&[0, 1, 0])[..]);
    }

    #[test]
    fn adjoint_checks_element_length() {
        assert!(matches!(
            fixtures::sl2().ad(&v(&[1, 0])),
            Err(AlgebraError::ElementLength { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn derived_subalgebras_of_fixtures() {
        assert!(fixtures::sl2().derived_subalgebra().is_full());
        assert_eq!(fixtures::r2().derived_subalgebra(), span(2, &[&[0, 1]]));
        assert!(fixtures::abelian(3).derived_subalgebra().is_zero());
    }

    #[test]
    fn series_of_heisenberg_and_r2() {
        let h3 = fixtures::h3();
        let full3 = Subspace::full(3);
        let chain = h3.series(&full3, SeriesKind::LowerCentral).unwrap();
        assert_eq!(
            chain,
            vec![full3.clone(), span(3, &[&[0, 0, 1]]), Subspace::zero(3)]
        );

        let r2 = fixtures::r2();
        let full2 = Subspace::full(2);
        let derived = r2.series(&full2, SeriesKind::Derived).unwrap();
        assert_eq!(
            derived,
            vec![full2.clone(), span(2, &[&[0, 1]]), Subspace::zero(2)]
        );
        // The lower central series stalls at span{y}: r2 is solvable but
        // not nilpotent.
        let lower = r2.series(&full2, SeriesKind::LowerCentral).unwrap();
        assert_eq!(lower, vec![full2, span(2, &[&[0, 1]])]);
        assert!(r2.is_solvable_subalgebra(&Subspace::full(2)).unwrap());
        assert!(!r2.is_nilpotent_subalgebra(&Subspace::full(2)).unwrap());
    }

    #[test]
    fn derived_series_of_sl2_is_stable_at_the_top() {
        let sl2 = fixtures::sl2();
        let full = Subspace::full(3);
        let chain = sl2.series(&full, SeriesKind::Derived).unwrap();
        assert_eq!(chain, vec![full]);
        assert!(!sl2.is_solvable_subalgebra(&Subspace::full(3)).unwrap());
    }

    #[test]
    fn series_rejects_non_subalgebras() {
        // span{e, f} in sl2 is not closed: [e, f] = h.
        let bad = span(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(
            fixtures::sl2().series(&bad, SeriesKind::Derived),
            Err(AlgebraError::NotSubalgebra)
        );
    }

    #[test]
    fn ideal_closures() {
        let sl2 = fixtures::sl2();
        assert!(sl2.ideal_closure(&span(3, &[&[1, 0, 0]])).is_full());

        let h3 = fixtures::h3();
        let z = span(3, &[&[0, 0, 1]]);
        assert_eq!(h3.ideal_closure(&z), z);

        let r2 = fixtures::r2();
        assert!(r2.ideal_closure(&span(2, &[&[1, 0]])).is_full());
        assert_eq!(r2.ideal_closure(&span(2, &[&[0, 1]])), span(2, &[&[0, 1]]));
    }

    #[test]
    fn centres_of_fixtures() {
        assert!(fixtures::sl2().centre().is_zero());
        assert_eq!(fixtures::h3().centre(), span(3, &[&[0, 0, 1]]));
        assert!(fixtures::abelian(2).centre().is_full());
    }

    #[test]
    fn direct_sum_blocks_commute() {
        let sum = fixtures::h3().direct_sum(&fixtures::abelian(1));
        assert_eq!(sum.dim(), 4);
        let report = sum.validate();
        assert!(report.is_valid());
        // Cross brackets vanish and the centre picks up both z and the
        // abelian line.
        assert_eq!(sum.bracket(&v(&[1, 0, 0, 0]), &v(&[0, 0, 0, 1])), v(&[0, 0, 0, 0]));
        assert_eq!(sum.centre(), span(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
        // Each summand sits inside the sum as an ideal.
        assert!(sum.is_ideal(&span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])));
        assert!(sum.is_ideal(&span(4, &[&[0, 0, 0, 1]])));
    }

    #[test]
    fn quotient_of_heisenberg_by_centre_is_abelian() {
        let h3 = fixtures::h3();
        let z = span(3, &[&[0, 0, 1]]);
        let (q, positions) = h3.quotient_by_ideal(&z).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(positions, vec![0, 1]);
        assert!(q.validate().is_valid());
        assert!(q.derived_subalgebra().is_zero());
    }

    #[test]
    fn quotient_rejects_non_ideals() {
        let sl2 = fixtures::sl2();
        let e_line = span(3, &[&[1, 0, 0]]);
        assert_eq!(sl2.quotient_by_ideal(&e_line), Err(AlgebraError::NotIdeal));
    }

    #[test]
    fn quotient_by_zero_is_the_algebra_itself() {
        let sl2 = fixtures::sl2();
        let (q, positions) = sl2.quotient_by_ideal(&Subspace::zero(3)).unwrap();
        assert_eq!(positions, vec![0, 1, 2]);
        assert_eq!(q, sl2);
    }

    #[test]
    fn change_basis_preserves_structure() {
        let sl2 = fixtures::sl2();
        // Swap e and f.
        let p = QMatrix::from_rows(vec![v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[1, 0, 0])]).unwrap();
        let swapped = sl2.change_basis(&p).unwrap();
        assert!(swapped.validate().is_valid());
        assert!(swapped.centre().is_zero());
        assert!(swapped.derived_subalgebra().is_full());
        // In the swapped order (f, h, e), ad(h) flips sign pattern.
        let ad_h = swapped.ad(&v(&[0, 1, 0])).unwrap();
        assert_eq!(ad_h.get(0, 0), &rat_int(2));
        assert_eq!(ad_h.get(2, 2), &rat_int(-2));
    }

    #[test]
    fn change_basis_rejects_singular_matrices() {
        let p = QMatrix::zero(3, 3);
        assert_eq!(
            fixtures::sl2().change_basis(&p),
            Err(AlgebraError::SingularChangeOfBasis)
        );
    }

    #[test]
    fn adjoint_operators_are_derivations_with_witnesses() {
        let sl2 = fixtures::sl2();
        let h = v(&[0, 1, 0]);
        let analysis = sl2.derivation_analyze(&sl2.ad(&h).unwrap()).unwrap();
        assert!(analysis.is_derivation);
        // sl2 has trivial centre, so the witness is unique.
        assert_eq!(analysis.inner_witness, Some(h));
    }

    #[test]
    fn non_adjoint_derivation_of_r2() {
        // x -> 0, y -> y is the adjoint of -x.
        let d = QMatrix::from_rows(vec![v(&[0, 0]), v(&[0, 1])]).unwrap();
        let analysis = fixtures::r2().derivation_analyze(&d).unwrap();
        assert!(analysis.is_derivation);
        assert_eq!(analysis.inner_witness, Some(v(&[-1, 0])));
    }

    #[test]
    fn zero_operator_on_heisenberg_is_a_central_adjoint() {
        let h3 = fixtures::h3();
        let analysis = h3.derivation_analyze(&QMatrix::zero(3, 3)).unwrap();
        assert!(analysis.is_derivation);
        let witness = analysis.inner_witness.unwrap();
        assert!(h3.ad(&witness).unwrap().is_zero());
    }

    #[test]
    fn identity_is_not_a_derivation_of_sl2() {
        let analysis = fixtures::sl2()
            .derivation_analyze(&QMatrix::identity(3))
            .unwrap();
        assert!(!analysis.is_derivation);
        assert!(!analysis.leibniz_failures.is_empty());
        assert_eq!(analysis.inner_witness, None);
    }

    prop_compose! {
        fn arb_vec3()(entries in proptest::collection::vec(-6i64..=6, 3)) -> Vec<Rat> {
            entries.into_iter().map(rat_int).collect()
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ad_is_a_homomorphism_into_commutators(x in arb_vec3(), y in arb_vec3()) {
            // ad([x, y]) = ad(x) ad(y) - ad(y) ad(x) for the right action.
            for alg in [fixtures::sl2(), fixtures::so3(), fixtures::h3()] {
                let ad_bracket = alg.ad(&alg.bracket(&x, &y)).unwrap();
                let ax = alg.ad(&x).unwrap();
                let ay = alg.ad(&y).unwrap();
                let commutator = &(&ax * &ay) - &(&ay * &ax);
                prop_assert_eq!(ad_bracket, commutator);
            }
        }

        #[test]
        fn bracket_is_antisymmetric(x in arb_vec3(), y in arb_vec3()) {
            for alg in [fixtures::sl2(), fixtures::so3(), fixtures::h3()] {
                let xy = alg.bracket(&x, &y);
                let yx = alg.bracket(&y, &x);
                let sum: Vec<Rat> = xy.iter().zip(&yx).map(|(a, b)| a + b).collect();
                prop_assert!(sum.iter().all(Rat::is_zero));
            }
        }

        #[test]
        fn adjoints_satisfy_leibniz(x in arb_vec3()) {
            for alg in [fixtures::sl2(), fixtures::so3(), fixtures::h3()] {
                let analysis = alg.derivation_analyze(&alg.ad(&x).unwrap()).unwrap();
                prop_assert!(analysis.is_derivation);
                let witness = analysis.inner_witness.expect("adjoints are inner");
                prop_assert_eq!(alg.ad(&witness).unwrap(), alg.ad(&x).unwrap());
            }
        }
    }
}
