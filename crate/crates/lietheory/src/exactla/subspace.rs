//! Canonical subspaces of `Q^n` and row-convention linear solving.
//!
//! A subspace is stored as the reduced row-echelon basis of its span.
//! That form is unique, so two [`Subspace`] values are equal exactly when
//! they describe the same subspace, and `==` is the right equality test
//! everywhere downstream.

use std::fmt;

use num_traits::Zero;

use super::matrix::QMatrix;
use super::rational::Rat;
use super::LinalgError;

/// Reduced row-echelon form in place. Returns the pivot columns in order;
/// after the call, row `k` has its pivot (a one) in column `pivots[k]`,
/// pivot columns are zero elsewhere, and zero rows sit at the bottom.
pub(crate) fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let pivot_row = match (rank..nrows).find(|&i| !rows[i][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].clone().recip();
        for c in col..ncols {
            let scaled = &rows[rank][c] * &inv;
            rows[rank][c] = scaled;
        }
        for i in 0..nrows {
            if i == rank || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for c in col..ncols {
                let delta = &factor * &rows[rank][c];
                let updated = &rows[i][c] - &delta;
                rows[i][c] = updated;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// A subspace of `Q^ambient`, held as a reduced row-echelon basis with no
/// zero rows. Equality of values is equality of subspaces.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

/// Canonicalizes a spanning set into a [`Subspace`]. The empty set (and
/// any set of zero vectors) gives the zero subspace.
pub fn canonicalize(vectors: &[Vec<Rat>], ambient: usize) -> Result<Subspace, LinalgError> {
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != ambient {
            return Err(LinalgError::DimensionMismatch {
                context: format!(
                    "vector {} has length {}, ambient dimension is {}",
                    i,
                    v.len(),
                    ambient
                ),
            });
        }
    }
    let mut rows: Vec<Vec<Rat>> = vectors.to_vec();
    let pivots = rref(&mut rows);
    rows.truncate(pivots.len());
    Ok(Subspace {
        ambient,
        basis: rows,
        pivots,
    })
}

impl Subspace {
    /// The zero subspace of `Q^ambient`.
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// All of `Q^ambient`.
    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: QMatrix::identity(ambient).to_rows(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalizes a spanning set; see [`canonicalize`].
    pub fn from_vectors(vectors: &[Vec<Rat>], ambient: usize) -> Result<Self, LinalgError> {
        canonicalize(vectors, ambient)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical basis rows, in pivot order.
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The canonical basis as a `dim x ambient` matrix.
    pub fn basis_matrix(&self) -> QMatrix {
        QMatrix::from_rows(self.basis.clone()).expect("canonical basis is rectangular")
    }

    /// Subtracts off the pivot components of `v`; the result is zero
    /// exactly when `v` lies in this subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient");
        let mut rem = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if rem[p].is_zero() {
                continue;
            }
            let factor = rem[p].clone();
            for (c, entry) in row.iter().enumerate() {
                if !entry.is_zero() {
                    let delta = &factor * entry;
                    let updated = &rem[c] - &delta;
                    rem[c] = updated;
                }
            }
        }
        rem
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` is
    /// outside the subspace. Because the basis is reduced row-echelon,
    /// the coordinates are read off at the pivot positions.
    pub fn coordinates_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The ambient vector with the given coordinates in the canonical
    /// basis.
    pub fn lift(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.dim(), "coordinate length must match dim");
        let mut out = vec![Rat::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (j, entry) in row.iter().enumerate() {
                out[j] += c * entry;
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in sum");
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        canonicalize(&vectors, self.ambient).expect("basis vectors have ambient length")
    }

    /// Intersection via the kernel of the stacked basis matrices: a zero
    /// combination `x * A + y * B = 0` exhibits `x * A` as a vector of
    /// the intersection, and all of them arise this way.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in intersect");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let stacked = QMatrix::vstack(&[&self.basis_matrix(), &other.basis_matrix()]);
        let relations = kernel(&stacked);
        let vectors: Vec<Vec<Rat>> = relations
            .basis()
            .iter()
            .map(|z| {
                let mut v = vec![Rat::zero(); self.ambient];
                for (c, row) in z[..self.dim()].iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (j, entry) in row.iter().enumerate() {
                        v[j] += c * entry;
                    }
                }
                v
            })
            .collect();
        canonicalize(&vectors, self.ambient).expect("intersection vectors have ambient length")
    }

    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in containment");
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Restricts a right-action operator to this subspace, expressing the
    /// image of each basis vector in basis coordinates. `None` when the
    /// subspace is not invariant under `op`.
    pub fn restrict_right_action(&self, op: &QMatrix) -> Option<QMatrix> {
        assert_eq!(op.rows(), self.ambient, "operator must act on the ambient space");
        assert!(op.is_square(), "restriction needs a square operator");
        let mut rows = Vec::with_capacity(self.dim());
        for v in &self.basis {
            rows.push(self.coordinates_of(&op.apply_row(v))?);
        }
        Some(QMatrix::from_rows(rows).expect("coordinate rows are rectangular"))
    }

    /// Indices of the standard basis vectors not hit by a pivot; these
    /// complete the canonical basis to a basis of the ambient space.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut pivot_iter = self.pivots.iter().peekable();
        for j in 0..self.ambient {
            if pivot_iter.peek() == Some(&&j) {
                pivot_iter.next();
            } else {
                out.push(j);
            }
        }
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of Q^{})", self.dim(), self.ambient)?;
        for row in &self.basis {
            let parts: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, " [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// The kernel `{x : x * A = 0}` of a right-action operator, as a
/// canonical subspace of `Q^rows`.
pub fn kernel(a: &QMatrix) -> Subspace {
    let unknowns = a.rows();
    let mut system = a.transpose().to_rows();
    let pivots = rref(&mut system);
    let mut is_pivot = vec![false; unknowns];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for free in 0..unknowns {
        if is_pivot[free] {
            continue;
        }
        let mut x = vec![Rat::zero(); unknowns];
        x[free] = Rat::from_integer(1.into());
        for (row, &p) in system.iter().zip(&pivots) {
            if !row[free].is_zero() {
                x[p] = -row[free].clone();
            }
        }
        vectors.push(x);
    }
    canonicalize(&vectors, unknowns).expect("kernel vectors have ambient length")
}

/// Solves `x * A = b` exactly. Returns `Ok(None)` when the system is
/// inconsistent; free variables in an underdetermined system are set to
/// zero, so the answer is deterministic.
pub fn solve_linear(a: &QMatrix, b: &[Rat]) -> Result<Option<Vec<Rat>>, LinalgError> {
    if b.len() != a.cols() {
        return Err(LinalgError::DimensionMismatch {
            context: format!(
                "right-hand side has length {}, operator has {} columns",
                b.len(),
                a.cols()
            ),
        });
    }
    let unknowns = a.rows();
    // Each column of A is one linear equation in the entries of x.
    let mut system: Vec<Vec<Rat>> = (0..a.cols())
        .map(|j| {
            let mut row: Vec<Rat> = (0..unknowns).map(|i| a.get(i, j).clone()).collect();
            row.push(b[j].clone());
            row
        })
        .collect();
    let pivots = rref(&mut system);
    if pivots.contains(&unknowns) {
        return Ok(None);
    }
    let mut x = vec![Rat::zero(); unknowns];
    for (row, &p) in system.iter().zip(&pivots) {
        x[p] = row[unknowns].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::super::rational::{rat, rat_int};
    use super::*;
    use proptest::prelude::*;

    fn v(entries: &[i64]) -> Vec<Rat> {
        entries.iter().map(|&n| rat_int(n)).collect()
    }

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| v(r)).collect()).unwrap()
    }

    #[test]
    fn canonical_basis_of_plane() {
        let s = canonicalize(&[v(&[0, 1, 0]), v(&[1, 1, 0])], 3).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert_eq!(s.pivots(), &[0, 1]);
    }

    #[test]
    fn empty_set_gives_zero_subspace() {
        let s = canonicalize(&[], 3).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.ambient(), 3);
    }

    #[test]
    fn dependent_vectors_collapse() {
        let s = canonicalize(&[v(&[1, 2]), v(&[2, 4]), v(&[0, 0])], 2).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis(), &[vec![rat_int(1), rat_int(2)]]);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let err = canonicalize(&[v(&[1, 2, 3])], 2);
        assert!(matches!(err, Err(LinalgError::DimensionMismatch { .. })));
    }

    #[test]
    fn containment_and_coordinates() {
        let s = canonicalize(&[v(&[1, 0, 1]), v(&[0, 1, 1])], 3).unwrap();
        assert!(s.contains(&v(&[2, 3, 5])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert_eq!(s.coordinates_of(&v(&[2, 3, 5])), Some(v(&[2, 3])));
        assert_eq!(s.coordinates_of(&v(&[0, 0, 1])), None);
        assert_eq!(s.lift(&v(&[2, 3])), v(&[2, 3, 5]));
    }

    #[test]
    fn sum_and_intersection() {
        let xy = canonicalize(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3).unwrap();
        let diag = canonicalize(&[v(&[1, 1, 0])], 3).unwrap();
        assert_eq!(xy.sum(&diag), xy);
        assert_eq!(xy.intersect(&diag), diag);

        let yz = canonicalize(&[v(&[0, 1, 0]), v(&[0, 0, 1])], 3).unwrap();
        let line = xy.intersect(&yz);
        assert_eq!(line, canonicalize(&[v(&[0, 1, 0])], 3).unwrap());
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&m(&[&[0, 1], &[0, 0]]));
        assert_eq!(k, canonicalize(&[v(&[0, 1])], 2).unwrap());
        assert!(kernel(&QMatrix::identity(3)).is_zero());
        assert!(kernel(&QMatrix::zero(3, 3)).is_full());
    }

    #[test]
    fn solve_diagonal_system() {
        let a = m(&[&[2, 0], &[0, 4]]);
        let x = solve_linear(&a, &v(&[1, 1])).unwrap().unwrap();
        assert_eq!(x, vec![rat(1, 2), rat(1, 4)]);
    }

    #[test]
    fn solve_reports_inconsistency() {
        let a = m(&[&[1, 0], &[1, 0]]);
        assert_eq!(solve_linear(&a, &v(&[0, 1])).unwrap(), None);
    }

    #[test]
    fn solve_sets_free_variables_to_zero() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let x = solve_linear(&a, &v(&[2, 3])).unwrap().unwrap();
        assert_eq!(x, v(&[2, 3, 0]));
    }

    #[test]
    fn solve_checks_dimensions() {
        let a = m(&[&[1, 0], &[0, 1]]);
        assert!(matches!(
            solve_linear(&a, &v(&[1, 2, 3])),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn complement_positions_fill_out_the_space() {
        let s = canonicalize(&[v(&[1, 0, 2]), v(&[0, 0, 0]), v(&[0, 0, 1])], 3).unwrap();
        assert_eq!(s.complement_positions(), vec![1]);
        assert_eq!(Subspace::full(3).complement_positions(), Vec::<usize>::new());
        assert_eq!(Subspace::zero(2).complement_positions(), vec![0, 1]);
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        // e1 -> e2 -> 0, restricted to span{e1, e2} inside Q^3.
        let op = m(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 5]]);
        let s = canonicalize(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3).unwrap();
        let restricted = s.restrict_right_action(&op).unwrap();
        assert_eq!(restricted, m(&[&[0, 1], &[0, 0]]));

        let tilted = canonicalize(&[v(&[1, 0, 1])], 3).unwrap();
        assert_eq!(tilted.restrict_right_action(&op), None);
    }

    prop_compose! {
        fn arb_rat()(numer in -6i64..=6, denom in 1i64..=3) -> Rat {
            rat(numer, denom)
        }
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec(proptest::collection::vec(arb_rat(), cols), rows)
            .prop_map(|data| QMatrix::from_rows(data).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_plus_nullity_is_row_count(a in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| arb_matrix(r, c))) {
            let rank = canonicalize(&a.to_rows(), a.cols()).unwrap().dim();
            let nullity = kernel(&a).dim();
            prop_assert_eq!(rank + nullity, a.rows());
        }

        #[test]
        fn canonicalize_is_idempotent(a in arb_matrix(4, 4)) {
            let s = canonicalize(&a.to_rows(), 4).unwrap();
            let again = canonicalize(s.basis(), 4).unwrap();
            prop_assert_eq!(s, again);
        }

        #[test]
        fn span_ignores_presentation(a in arb_matrix(3, 4)) {
            // Augmenting a spanning set with sums of its members cannot
            // change the span.
            let mut vectors = a.to_rows();
            let extra: Vec<Rat> = (0..4)
                .map(|j| vectors.iter().map(|r| r[j].clone()).sum())
                .collect();
            vectors.push(extra);
            let s1 = canonicalize(&a.to_rows(), 4).unwrap();
            let s2 = canonicalize(&vectors, 4).unwrap();
            prop_assert_eq!(s1, s2);
        }

        #[test]
        fn solve_solution_substitutes(a in arb_matrix(3, 3), x in proptest::collection::vec(arb_rat(), 3)) {
            let b = a.apply_row(&x);
            let found = solve_linear(&a, &b).unwrap();
            prop_assert!(found.is_some());
            prop_assert_eq!(a.apply_row(&found.unwrap()), b);
        }

        #[test]
        fn kernel_vectors_annihilate(a in arb_matrix(4, 3)) {
            let k = kernel(&a);
            for row in k.basis() {
                prop_assert!(a.apply_row(row).iter().all(Rat::is_zero));
            }
        }
    }
}
