//! Invariant bilinear forms and the structure criteria built on them.
//!
//! The trace form of a representation pairs algebra elements through the
//! trace of their composed operators on the invertible Fitting component
//! of the product. The Killing form is the trace form of the adjoint
//! representation. On top of these sit the solvability criterion (the
//! form vanishes on the derived subalgebra), the semisimplicity test
//! (nondegenerate Killing form), and the radical as the orthogonal
//! complement of the derived subalgebra.

use num_traits::Zero;
use thiserror::Error;

use crate::exactla::{canonicalize, kernel, QMatrix, Rat, Subspace};
use crate::fitting_weights::{fitting_trace, Representation};
use crate::liecore::LieAlgebra;

/// Errors from form computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormsError {
    #[error("subspace lives in Q^{found}, form is on Q^{expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("gram matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("gram matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("the form is degenerate on the subspace, no orthogonal split exists")]
    DegenerateSubspace,
    #[error("the representation kernel is not solvable, the criterion does not apply")]
    KernelNotSolvable,
}

/// A symmetric bilinear form on `Q^n`, stored by its Gram matrix in the
/// standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: QMatrix,
}

impl BilinearForm {
    /// Wraps a Gram matrix, checking shape and symmetry.
    pub fn from_gram(gram: QMatrix) -> Result<Self, FormsError> {
        if !gram.is_square() {
            return Err(FormsError::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        for i in 0..gram.rows() {
            for j in i + 1..gram.cols() {
                if gram.get(i, j) != gram.get(j, i) {
                    return Err(FormsError::NotSymmetric { i, j });
                }
            }
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// `f(a, b)` by bilinear expansion.
    pub fn eval(&self, a: &[Rat], b: &[Rat]) -> Rat {
        assert_eq!(a.len(), self.dim(), "left argument length");
        assert_eq!(b.len(), self.dim(), "right argument length");
        let mut total = Rat::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                total += ai * bj * self.gram.get(i, j);
            }
        }
        total
    }

    /// The Gram matrix of the form restricted to the canonical basis of
    /// a subspace.
    pub fn restricted_gram(&self, u: &Subspace) -> Result<QMatrix, FormsError> {
        if u.ambient() != self.dim() {
            return Err(FormsError::AmbientMismatch {
                expected: self.dim(),
                found: u.ambient(),
            });
        }
        let basis = u.basis();
        Ok(QMatrix::from_fn(u.dim(), u.dim(), |i, j| {
            self.eval(&basis[i], &basis[j])
        }))
    }

    pub fn determinant(&self) -> Rat {
        self.gram.determinant()
    }
}

/// The trace form of a representation:
/// `f(a, b) = fitting_trace(rho(a) rho(b))`, assembled on basis pairs
/// and extended bilinearly. Symmetric by the symmetry of the trace.
pub fn trace_form(rep: &Representation) -> BilinearForm {
    let dim = rep.algebra().dim();
    let mut gram = QMatrix::zero(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let product = rep.operator(i) * rep.operator(j);
            let value = fitting_trace(&product);
            gram.set(i, j, value.clone());
            gram.set(j, i, value);
        }
    }
    BilinearForm { gram }
}

/// The Killing form: the trace form of the adjoint representation.
pub fn killing_form(algebra: &LieAlgebra) -> BilinearForm {
    trace_form(&Representation::adjoint(algebra))
}

/// The orthogonal complement `{x : f(x, u) = 0 for all u in U}`.
pub fn perp(form: &BilinearForm, u: &Subspace) -> Result<Subspace, FormsError> {
    if u.ambient() != form.dim() {
        return Err(FormsError::AmbientMismatch {
            expected: form.dim(),
            found: u.ambient(),
        });
    }
    if u.is_zero() {
        return Ok(Subspace::full(form.dim()));
    }
    // Column k of the constraint matrix is x -> f(x, u_k), i.e. the
    // vector G * u_k^T; the complement is the kernel of that matrix.
    let constraints = QMatrix::from_fn(form.dim(), u.dim(), |i, k| {
        u.basis()[k]
            .iter()
            .enumerate()
            .map(|(j, c)| c * form.gram().get(i, j))
            .sum()
    });
    Ok(kernel(&constraints))
}

/// An orthogonal splitting along a nondegenerate subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramSplit {
    /// The subspace itself.
    pub part: Subspace,
    /// Its orthogonal complement within the enclosing space.
    pub complement: Subspace,
    /// Row `k` holds the coefficients expressing the projection of the
    /// `k`-th enclosing basis vector onto `part`, in `part` coordinates.
    pub projections: QMatrix,
}

/// Splits `within` as `part + complement` orthogonally with respect to
/// the form, solving one Gram system per basis vector of `within`. Fails
/// exactly when the form restricted to `part` is degenerate.
pub(crate) fn gram_split_within(
    form: &BilinearForm,
    within: &Subspace,
    part: &Subspace,
) -> Result<GramSplit, FormsError> {
    if part.ambient() != form.dim() || within.ambient() != form.dim() {
        return Err(FormsError::AmbientMismatch {
            expected: form.dim(),
            found: if part.ambient() != form.dim() {
                part.ambient()
            } else {
                within.ambient()
            },
        });
    }
    debug_assert!(part.is_contained_in(within));
    let k = part.dim();
    let gram = form.restricted_gram(part)?;
    if gram.determinant().is_zero() {
        return Err(FormsError::DegenerateSubspace);
    }
    let mut complement_rows = Vec::new();
    let mut projection_rows = Vec::new();
    for c in within.basis() {
        // Solve sum_t x_t f(a_t, a_s) = f(c, a_s) for the projection of
        // c onto the part; the remainder is orthogonal to the part.
        let rhs: Vec<Rat> = part.basis().iter().map(|a| form.eval(c, a)).collect();
        let coeffs = crate::exactla::solve_linear(&gram, &rhs)
            .expect("gram system is square")
            .expect("a nondegenerate gram matrix is invertible");
        let projected = part.lift(&coeffs);
        let residue: Vec<Rat> = c.iter().zip(&projected).map(|(a, b)| a - b).collect();
        complement_rows.push(residue);
        projection_rows.push(coeffs);
    }
    let complement = canonicalize(&complement_rows, form.dim())
        .expect("residues have ambient length");
    debug_assert_eq!(complement.dim() + k, within.dim());
    debug_assert!(complement.intersect(part).is_zero());
    Ok(GramSplit {
        part: part.clone(),
        complement,
        projections: QMatrix::from_rows(projection_rows).expect("projection rows are uniform"),
    })
}

/// Splits the whole space orthogonally along a subspace on which the
/// form is nondegenerate. See [`GramSplit`].
pub fn gram_split(form: &BilinearForm, part: &Subspace) -> Result<GramSplit, FormsError> {
    gram_split_within(form, &Subspace::full(form.dim()), part)
}

/// Verdict of the trace-form solvability criterion, with the
/// brute-force series oracle run alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvabilityVerdict {
    /// The criterion's answer: the form vanishes on the derived
    /// subalgebra.
    pub solvable: bool,
    /// For a negative verdict, an element pair of the derived
    /// subalgebra with nonzero pairing.
    pub witness: Option<(Vec<Rat>, Vec<Rat>)>,
    /// Whether the derived-series oracle reached the same answer.
    pub oracle_agreement: bool,
}

/// The trace-form solvability criterion. With no representation given,
/// the adjoint is used (the classical Killing-form test). A supplied
/// representation must have solvable kernel for the criterion to be
/// valid; that is checked and enforced.
pub fn cartan_solvable(
    algebra: &LieAlgebra,
    rep: Option<&Representation>,
) -> Result<SolvabilityVerdict, FormsError> {
    let adjoint;
    let rep = match rep {
        Some(r) => {
            let rep_kernel = r.kernel_subspace();
            if !algebra
                .is_solvable_subalgebra(&rep_kernel)
                .expect("the representation kernel is an ideal, hence a subalgebra")
            {
                return Err(FormsError::KernelNotSolvable);
            }
            r
        }
        None => {
            adjoint = Representation::adjoint(algebra);
            &adjoint
        }
    };
    let form = trace_form(rep);
    let derived = algebra.derived_subalgebra();

    let mut witness = None;
    'outer: for a in derived.basis() {
        for b in derived.basis() {
            if !form.eval(a, b).is_zero() {
                witness = Some((a.clone(), b.clone()));
                break 'outer;
            }
        }
    }
    let solvable = witness.is_none();

    let oracle = algebra
        .is_solvable_subalgebra(&Subspace::full(algebra.dim()))
        .expect("the whole algebra is a subalgebra");
    Ok(SolvabilityVerdict {
        solvable,
        witness,
        oracle_agreement: solvable == oracle,
    })
}

/// Semisimplicity report: the Killing determinant decides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimpleReport {
    pub semisimple: bool,
    pub killing_det: Rat,
}

/// Tests semisimplicity by nondegeneracy of the Killing form.
pub fn semisimple_check(algebra: &LieAlgebra) -> SemisimpleReport {
    let killing_det = killing_form(algebra).determinant();
    SemisimpleReport {
        semisimple: !killing_det.is_zero(),
        killing_det,
    }
}

/// The radical: the orthogonal complement of the derived subalgebra
/// under the Killing form. Always a solvable ideal containing every
/// solvable ideal.
pub fn radical(algebra: &LieAlgebra) -> Subspace {
    let form = killing_form(algebra);
    let derived = algebra.derived_subalgebra();
    perp(&form, &derived).expect("derived subalgebra lives in the algebra")
}
