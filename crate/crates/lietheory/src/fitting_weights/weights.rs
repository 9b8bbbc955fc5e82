//! Weight-space decompositions relative to a nilpotent subalgebra.
//!
//! The module is refined one subalgebra basis vector at a time: each
//! current piece is split into the primary components of the next
//! operator. Pieces stay invariant under all the operators because the
//! subalgebra is nilpotent, so the refinement never leaves the family of
//! invariant subspaces. The decomposition exists over `Q` only when the
//! restricted characteristic polynomials split; a nonconstant rootless
//! cofactor is reported as an explicit failure rather than papered over.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactla::{
    canonicalize, char_poly_with_rational_roots, kernel, Polynomial, QMatrix, Rat, Subspace,
};
use crate::liecore::AlgebraError;

use super::rep::Representation;

/// Errors from weight decompositions and the string identity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("subspace lives in Q^{found}, algebra has dimension {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("the given subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("the subalgebra is not nilpotent")]
    NotNilpotent,
    #[error("an operator does not split over Q; rootless cofactor {cofactor}")]
    NotSplit { cofactor: Polynomial },
    #[error("{which} is not a weight of the relevant decomposition")]
    NotAWeight { which: &'static str },
    #[error("{which} assigns values to {found} basis vectors, subalgebra has dimension {expected}")]
    WeightLength {
        which: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("the element lies outside the subalgebra")]
    ElementOutsideSubalgebra,
}

impl From<AlgebraError> for WeightError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NotSubalgebra => WeightError::NotSubalgebra,
            other => panic!("unexpected algebra error in weight computation: {other}"),
        }
    }
}

/// A weight: the rational eigenvalue assigned to each canonical basis
/// vector of the subalgebra, extended linearly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeightFunction {
    values: Vec<Rat>,
}

impl WeightFunction {
    pub fn new(values: Vec<Rat>) -> Self {
        WeightFunction { values }
    }

    /// Eigenvalues along the canonical basis of the subalgebra.
    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rat::is_zero)
    }

    /// The weight evaluated at an element given by subalgebra
    /// coordinates.
    pub fn eval_coords(&self, coords: &[Rat]) -> Rat {
        assert_eq!(coords.len(), self.values.len(), "coordinate count");
        self.values
            .iter()
            .zip(coords)
            .map(|(v, c)| v * c)
            .sum()
    }
}

/// Splits the module into joint primary components of a nilpotent
/// subalgebra, returning `(weight, space)` pairs sorted by weight
/// values. The spaces are nonzero, pairwise independent, and sum to the
/// whole module; on each space every `rho(h) - weight(h)` acts
/// nilpotently.
pub fn weight_decomposition(
    rep: &Representation,
    h: &Subspace,
) -> Result<Vec<(WeightFunction, Subspace)>, WeightError> {
    let algebra = rep.algebra();
    if h.ambient() != algebra.dim() {
        return Err(WeightError::AmbientMismatch {
            expected: algebra.dim(),
            found: h.ambient(),
        });
    }
    if !algebra.is_subalgebra(h) {
        return Err(WeightError::NotSubalgebra);
    }
    if !algebra.is_nilpotent_subalgebra(h)? {
        return Err(WeightError::NotNilpotent);
    }

    let module_dim = rep.module_dim();
    let mut pieces: Vec<(Vec<Rat>, Subspace)> = vec![(Vec::new(), Subspace::full(module_dim))];
    if module_dim == 0 {
        pieces.clear();
    }
    for basis_vector in h.basis() {
        let op = rep
            .operator_of(basis_vector)
            .expect("subalgebra basis vectors have the right length");
        let mut refined = Vec::new();
        for (values, space) in pieces {
            let restricted = space
                .restrict_right_action(&op)
                .expect("pieces stay invariant under a nilpotent subalgebra");
            let factors = char_poly_with_rational_roots(&restricted);
            if !factors.cofactor.is_constant() {
                return Err(WeightError::NotSplit {
                    cofactor: factors.cofactor,
                });
            }
            for (root, _) in factors.roots {
                let shifted = &restricted - &QMatrix::identity(space.dim()).scale(&root);
                let local = kernel(&shifted.pow(space.dim()));
                let lifted_rows: Vec<Vec<Rat>> =
                    local.basis().iter().map(|c| space.lift(c)).collect();
                let lifted = canonicalize(&lifted_rows, module_dim)
                    .expect("lifted vectors have module length");
                let mut next_values = values.clone();
                next_values.push(root);
                refined.push((next_values, lifted));
            }
        }
        pieces = refined;
    }

    pieces.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert_eq!(
        pieces.iter().map(|(_, s)| s.dim()).sum::<usize>(),
        module_dim,
        "weight spaces must fill the module"
    );
    Ok(pieces
        .into_iter()
        .map(|(values, space)| (WeightFunction::new(values), space))
        .collect())
}

/// Finds the integer `i` with `w = base + i * step`, if there is one.
fn string_position(
    w: &WeightFunction,
    base: &WeightFunction,
    step: &WeightFunction,
) -> Option<BigInt> {
    let anchor = step.values().iter().position(|v| !v.is_zero())?;
    let delta = &w.values()[anchor] - &base.values()[anchor];
    let ratio = delta / &step.values()[anchor];
    if !ratio.denom().is_one() {
        return None;
    }
    let i = ratio.numer().clone();
    let matches = w
        .values()
        .iter()
        .zip(base.values())
        .zip(step.values())
        .all(|((wv, bv), sv)| wv == &(bv + &(Rat::from_integer(i.clone()) * sv)));
    matches.then_some(i)
}

/// The alternating-sum invariant of a weight string: for a weight `rho`
/// of the module and a root `alpha` of the adjoint action, evaluates
/// `sum_i n_(rho + i alpha) * (rho + i alpha)(h_alpha)` over the integer
/// positions `i` where `rho + i alpha` is a weight. For `h_alpha` taken
/// from the bracket of opposite root spaces this sum vanishes.
pub fn weight_string_identity(
    rep: &Representation,
    h: &Subspace,
    rho: &WeightFunction,
    alpha: &WeightFunction,
    h_alpha: &[Rat],
) -> Result<Rat, WeightError> {
    for (which, w) in [("rho", rho), ("alpha", alpha)] {
        if w.values().len() != h.dim() {
            return Err(WeightError::WeightLength {
                which,
                expected: h.dim(),
                found: w.values().len(),
            });
        }
    }
    let module_weights = weight_decomposition(rep, h)?;
    if !module_weights.iter().any(|(w, _)| w == rho) {
        return Err(WeightError::NotAWeight { which: "rho" });
    }
    let adjoint = Representation::adjoint(rep.algebra());
    let roots = weight_decomposition(&adjoint, h)?;
    if !roots.iter().any(|(w, _)| w == alpha) {
        return Err(WeightError::NotAWeight { which: "alpha" });
    }
    let coords = h
        .coordinates_of(h_alpha)
        .ok_or(WeightError::ElementOutsideSubalgebra)?;

    let rho_at = rho.eval_coords(&coords);
    let alpha_at = alpha.eval_coords(&coords);

    if alpha.is_zero() {
        // Degenerate string: only i = 0 contributes.
        let n_rho = module_weights
            .iter()
            .find(|(w, _)| w == rho)
            .map(|(_, s)| s.dim())
            .expect("rho was checked above");
        return Ok(Rat::from_integer(BigInt::from(n_rho)) * rho_at);
    }

    let mut total = Rat::zero();
    for (w, space) in &module_weights {
        if let Some(i) = string_position(w, rho, alpha) {
            let multiplicity = Rat::from_integer(BigInt::from(space.dim()));
            let value = &rho_at + &(Rat::from_integer(i) * &alpha_at);
            total += multiplicity * value;
        }
    }
    Ok(total)
}
