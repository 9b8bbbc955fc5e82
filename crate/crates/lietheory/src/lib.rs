//! Exact structure theory for finite-dimensional Lie algebras over the
//! rationals, together with finitely-truncated towers of such algebras.
//!
//! Everything here runs over `Q` with arbitrary-precision rational
//! arithmetic. There are no floating-point code paths and no tolerance
//! knobs: a determinant is zero or it is not, a subspace contains a vector
//! or it does not. The intended scale is small (dimensions up to roughly
//! thirty), where dense exact linear algebra is perfectly comfortable.
//!
//! The layers, bottom up:
//!
//! * [`exactla`]: rational vectors and matrices, canonical (reduced
//!   row-echelon) subspaces, characteristic polynomials and rational root
//!   extraction.
//! * [`liecore`]: Lie algebras presented by structure constants, adjoint
//!   operators, derived and lower central series, ideal closures,
//!   derivations.
//! * [`fitting_weights`]: representations, Fitting decompositions of a
//!   single operator, primary components, and weight-space decompositions
//!   relative to a nilpotent subalgebra.
//! * [`forms`]: trace forms and the Killing form, orthogonal complements,
//!   Gram-system splittings, the trace-form solvability criterion,
//!   semisimplicity, and the radical.
//! * [`structure`]: annihilator chains, stable images, minimal-ideal
//!   witnesses, and the decomposition of a semisimple algebra into simple
//!   ideals.
//! * [`tower`]: truncated ascending towers of algebras with embeddings,
//!   level-by-level verdicts, decomposition matching across levels, and
//!   innerness of tower derivations.
//!
//! Vectors are rows and operators act on the right (`x * A`), so the
//! matrix of a linear map has row `i` equal to the image of the `i`-th
//! basis vector. All subspaces are stored in reduced row-echelon form,
//! which makes equality of subspaces ordinary structural equality.

pub mod exactla;
pub mod fitting_weights;
pub mod fixtures;
pub mod forms;
pub mod io;
pub mod liecore;
pub mod structure;
pub mod tower;

pub use exactla::{
    canonicalize, char_poly, char_poly_with_rational_roots, kernel, solve_linear, LinalgError,
    Polynomial, QMatrix, Rat, Subspace,
};
pub use fitting_weights::{
    fitting_decompose, fitting_trace, mu_component, weight_decomposition, weight_string_identity,
    FittingSplit, Representation, WeightError, WeightFunction,
};
pub use forms::{
    cartan_solvable, gram_split, killing_form, perp, radical, semisimple_check, trace_form,
    BilinearForm, FormsError, GramSplit, SemisimpleReport, SolvabilityVerdict,
};
pub use liecore::{
    AlgebraError, DerivationAnalysis, LieAlgebra, SeriesKind, ValidationReport,
};
pub use structure::{
    a_omega, condition3_witness, decompose_semisimple, rep_stable_image, stable_annihilator,
    Condition3Witness, SimpleDecomposition, StructureError,
};
pub use tower::{
    tower_decompose, tower_derivation_inner, tower_verdicts, validate_tower, InnerVerdict,
    LevelMatching, LevelVerdict, LimitVerdict, Tower, TowerDecomposition, TowerDerivation,
    TowerError, TowerInnerness, TowerValidation, TowerVerdicts,
};
