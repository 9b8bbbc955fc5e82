//! Ideal witnesses, annihilator chains, and the splitting of semisimple
//! algebras into simple ideals.
//!
//! The decomposition looks for proper ideals three ways, cheapest first:
//! ideal closures of canonical basis vectors, then primary components of
//! the adjoints of seeded random elements (coordinates drawn from -9..9),
//! then primary components of a centroid element. The centroid pass also
//! anchors the simplicity certificate: an algebra is reported simple only
//! when every closure came back full, the part is nonabelian, the
//! restricted Killing form is nondegenerate, and the centroid is the
//! scalars. Anything short of that is an explicit Inconclusive, never a
//! guess.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactla::{
    canonicalize, char_poly_with_rational_roots, kernel, QMatrix, Rat, Subspace,
};
use crate::fitting_weights::Representation;
use crate::forms::{gram_split_within, killing_form, semisimple_check, BilinearForm, FormsError};
use crate::liecore::{LieAlgebra, SeriesKind};

/// Errors and non-answers from the structure layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("no witness subalgebra within the dimension cap")]
    NoWitnessWithinCap,
    #[error("the subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("no bracketing chain from the whole algebra lands in the subalgebra")]
    NoAbsorbingChain,
    #[error("the algebra is not semisimple (Killing determinant {killing_det})")]
    NotSemisimple { killing_det: Rat },
    #[error("decomposition inconclusive: {reason}")]
    Inconclusive { reason: String },
    #[error("vector has {found} coordinates, algebra has dimension {expected}")]
    AmbientMismatch { expected: usize, found: usize },
}

/// A subalgebra `A` together with the exponent `n` for which the chain
/// `[..[[L, A], A].., A]` of `n` brackets lands inside `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition3Witness {
    pub subalgebra: Subspace,
    pub exponent: usize,
}

/// The simple ideals of a semisimple algebra, sorted by dimension, then
/// by pivot positions, then by canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleDecomposition {
    pub ideals: Vec<Subspace>,
    pub seed: u64,
}

/// Smallest `n >= 1` (up to the algebra dimension) with the `n`-fold
/// bracket chain `[..[[L, A], A].., A]` contained in `A`, if any.
fn absorbed_exponent(algebra: &LieAlgebra, a: &Subspace) -> Option<usize> {
    let mut current = Subspace::full(algebra.dim());
    for n in 1..=algebra.dim().max(1) {
        let next = algebra.bracket_subspaces(&current, a);
        if next.is_contained_in(a) {
            return Some(n);
        }
        if next == current {
            // The chain has stabilized strictly outside A.
            return None;
        }
        current = next;
    }
    None
}

/// Searches for a subalgebra witnessing the absorbing-chain property
/// over the given generators: first the generated subalgebra, then its
/// escalation to a full ideal closure. Candidates larger than `dim_cap`
/// are not accepted.
pub fn condition3_witness(
    algebra: &LieAlgebra,
    generators: &[Vec<Rat>],
    dim_cap: usize,
) -> Result<Condition3Witness, StructureError> {
    let dim = algebra.dim();
    for g in generators {
        if g.len() != dim {
            return Err(StructureError::AmbientMismatch {
                expected: dim,
                found: g.len(),
            });
        }
    }
    let seed = canonicalize(generators, dim).expect("lengths were checked");

    let generated = algebra.subalgebra_closure(&seed);
    if generated.dim() <= dim_cap {
        if let Some(exponent) = absorbed_exponent(algebra, &generated) {
            return Ok(Condition3Witness {
                subalgebra: generated,
                exponent,
            });
        }
    }
    let escalated = algebra.ideal_closure(&seed);
    if escalated.dim() <= dim_cap && escalated != generated {
        if let Some(exponent) = absorbed_exponent(algebra, &escalated) {
            return Ok(Condition3Witness {
                subalgebra: escalated,
                exponent,
            });
        }
    }
    Err(StructureError::NoWitnessWithinCap)
}

/// The stable term of the lower central series of an absorbing
/// subalgebra; always an ideal of the enclosing algebra, and that is
/// checked, not assumed.
pub fn a_omega(algebra: &LieAlgebra, a: &Subspace) -> Result<Subspace, StructureError> {
    if a.ambient() != algebra.dim() {
        return Err(StructureError::AmbientMismatch {
            expected: algebra.dim(),
            found: a.ambient(),
        });
    }
    if !algebra.is_subalgebra(a) {
        return Err(StructureError::NotSubalgebra);
    }
    if absorbed_exponent(algebra, a).is_none() {
        return Err(StructureError::NoAbsorbingChain);
    }
    let chain = algebra
        .series(a, SeriesKind::LowerCentral)
        .expect("subalgebra was checked");
    let stable = chain.last().expect("series is nonempty").clone();
    assert!(
        algebra.is_ideal(&stable),
        "the stable lower central term of an absorbing subalgebra must be an ideal"
    );
    Ok(stable)
}

/// A matrix whose kernel is exactly the subspace: row `i` is the
/// residue of `e_i` after eliminating the subspace's pivots.
fn residual_matrix(s: &Subspace) -> QMatrix {
    let n = s.ambient();
    QMatrix::from_rows(
        (0..n)
            .map(|i| {
                let mut e = vec![Rat::zero(); n];
                e[i] = Rat::one();
                s.reduce(&e)
            })
            .collect(),
    )
    .expect("residues are rectangular")
}

/// Module vectors annihilated by every product of `n` operators drawn
/// from the subalgebra. Computed by peeling one factor at a time:
/// `Ann_j = {v : v rho(a) lies in Ann_(j-1) for all a}`.
pub fn stable_annihilator(rep: &Representation, a: &Subspace, n: usize) -> Subspace {
    assert_eq!(
        a.ambient(),
        rep.algebra().dim(),
        "subalgebra lives in the represented algebra"
    );
    let module_dim = rep.module_dim();
    let ops: Vec<QMatrix> = a
        .basis()
        .iter()
        .map(|v| {
            rep.operator_of(v)
                .expect("basis vectors have the right length")
        })
        .collect();
    if ops.is_empty() {
        // No operators, so any product of n >= 1 of them is vacuous.
        return if n == 0 {
            Subspace::zero(module_dim)
        } else {
            Subspace::full(module_dim)
        };
    }
    let mut annihilator = Subspace::zero(module_dim);
    for _ in 0..n {
        let residual = residual_matrix(&annihilator);
        let blocks: Vec<QMatrix> = ops.iter().map(|op| op * &residual).collect();
        let refs: Vec<&QMatrix> = blocks.iter().collect();
        annihilator = kernel(&QMatrix::hstack(&refs));
    }
    annihilator
}

/// The descending chain of images `M_j = M_(j-1) * rho(A)`, returning
/// the first `j >= 1` with `M_j = M_(j+1)` together with that stable
/// image.
pub fn rep_stable_image(rep: &Representation, a: &Subspace) -> (usize, Subspace) {
    assert_eq!(
        a.ambient(),
        rep.algebra().dim(),
        "subalgebra lives in the represented algebra"
    );
    let module_dim = rep.module_dim();
    let ops: Vec<QMatrix> = a
        .basis()
        .iter()
        .map(|v| {
            rep.operator_of(v)
                .expect("basis vectors have the right length")
        })
        .collect();
    let image_of = |space: &Subspace| -> Subspace {
        let mut rows = Vec::new();
        for v in space.basis() {
            for op in &ops {
                rows.push(op.apply_row(v));
            }
        }
        canonicalize(&rows, module_dim).expect("images have module length")
    };
    let mut n = 1;
    let mut current = image_of(&Subspace::full(module_dim));
    loop {
        let next = image_of(&current);
        if next == current {
            return (n, current);
        }
        current = next;
        n += 1;
    }
}

/// Smallest ideal of the enclosing part containing `seed`, staying
/// inside the part.
fn ideal_closure_within(algebra: &LieAlgebra, part: &Subspace, seed: &Subspace) -> Subspace {
    let mut current = seed.clone();
    loop {
        let grown = current.sum(&algebra.bracket_subspaces(part, &current));
        if grown == current {
            return current;
        }
        current = grown;
    }
}

/// Basis of the centroid of the part: matrices (in part coordinates)
/// commuting with every restricted adjoint operator. For a direct sum
/// of central simple ideals the centroid dimension equals the number of
/// summands.
fn centroid_basis(restricted_ads: &[QMatrix], p: usize) -> Vec<QMatrix> {
    if p == 0 {
        return Vec::new();
    }
    // Unknown T flattened row-major; one column per (operator, entry)
    // constraint of A T - T A = 0.
    let mut blocks = Vec::new();
    for a in restricted_ads {
        let mut block = QMatrix::zero(p * p, p * p);
        for i in 0..p {
            for j in 0..p {
                let row = i * p + j;
                for r in 0..p {
                    for c in 0..p {
                        let col = r * p + c;
                        let mut entry = Rat::zero();
                        if j == c {
                            entry += a.get(r, i);
                        }
                        if i == r {
                            entry -= a.get(j, c);
                        }
                        if !entry.is_zero() {
                            block.set(row, col, entry);
                        }
                    }
                }
            }
        }
        blocks.push(block);
    }
    let refs: Vec<&QMatrix> = blocks.iter().collect();
    let solutions = kernel(&QMatrix::hstack(&refs));
    solutions
        .basis()
        .iter()
        .map(|t| QMatrix::from_fn(p, p, |i, j| t[i * p + j].clone()))
        .collect()
}

fn is_scalar_matrix(t: &QMatrix) -> bool {
    let p = t.rows();
    if p == 0 {
        return true;
    }
    let diag = t.get(0, 0).clone();
    for i in 0..p {
        for j in 0..p {
            let expected = if i == j { diag.clone() } else { Rat::zero() };
            if t.get(i, j) != &expected {
                return false;
            }
        }
    }
    true
}

/// State for one part of the recursive splitting.
struct Splitter<'a> {
    algebra: &'a LieAlgebra,
    killing: &'a BilinearForm,
    trial_budget: usize,
}

impl<'a> Splitter<'a> {
    /// Records `candidate` if it is a proper nonzero ideal smaller than
    /// the current best.
    fn consider(part: &Subspace, best: &mut Option<Subspace>, candidate: Subspace) -> bool {
        if candidate.is_zero() || candidate.dim() >= part.dim() {
            return false;
        }
        let better = match best {
            None => true,
            Some(b) => candidate.dim() < b.dim(),
        };
        if better {
            *best = Some(candidate);
        }
        true
    }

    /// Ideal closures of the canonical basis vectors of the part.
    /// Returns the best proper ideal found; sets `all_full` when every
    /// closure came back equal to the whole part.
    fn closure_pass(&self, part: &Subspace, all_full: &mut bool) -> Option<Subspace> {
        let mut best = None;
        for v in part.basis() {
            let seed = canonicalize(std::slice::from_ref(v), part.ambient())
                .expect("basis vectors have ambient length");
            let closure = ideal_closure_within(self.algebra, part, &seed);
            if closure != *part {
                *all_full = false;
            }
            Self::consider(part, &mut best, closure);
        }
        best
    }

    /// Seeded random elements: primary components of their restricted
    /// adjoints, escalated to ideal closures.
    fn trial_pass(&self, part: &Subspace, rng: &mut ChaCha8Rng) -> Option<Subspace> {
        let p = part.dim();
        for _ in 0..self.trial_budget {
            let coords: Vec<Rat> = (0..p)
                .map(|_| Rat::from_integer(rng.gen_range(-9i64..=9).into()))
                .collect();
            let x = part.lift(&coords);
            let ad_x = self.algebra.ad(&x).expect("lifted elements have full length");
            let restricted = part
                .restrict_right_action(&ad_x)
                .expect("an ideal is invariant under its own adjoints");
            let factors = char_poly_with_rational_roots(&restricted);
            let mut best = None;
            for (root, _) in &factors.roots {
                let shifted = &restricted - &QMatrix::identity(p).scale(root);
                let local = kernel(&shifted.pow(p));
                if local.dim() == p {
                    continue;
                }
                let lifted = canonicalize(
                    &local
                        .basis()
                        .iter()
                        .map(|c| part.lift(c))
                        .collect::<Vec<_>>(),
                    part.ambient(),
                )
                .expect("lifted vectors have ambient length");
                for v in lifted.basis() {
                    let seed = canonicalize(std::slice::from_ref(v), part.ambient())
                        .expect("basis vectors have ambient length");
                    let closure = ideal_closure_within(self.algebra, part, &seed);
                    Self::consider(part, &mut best, closure);
                }
            }
            if best.is_some() {
                return best;
            }
        }
        None
    }

    /// Deterministic fallback: primary components of a non-scalar
    /// centroid element are ideals. Also reports the centroid dimension
    /// for the simplicity certificate.
    fn centroid_pass(&self, part: &Subspace) -> (usize, Option<Subspace>) {
        let p = part.dim();
        let restricted_ads: Vec<QMatrix> = part
            .basis()
            .iter()
            .map(|v| {
                let ad_v = self.algebra.ad(v).expect("basis vectors have full length");
                part.restrict_right_action(&ad_v)
                    .expect("an ideal is invariant under its own adjoints")
            })
            .collect();
        let centroid = centroid_basis(&restricted_ads, p);
        let mut best = None;
        for t in &centroid {
            if is_scalar_matrix(t) {
                continue;
            }
            let factors = char_poly_with_rational_roots(t);
            for (root, _) in &factors.roots {
                let shifted = t - &QMatrix::identity(p).scale(root);
                let local = kernel(&shifted.pow(p));
                if local.dim() == p || local.is_zero() {
                    continue;
                }
                let lifted = canonicalize(
                    &local
                        .basis()
                        .iter()
                        .map(|c| part.lift(c))
                        .collect::<Vec<_>>(),
                    part.ambient(),
                )
                .expect("lifted vectors have ambient length");
                // A primary component of a centroid element is already
                // an ideal; take it directly.
                Self::consider(part, &mut best, lifted);
            }
            if best.is_some() {
                break;
            }
        }
        (centroid.len(), best)
    }

    fn split(
        &self,
        part: Subspace,
        rng: &mut ChaCha8Rng,
        out: &mut Vec<Subspace>,
    ) -> Result<(), StructureError> {
        if part.is_zero() {
            return Ok(());
        }
        let gram = self
            .killing
            .restricted_gram(&part)
            .expect("parts live inside the algebra");
        if gram.determinant().is_zero() {
            return Err(StructureError::Inconclusive {
                reason: "the Killing form degenerated on a part".to_string(),
            });
        }

        let mut all_full = true;
        let mut found = self.closure_pass(&part, &mut all_full);
        if found.is_none() {
            found = self.trial_pass(&part, rng);
        }
        let centroid_dim = if found.is_none() {
            let (dim, candidate) = self.centroid_pass(&part);
            found = candidate;
            Some(dim)
        } else {
            None
        };

        match found {
            Some(ideal) => {
                let split = gram_split_within(self.killing, &part, &ideal).map_err(|e| match e {
                    FormsError::DegenerateSubspace => StructureError::Inconclusive {
                        reason: "a candidate ideal was Killing-degenerate".to_string(),
                    },
                    other => StructureError::Inconclusive {
                        reason: format!("orthogonal splitting failed: {other}"),
                    },
                })?;
                self.split(ideal, rng, out)?;
                self.split(split.complement, rng, out)
            }
            None => {
                let nonabelian = !self
                    .algebra
                    .bracket_subspaces(&part, &part)
                    .is_zero();
                let centroid_is_scalars = centroid_dim == Some(1);
                if all_full && nonabelian && centroid_is_scalars {
                    out.push(part);
                    Ok(())
                } else if !nonabelian {
                    Err(StructureError::Inconclusive {
                        reason: "an unsplittable abelian part appeared".to_string(),
                    })
                } else {
                    Err(StructureError::Inconclusive {
                        reason: format!(
                            "no proper ideal found but the simplicity certificate failed \
                             (all closures full: {}, centroid dimension: {:?})",
                            all_full, centroid_dim
                        ),
                    })
                }
            }
        }
    }
}

/// Splits a semisimple algebra into pairwise orthogonal simple ideals.
/// The output is canonical: sorted by dimension, then by basis, and
/// independent of the seed whenever the search succeeds, because the set
/// of simple ideals is unique.
pub fn decompose_semisimple(
    algebra: &LieAlgebra,
    seed: u64,
    trial_budget: usize,
) -> Result<SimpleDecomposition, StructureError> {
    let report = semisimple_check(algebra);
    if !report.semisimple {
        return Err(StructureError::NotSemisimple {
            killing_det: report.killing_det,
        });
    }
    let killing = killing_form(algebra);
    let splitter = Splitter {
        algebra,
        killing: &killing,
        trial_budget,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ideals = Vec::new();
    splitter.split(Subspace::full(algebra.dim()), &mut rng, &mut ideals)?;
    ideals.sort_by(|a, b| {
        a.dim()
            .cmp(&b.dim())
            .then_with(|| a.pivots().cmp(b.pivots()))
            .then_with(|| a.basis().cmp(b.basis()))
    });
    Ok(SimpleDecomposition {
        ideals,
        seed,
    })
}
