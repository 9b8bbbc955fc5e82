//! Finite chains of embedded Lie algebras: the desk-scale model of a
//! locally finite algebra.
//!
//! A tower is a list of algebras with an injective homomorphic embedding
//! from each level into the next. All limit statements are honestly
//! horizon-limited: "locally solvable" means every materialized level is
//! solvable, an innerness verdict holds up to the last level built, and
//! no infinite object is ever pretended into existence.

use thiserror::Error;

use crate::exactla::{canonicalize, QMatrix, Rat, Subspace};
use crate::forms::{killing_form, perp, radical, semisimple_check};
use crate::liecore::LieAlgebra;
use crate::structure::{decompose_semisimple, SimpleDecomposition, StructureError};

/// A finite chain of Lie algebras. `embeddings[k]` is a
/// `dim_k x dim_(k+1)` matrix carrying level-`k` coordinates into
/// level-`k+1` coordinates by right multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    pub levels: Vec<LieAlgebra>,
    pub embeddings: Vec<QMatrix>,
}

/// One square matrix per level, each intended as a derivation of that
/// level, compatible with the embeddings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerDerivation {
    pub per_level: Vec<QMatrix>,
}

/// Errors for tower operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("tower failed validation")]
    InvalidTower,
    #[error("level {level} is not semisimple")]
    NotSemisimpleLevel { level: usize },
    #[error("decomposition inconclusive at level {level}: {reason}")]
    InconclusiveLevel { level: usize, reason: String },
    #[error("level {level} has a nontrivial centre, so inner witnesses are not unique")]
    CentreNotTrivial { level: usize },
    #[error("derivation has {found} matrices for {expected} levels")]
    DerivationCount { expected: usize, found: usize },
    #[error("derivation matrix for level {level} is {rows}x{cols}, level dimension is {dim}")]
    DerivationShape {
        level: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("matrix at level {level} violates the Leibniz rule")]
    NotDerivation { level: usize },
    #[error("derivation does not commute with the embedding out of level {level}")]
    IncompatibleDerivation { level: usize },
    #[error("no adjoint matches the derivation at level {level}")]
    NoWitness { level: usize },
}

/// Everything that can go wrong with a tower's shape and embeddings,
/// gathered rather than thrown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerValidation {
    pub level_count: usize,
    pub embedding_count_ok: bool,
    /// Levels whose bracket tables fail antisymmetry or the Jacobi
    /// identity.
    pub invalid_levels: Vec<usize>,
    /// Embeddings with the wrong number of rows or columns.
    pub shape_failures: Vec<usize>,
    /// Embeddings whose rows are linearly dependent.
    pub injectivity_failures: Vec<usize>,
    /// Triples (embedding, i, j) where the bracket of basis vectors i
    /// and j is not carried to the bracket of their images.
    pub homomorphism_failures: Vec<(usize, usize, usize)>,
}

impl TowerValidation {
    pub fn is_valid(&self) -> bool {
        self.level_count > 0
            && self.embedding_count_ok
            && self.invalid_levels.is_empty()
            && self.shape_failures.is_empty()
            && self.injectivity_failures.is_empty()
            && self.homomorphism_failures.is_empty()
    }
}

/// Checks every level's bracket table and every embedding's shape,
/// injectivity, and homomorphism property.
pub fn validate_tower(tower: &Tower) -> TowerValidation {
    let level_count = tower.levels.len();
    let expected_embeddings = level_count.saturating_sub(1);
    let embedding_count_ok = tower.embeddings.len() == expected_embeddings;

    let invalid_levels: Vec<usize> = tower
        .levels
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.validate().is_valid())
        .map(|(k, _)| k)
        .collect();

    let mut shape_failures = Vec::new();
    let mut injectivity_failures = Vec::new();
    let mut homomorphism_failures = Vec::new();
    if embedding_count_ok {
        for (k, phi) in tower.embeddings.iter().enumerate() {
            let lower = &tower.levels[k];
            let upper = &tower.levels[k + 1];
            if phi.rows() != lower.dim() || phi.cols() != upper.dim() {
                shape_failures.push(k);
                continue;
            }
            let rows: Vec<Vec<Rat>> = (0..phi.rows()).map(|i| phi.row(i).to_vec()).collect();
            let image = canonicalize(&rows, upper.dim()).expect("embedding rows are rectangular");
            if image.dim() != lower.dim() {
                injectivity_failures.push(k);
            }
            for i in 0..lower.dim() {
                for j in (i + 1)..lower.dim() {
                    let pushed = phi.apply_row(lower.bracket_basis(i, j));
                    let bracketed = upper.bracket(phi.row(i), phi.row(j));
                    if pushed != bracketed {
                        homomorphism_failures.push((k, i, j));
                    }
                }
            }
        }
    }

    TowerValidation {
        level_count,
        embedding_count_ok,
        invalid_levels,
        shape_failures,
        injectivity_failures,
        homomorphism_failures,
    }
}

/// The limit verdict of a tower, always horizon-limited to the levels
/// actually present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitVerdict {
    /// Every level is solvable.
    LocallySolvable,
    /// Every level has zero radical and radicals embed monotonically.
    Semisimple,
    /// Neither verdict holds; carries the first level (or boundary)
    /// that broke the better of the two.
    Inconclusive { level: usize },
}

/// Per-level structural summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelVerdict {
    pub radical: Subspace,
    pub killing_det: Rat,
    pub solvable: bool,
    pub semisimple: bool,
}

/// The level-wise reports, the radical monotonicity flags across each
/// embedding, and the limit verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerVerdicts {
    pub levels: Vec<LevelVerdict>,
    pub radical_monotone: Vec<bool>,
    pub limit: LimitVerdict,
}

/// Runs the solvability and semisimplicity analysis on every level and
/// combines them into a limit verdict.
pub fn tower_verdicts(tower: &Tower) -> Result<TowerVerdicts, TowerError> {
    if !validate_tower(tower).is_valid() {
        return Err(TowerError::InvalidTower);
    }
    let levels: Vec<LevelVerdict> = tower
        .levels
        .iter()
        .map(|l| {
            let ss = semisimple_check(l);
            LevelVerdict {
                radical: radical(l),
                killing_det: ss.killing_det,
                solvable: l
                    .is_solvable_subalgebra(&Subspace::full(l.dim()))
                    .expect("the full space is a subalgebra"),
                semisimple: ss.semisimple,
            }
        })
        .collect();

    let radical_monotone: Vec<bool> = tower
        .embeddings
        .iter()
        .enumerate()
        .map(|(k, phi)| {
            levels[k]
                .radical
                .basis()
                .iter()
                .all(|v| levels[k + 1].radical.contains(&phi.apply_row(v)))
        })
        .collect();

    let limit = if levels.iter().all(|l| l.solvable) {
        LimitVerdict::LocallySolvable
    } else if levels.iter().all(|l| l.radical.is_zero()) {
        match radical_monotone.iter().position(|&m| !m) {
            None => LimitVerdict::Semisimple,
            Some(boundary) => LimitVerdict::Inconclusive { level: boundary },
        }
    } else {
        let first_unsolvable = levels.iter().position(|l| !l.solvable);
        let first_radical = levels.iter().position(|l| !l.radical.is_zero());
        let level = match (first_unsolvable, first_radical) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => unreachable!("one of the two verdicts failed"),
        };
        LimitVerdict::Inconclusive { level }
    };

    Ok(TowerVerdicts {
        levels,
        radical_monotone,
        limit,
    })
}

/// How the simple ideals of one level sit inside the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMatching {
    /// For each level-k ideal, the index of the unique level-(k+1)
    /// ideal containing its embedded image, or None when containment
    /// is not unique (or absent).
    pub assignments: Vec<Option<usize>>,
    /// True when all assignments exist and are pairwise distinct.
    pub injective: bool,
}

/// Per-level simple decompositions plus the coherence data across
/// embeddings: ideal matchings and the check that the orthogonal
/// complements of each level's ideals intersect to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerDecomposition {
    pub per_level: Vec<SimpleDecomposition>,
    pub matchings: Vec<LevelMatching>,
    pub perp_intersections_zero: Vec<bool>,
    pub coherent: bool,
}

/// Decomposes every level into simple ideals and verifies the
/// subdirect-sum coherence of the whole chain.
pub fn tower_decompose(
    tower: &Tower,
    seed: u64,
    trial_budget: usize,
) -> Result<TowerDecomposition, TowerError> {
    if !validate_tower(tower).is_valid() {
        return Err(TowerError::InvalidTower);
    }
    let mut per_level = Vec::with_capacity(tower.levels.len());
    for (k, level) in tower.levels.iter().enumerate() {
        let decomposition = decompose_semisimple(level, seed, trial_budget).map_err(|e| match e {
            StructureError::NotSemisimple { .. } => TowerError::NotSemisimpleLevel { level: k },
            StructureError::Inconclusive { reason } => {
                TowerError::InconclusiveLevel { level: k, reason }
            }
            other => TowerError::InconclusiveLevel {
                level: k,
                reason: other.to_string(),
            },
        })?;
        per_level.push(decomposition);
    }

    let matchings: Vec<LevelMatching> = tower
        .embeddings
        .iter()
        .enumerate()
        .map(|(k, phi)| {
            let upper_dim = tower.levels[k + 1].dim();
            let assignments: Vec<Option<usize>> = per_level[k]
                .ideals
                .iter()
                .map(|ideal| {
                    let rows: Vec<Vec<Rat>> =
                        ideal.basis().iter().map(|v| phi.apply_row(v)).collect();
                    let image =
                        canonicalize(&rows, upper_dim).expect("images have the upper dimension");
                    let mut containing = per_level[k + 1]
                        .ideals
                        .iter()
                        .enumerate()
                        .filter(|(_, j)| image.is_contained_in(j))
                        .map(|(idx, _)| idx);
                    match (containing.next(), containing.next()) {
                        (Some(idx), None) => Some(idx),
                        _ => None,
                    }
                })
                .collect();
            let mut seen: Vec<usize> = assignments.iter().flatten().copied().collect();
            seen.sort_unstable();
            let distinct = seen.windows(2).all(|w| w[0] != w[1]);
            let injective = assignments.iter().all(|a| a.is_some()) && distinct;
            LevelMatching {
                assignments,
                injective,
            }
        })
        .collect();

    let perp_intersections_zero: Vec<bool> = tower
        .levels
        .iter()
        .zip(&per_level)
        .map(|(level, decomposition)| {
            let killing = killing_form(level);
            decomposition
                .ideals
                .iter()
                .fold(Subspace::full(level.dim()), |acc, ideal| {
                    let complement =
                        perp(&killing, ideal).expect("ideals live inside the level");
                    acc.intersect(&complement)
                })
                .is_zero()
        })
        .collect();

    let coherent = matchings.iter().all(|m| m.injective)
        && perp_intersections_zero.iter().all(|&z| z);

    Ok(TowerDecomposition {
        per_level,
        matchings,
        perp_intersections_zero,
        coherent,
    })
}

/// The innerness verdict for a tower derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InnerVerdict {
    Inner,
    NotInnerWithinHorizon,
}

/// Per-level adjoint witnesses for a tower derivation and whether they
/// stabilize across the embeddings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerInnerness {
    pub verdict: InnerVerdict,
    /// The unique element a_k with D_k = ad(a_k), per level.
    pub witnesses: Vec<Vec<Rat>>,
    /// compatible[k] records whether the embedded level-k witness equals
    /// the level-(k+1) witness.
    pub compatible: Vec<bool>,
    /// First level from which the witnesses agree through every later
    /// embedding; set exactly when the verdict is Inner.
    pub stable_from: Option<usize>,
    /// The stable witness and its level, when inner.
    pub witness: Option<(Vec<Rat>, usize)>,
}

/// Solves each level's derivation as an adjoint and decides whether the
/// witnesses stabilize within the horizon of the tower. Levels must be
/// centre-free so that witnesses are unique.
pub fn tower_derivation_inner(
    tower: &Tower,
    derivation: &TowerDerivation,
) -> Result<TowerInnerness, TowerError> {
    if !validate_tower(tower).is_valid() {
        return Err(TowerError::InvalidTower);
    }
    let level_count = tower.levels.len();
    if derivation.per_level.len() != level_count {
        return Err(TowerError::DerivationCount {
            expected: level_count,
            found: derivation.per_level.len(),
        });
    }
    for (k, (level, d)) in tower.levels.iter().zip(&derivation.per_level).enumerate() {
        if d.rows() != level.dim() || d.cols() != level.dim() {
            return Err(TowerError::DerivationShape {
                level: k,
                rows: d.rows(),
                cols: d.cols(),
                dim: level.dim(),
            });
        }
        if !level.centre().is_zero() {
            return Err(TowerError::CentreNotTrivial { level: k });
        }
    }
    for (k, phi) in tower.embeddings.iter().enumerate() {
        let lower = &derivation.per_level[k];
        let upper = &derivation.per_level[k + 1];
        if lower * phi != phi * upper {
            return Err(TowerError::IncompatibleDerivation { level: k });
        }
    }

    let mut witnesses = Vec::with_capacity(level_count);
    for (k, (level, d)) in tower.levels.iter().zip(&derivation.per_level).enumerate() {
        let analysis = level.derivation_analyze(d).expect("shapes were checked");
        if !analysis.is_derivation {
            return Err(TowerError::NotDerivation { level: k });
        }
        match analysis.inner_witness {
            Some(a) => witnesses.push(a),
            None => return Err(TowerError::NoWitness { level: k }),
        }
    }

    let compatible: Vec<bool> = tower
        .embeddings
        .iter()
        .enumerate()
        .map(|(k, phi)| phi.apply_row(&witnesses[k]) == witnesses[k + 1])
        .collect();
    let stable_from = compatible
        .iter()
        .rposition(|&c| !c)
        .map_or(0, |last_bad| last_bad + 1);
    let inner = level_count == 1 || stable_from + 1 < level_count;
    if inner {
        let witness = witnesses[stable_from].clone();
        Ok(TowerInnerness {
            verdict: InnerVerdict::Inner,
            witnesses,
            compatible,
            stable_from: Some(stable_from),
            witness: Some((witness, stable_from)),
        })
    } else {
        Ok(TowerInnerness {
            verdict: InnerVerdict::NotInnerWithinHorizon,
            witnesses,
            compatible,
            stable_from: None,
            witness: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat_int;
    use crate::fixtures;
    use crate::structure::condition3_witness;
    use num_traits::Zero;

    fn v(entries: &[i64]) -> Vec<Rat> {
        entries.iter().map(|&n| rat_int(n)).collect()
    }

    #[test]
    fn constructed_towers_validate() {
        assert!(validate_tower(&fixtures::sl2_tower(5)).is_valid());
        assert!(validate_tower(&fixtures::nilpotent_tower(4)).is_valid());
    }

    #[test]
    fn broken_embeddings_are_reported() {
        let mut tower = fixtures::sl2_tower(2);
        tower.embeddings[0] = QMatrix::zero(3, 6);
        let report = validate_tower(&tower);
        assert_eq!(report.injectivity_failures, vec![0]);
        assert!(!report.is_valid());

        // Swap e and h in a level-to-itself embedding: injective but
        // bracket-incompatible.
        let swap = QMatrix::from_rows(vec![v(&[0, 1, 0]), v(&[1, 0, 0]), v(&[0, 0, 1])]).unwrap();
        let tower = Tower {
            levels: vec![fixtures::sl2(), fixtures::sl2()],
            embeddings: vec![swap],
        };
        let report = validate_tower(&tower);
        assert!(report.injectivity_failures.is_empty());
        assert!(report.homomorphism_failures.contains(&(0, 0, 1)));

        let counts = Tower {
            levels: vec![fixtures::sl2()],
            embeddings: vec![QMatrix::identity(3)],
        };
        assert!(!validate_tower(&counts).embedding_count_ok);

        let empty = Tower {
            levels: vec![],
            embeddings: vec![],
        };
        assert!(!validate_tower(&empty).is_valid());
    }

    #[test]
    fn semisimple_tower_verdict() {
        let verdicts = tower_verdicts(&fixtures::sl2_tower(5)).unwrap();
        assert_eq!(verdicts.levels.len(), 5);
        for level in &verdicts.levels {
            assert!(level.radical.is_zero());
            assert!(level.semisimple);
            assert!(!level.solvable);
            assert!(!level.killing_det.is_zero());
        }
        assert!(verdicts.radical_monotone.iter().all(|&m| m));
        assert_eq!(verdicts.limit, LimitVerdict::Semisimple);
    }

    #[test]
    fn nilpotent_tower_is_locally_solvable() {
        let verdicts = tower_verdicts(&fixtures::nilpotent_tower(4)).unwrap();
        for level in &verdicts.levels {
            assert!(level.solvable);
            assert!(level.radical.is_full());
            assert!(level.killing_det.is_zero());
        }
        assert_eq!(verdicts.limit, LimitVerdict::LocallySolvable);
    }

    #[test]
    fn single_level_solvable_tower() {
        let tower = Tower {
            levels: vec![fixtures::r2()],
            embeddings: vec![],
        };
        let verdicts = tower_verdicts(&tower).unwrap();
        assert!(verdicts.levels[0].radical.is_full());
        assert_eq!(verdicts.limit, LimitVerdict::LocallySolvable);
    }

    #[test]
    fn mixed_level_is_inconclusive() {
        let tower = Tower {
            levels: vec![fixtures::dsum(&[&fixtures::sl2(), &fixtures::r2()])],
            embeddings: vec![],
        };
        let verdicts = tower_verdicts(&tower).unwrap();
        assert_eq!(verdicts.limit, LimitVerdict::Inconclusive { level: 0 });
    }

    #[test]
    fn redundant_level_does_not_change_the_verdict() {
        for (tower, expected) in [
            (fixtures::sl2_tower(3), LimitVerdict::Semisimple),
            (fixtures::nilpotent_tower(3), LimitVerdict::LocallySolvable),
        ] {
            let baseline = tower_verdicts(&tower).unwrap().limit;
            assert_eq!(baseline, expected);
            let mut padded = tower.clone();
            let dim = padded.levels[1].dim();
            padded.levels.insert(1, padded.levels[1].clone());
            padded.embeddings.insert(1, QMatrix::identity(dim));
            assert!(validate_tower(&padded).is_valid());
            assert_eq!(tower_verdicts(&padded).unwrap().limit, expected);
        }
    }

    #[test]
    fn tower_decomposition_counts_and_matchings() {
        let tower = fixtures::sl2_tower(3);
        let d = tower_decompose(&tower, 0, 32).unwrap();
        assert_eq!(d.per_level.len(), 3);
        for (k, level) in d.per_level.iter().enumerate() {
            assert_eq!(level.ideals.len(), k + 1);
            assert!(level.ideals.iter().all(|i| i.dim() == 3));
        }
        for (k, matching) in d.matchings.iter().enumerate() {
            assert!(matching.injective);
            let expected: Vec<Option<usize>> = (0..=k).map(Some).collect();
            assert_eq!(matching.assignments, expected);
        }
        assert!(d.perp_intersections_zero.iter().all(|&z| z));
        assert!(d.coherent);
    }

    #[test]
    fn single_level_decompositions() {
        let two = Tower {
            levels: vec![fixtures::dsum(&[&fixtures::sl2(), &fixtures::so3()])],
            embeddings: vec![],
        };
        let d = tower_decompose(&two, 0, 32).unwrap();
        assert_eq!(d.per_level[0].ideals.len(), 2);
        assert!(d.perp_intersections_zero[0]);
        assert!(d.coherent);

        let one = Tower {
            levels: vec![fixtures::sl2()],
            embeddings: vec![],
        };
        let d = tower_decompose(&one, 0, 32).unwrap();
        assert_eq!(d.per_level[0].ideals.len(), 1);
        // A single full ideal has zero orthogonal complement.
        assert!(d.perp_intersections_zero[0]);
    }

    #[test]
    fn non_semisimple_levels_are_named() {
        let tower = Tower {
            levels: vec![fixtures::h3()],
            embeddings: vec![],
        };
        assert_eq!(
            tower_decompose(&tower, 0, 32),
            Err(TowerError::NotSemisimpleLevel { level: 0 })
        );
    }

    #[test]
    fn persistent_derivation_is_inner() {
        let tower = fixtures::sl2_tower(5);
        let derivation = fixtures::sl2_tower_derivation_persistent(&tower);
        let result = tower_derivation_inner(&tower, &derivation).unwrap();
        assert_eq!(result.verdict, InnerVerdict::Inner);
        assert_eq!(result.stable_from, Some(0));
        let (witness, level) = result.witness.unwrap();
        assert_eq!(level, 0);
        assert_eq!(witness, v(&[0, 1, 0]));
        assert!(result.compatible.iter().all(|&c| c));
    }

    #[test]
    fn fresh_derivation_is_not_inner_within_the_horizon() {
        let tower = fixtures::sl2_tower(5);
        let derivation = fixtures::sl2_tower_derivation_fresh(&tower);
        let result = tower_derivation_inner(&tower, &derivation).unwrap();
        assert_eq!(result.verdict, InnerVerdict::NotInnerWithinHorizon);
        assert!(result.witness.is_none());
        assert!(result.compatible.iter().all(|&c| !c));
    }

    #[test]
    fn zero_derivation_is_inner_with_witness_zero() {
        let tower = Tower {
            levels: vec![fixtures::sl2()],
            embeddings: vec![],
        };
        let derivation = TowerDerivation {
            per_level: vec![QMatrix::zero(3, 3)],
        };
        let result = tower_derivation_inner(&tower, &derivation).unwrap();
        assert_eq!(result.verdict, InnerVerdict::Inner);
        assert_eq!(result.witness, Some((v(&[0, 0, 0]), 0)));
    }

    #[test]
    fn innerness_rejects_bad_inputs() {
        let tower = fixtures::sl2_tower(2);
        let short = TowerDerivation {
            per_level: vec![QMatrix::zero(3, 3)],
        };
        assert_eq!(
            tower_derivation_inner(&tower, &short),
            Err(TowerError::DerivationCount {
                expected: 2,
                found: 1
            })
        );

        // Centres make witnesses non-unique, so those towers are
        // rejected for this operation.
        let centred = Tower {
            levels: vec![fixtures::h3()],
            embeddings: vec![],
        };
        let derivation = TowerDerivation {
            per_level: vec![QMatrix::zero(3, 3)],
        };
        assert_eq!(
            tower_derivation_inner(&centred, &derivation),
            Err(TowerError::CentreNotTrivial { level: 0 })
        );

        // The identity is never a derivation of a nonabelian algebra.
        let sl2_only = Tower {
            levels: vec![fixtures::sl2()],
            embeddings: vec![],
        };
        let identity = TowerDerivation {
            per_level: vec![QMatrix::identity(3)],
        };
        assert_eq!(
            tower_derivation_inner(&sl2_only, &identity),
            Err(TowerError::NotDerivation { level: 0 })
        );

        // A per-level family that does not commute with the embedding.
        let tower = fixtures::sl2_tower(2);
        let mut mismatched = fixtures::sl2_tower_derivation_persistent(&tower);
        let dim = tower.levels[1].dim();
        mismatched.per_level[1] = tower.levels[1]
            .ad(&{
                let mut h2 = vec![Rat::zero(); dim];
                h2[4] = rat_int(1);
                h2
            })
            .unwrap();
        assert_eq!(
            tower_derivation_inner(&tower, &mismatched),
            Err(TowerError::IncompatibleDerivation { level: 0 })
        );
    }

    #[test]
    fn embedded_ideals_witness_the_absorbing_chain_upstairs() {
        // The image of level 0 inside level 2 is the first summand, an
        // ideal, so the chain lands inside it after one bracket.
        let tower = fixtures::sl2_tower(3);
        let phi_01 = &tower.embeddings[0];
        let phi_12 = &tower.embeddings[1];
        let generators: Vec<Vec<Rat>> = (0..3)
            .map(|i| {
                let mut e = vec![Rat::zero(); 3];
                e[i] = rat_int(1);
                phi_12.apply_row(&phi_01.apply_row(&e))
            })
            .collect();
        let witness = condition3_witness(&tower.levels[2], &generators, 64).unwrap();
        assert_eq!(witness.exponent, 1);
        assert_eq!(witness.subalgebra.dim(), 3);
        for g in &generators {
            assert!(witness.subalgebra.contains(g));
        }
    }
}
