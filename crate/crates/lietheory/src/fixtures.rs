//! A catalog of concrete algebras, representations and towers.
//!
//! Everything downstream leans on these: unit tests use the small named
//! algebras as frozen oracles, property tests draw from them, and the
//! randomized corpus pairs each generated algebra with ground truth
//! (solvability, radical, semisimplicity) known from how it was built
//! rather than from the code under test.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactla::{canonicalize, rat_int, solve_linear, QMatrix, Rat, Subspace};
use crate::fitting_weights::Representation;
use crate::liecore::LieAlgebra;
use crate::tower::{Tower, TowerDerivation};

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The split simple algebra of traceless 2x2 matrices, basis `(e, h, f)`
/// with `[h, e] = 2e`, `[e, f] = h`, `[h, f] = -2f`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_sparse_brackets(
        labels(&["e", "h", "f"]),
        &[
            (1, 0, vec![(0, rat_int(2))]),
            (0, 2, vec![(1, rat_int(1))]),
            (1, 2, vec![(2, rat_int(-2))]),
        ],
    )
    .expect("sl2 table is well formed")
}

/// The rotation algebra: `[x, y] = z`, `[y, z] = x`, `[z, x] = y`.
/// Simple over `Q`, but its Cartan subalgebras have no rational
/// eigenvalues, which makes it the standard source of NotSplit outcomes.
pub fn so3() -> LieAlgebra {
    LieAlgebra::from_sparse_brackets(
        labels(&["x", "y", "z"]),
        &[
            (0, 1, vec![(2, rat_int(1))]),
            (1, 2, vec![(0, rat_int(1))]),
            (2, 0, vec![(1, rat_int(1))]),
        ],
    )
    .expect("so3 table is well formed")
}

/// The nonabelian two-dimensional algebra `[x, y] = y`: solvable but not
/// nilpotent.
pub fn r2() -> LieAlgebra {
    LieAlgebra::from_sparse_brackets(
        labels(&["x", "y"]),
        &[(0, 1, vec![(1, rat_int(1))])],
    )
    .expect("r2 table is well formed")
}

/// The Heisenberg algebra `[x, y] = z` with `z` central.
pub fn h3() -> LieAlgebra {
    LieAlgebra::from_sparse_brackets(
        labels(&["x", "y", "z"]),
        &[(0, 1, vec![(2, rat_int(1))])],
    )
    .expect("h3 table is well formed")
}

/// Strictly upper triangular 3x3 matrices with the elementary-matrix
/// basis `(e12, e13, e23)`; isomorphic to [`h3`] but remembered with its
/// matrix labels and natural module.
pub fn n3() -> LieAlgebra {
    strict_upper(3)
}

/// The abelian algebra of dimension `n`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian((0..n).map(|i| format!("a{}", i + 1)).collect())
}

/// The elementary matrix `E_ij` (one-based) as an `n x n` right-action
/// operator.
fn elementary(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zero(n, n);
    m.set(i - 1, j - 1, rat_int(1));
    m
}

/// Builds a Lie algebra from linearly independent matrices closed under
/// the commutator, expressing each commutator back in the given basis.
fn matrix_algebra(mats: &[QMatrix], names: Vec<String>) -> LieAlgebra {
    let dim = mats.len();
    let stacked = QMatrix::from_rows(mats.iter().map(QMatrix::flatten).collect())
        .expect("flattened matrices are rectangular");
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let commutator = &(&mats[i] * &mats[j]) - &(&mats[j] * &mats[i]);
            let coords = solve_linear(&stacked, &commutator.flatten())
                .expect("dimensions agree")
                .expect("the commutator stays inside the span");
            let terms: Vec<(usize, Rat)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect();
            if !terms.is_empty() {
                brackets.push((i, j, terms));
            }
        }
    }
    LieAlgebra::from_sparse_brackets(names, &brackets).expect("matrix commutators close")
}

/// Basis matrices and labels for the strictly upper triangular algebra.
fn strict_upper_basis(n: usize) -> (Vec<QMatrix>, Vec<String>) {
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            mats.push(elementary(n, i, j));
            names.push(format!("e{}{}", i, j));
        }
    }
    (mats, names)
}

/// Strictly upper triangular `n x n` matrices: nilpotent of dimension
/// `n(n-1)/2`.
pub fn strict_upper(n: usize) -> LieAlgebra {
    let (mats, names) = strict_upper_basis(n);
    matrix_algebra(&mats, names)
}

/// Upper triangular `n x n` matrices including the diagonal: solvable,
/// not nilpotent for `n >= 2`, dimension `n(n+1)/2`.
pub fn upper_triangular(n: usize) -> LieAlgebra {
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            mats.push(elementary(n, i, j));
            names.push(format!("e{}{}", i, j));
        }
    }
    matrix_algebra(&mats, names)
}

/// Direct sum of several algebras. With more than one summand, labels
/// get a one-based summand suffix so they stay distinct: `e#1`, `e#2`.
pub fn dsum(parts: &[&LieAlgebra]) -> LieAlgebra {
    assert!(!parts.is_empty(), "direct sum of no algebras");
    let mut sum = parts[0].clone();
    for part in &parts[1..] {
        sum = sum.direct_sum(part);
    }
    if parts.len() > 1 {
        let mut new_labels = Vec::with_capacity(sum.dim());
        for (k, part) in parts.iter().enumerate() {
            for label in part.labels() {
                new_labels.push(format!("{}#{}", label, k + 1));
            }
        }
        sum = sum
            .with_labels(new_labels)
            .expect("label count matches dimension");
    }
    sum
}

/// The standard two-dimensional module for [`sl2`], with right-action
/// operators.
pub fn natural_sl2_rep() -> Representation {
    let e = elementary(2, 1, 2);
    let f = elementary(2, 2, 1);
    let mut h = QMatrix::zero(2, 2);
    h.set(0, 0, rat_int(1));
    h.set(1, 1, rat_int(-1));
    Representation::new(sl2(), 2, vec![e, h, f]).expect("the natural module is a representation")
}

/// Strictly upper triangular matrices acting on rows of `Q^n`.
pub fn strict_upper_natural_rep(n: usize) -> Representation {
    let (mats, _) = strict_upper_basis(n);
    Representation::new(strict_upper(n), n, mats)
        .expect("matrix algebras act on their own columns")
}

/// The natural three-dimensional module for [`n3`].
pub fn n3_natural_rep() -> Representation {
    strict_upper_natural_rep(3)
}

/// The representation sending everything to zero.
pub fn zero_rep(algebra: LieAlgebra, module_dim: usize) -> Representation {
    let ops = vec![QMatrix::zero(module_dim, module_dim); algebra.dim()];
    Representation::new(algebra, module_dim, ops).expect("zero operators always commute")
}

/// An ascending tower whose level `k` (zero-based) is the direct sum of
/// `k + 1` copies of [`sl2`], with inclusion embeddings onto the first
/// summands.
pub fn sl2_tower(levels: usize) -> Tower {
    assert!(levels >= 1, "a tower needs at least one level");
    let base = sl2();
    let mut algebras = Vec::with_capacity(levels);
    for k in 0..levels {
        let copies: Vec<&LieAlgebra> = (0..=k).map(|_| &base).collect();
        algebras.push(dsum(&copies));
    }
    let embeddings = (0..levels - 1)
        .map(|k| {
            let from = 3 * (k + 1);
            let to = 3 * (k + 2);
            QMatrix::from_fn(from, to, |i, j| {
                if i == j {
                    rat_int(1)
                } else {
                    rat_int(0)
                }
            })
        })
        .collect();
    Tower {
        levels: algebras,
        embeddings,
    }
}

/// An ascending tower of strictly upper triangular algebras, sizes
/// `3, 4, ...`, each embedded in the next by `E_ij -> E_ij`. Every level
/// is nilpotent.
pub fn nilpotent_tower(levels: usize) -> Tower {
    assert!(levels >= 1, "a tower needs at least one level");
    let index_of = |i: usize, j: usize, n: usize| -> usize {
        // Position of E_ij (one-based, i < j) in the row-by-row basis
        // order of strict_upper(n).
        let earlier: usize = (1..i).map(|r| n - r).sum();
        earlier + (j - i - 1)
    };
    let algebras: Vec<LieAlgebra> = (0..levels).map(|k| strict_upper(k + 3)).collect();
    let embeddings = (0..levels - 1)
        .map(|k| {
            let n_small = k + 3;
            let n_big = k + 4;
            let from = n_small * (n_small - 1) / 2;
            let to = n_big * (n_big - 1) / 2;
            let mut m = QMatrix::zero(from, to);
            for i in 1..=n_small {
                for j in i + 1..=n_small {
                    m.set(index_of(i, j, n_small), index_of(i, j, n_big), rat_int(1));
                }
            }
            m
        })
        .collect();
    Tower {
        levels: algebras,
        embeddings,
    }
}

/// A derivation of the sl2 tower given level-wise as the adjoint of `h`
/// in the first summand; the witness embeds compatibly forever.
pub fn sl2_tower_derivation_persistent(t: &Tower) -> TowerDerivation {
    let per_level = t
        .levels
        .iter()
        .map(|level| {
            let mut h = vec![rat_int(0); level.dim()];
            h[1] = rat_int(1);
            level.ad(&h).expect("h has the right length")
        })
        .collect();
    TowerDerivation { per_level }
}

/// A derivation of the sl2 tower whose inner witness at level `k` is
/// `h#1 + ... + h#(k+1)`: compatible as a derivation, but the witness
/// changes at every level, so no stable witness exists in the horizon.
pub fn sl2_tower_derivation_fresh(t: &Tower) -> TowerDerivation {
    let per_level = t
        .levels
        .iter()
        .map(|level| {
            let mut a = vec![rat_int(0); level.dim()];
            for summand in 0..level.dim() / 3 {
                a[3 * summand + 1] = rat_int(1);
            }
            level.ad(&a).expect("witness has the right length")
        })
        .collect();
    TowerDerivation { per_level }
}

/// A random invertible matrix with determinant of absolute value one,
/// built from elementary row operations starting at the identity.
pub fn unimodular(rng: &mut impl Rng, n: usize) -> QMatrix {
    let mut m = QMatrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..3 * n {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                while j == i {
                    j = rng.gen_range(0..n);
                }
                let c = rat_int(rng.gen_range(-3i64..=3));
                // Add c * row j to row i.
                for col in 0..n {
                    let updated = m.get(i, col) + &(&c * m.get(j, col));
                    m.set(i, col, updated);
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                while j == i {
                    j = rng.gen_range(0..n);
                }
                for col in 0..n {
                    let a = m.get(i, col).clone();
                    let b = m.get(j, col).clone();
                    m.set(i, col, b);
                    m.set(j, col, a);
                }
            }
            _ => {
                let i = rng.gen_range(0..n);
                for col in 0..n {
                    let negated = -m.get(i, col);
                    m.set(i, col, negated);
                }
            }
        }
    }
    m
}

/// One algebra with construction-known structure facts.
pub struct CorpusEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub solvable: bool,
    pub radical: Subspace,
    pub semisimple: bool,
}

fn solvable_pool() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("r2", r2()),
        ("h3", h3()),
        ("n3", n3()),
        ("t2", upper_triangular(2)),
        ("su4", strict_upper(4)),
        ("ab1", abelian(1)),
        ("ab2", abelian(2)),
        ("ab3", abelian(3)),
    ]
}

fn semisimple_pool() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("sl2", sl2()),
        ("so3", so3()),
        ("sl2+sl2", dsum(&[&sl2(), &sl2()])),
        ("sl2+so3", dsum(&[&sl2(), &so3()])),
        ("so3+so3", dsum(&[&so3(), &so3()])),
    ]
}

/// Builds an entry by summing a solvable block (first) and a semisimple
/// block, then hiding the splitting with a unimodular change of basis.
/// The radical is the image of the solvable block's coordinate span.
fn scrambled_entry(
    name: String,
    solvable_part: Option<&LieAlgebra>,
    semisimple_part: Option<&LieAlgebra>,
    rng: &mut impl Rng,
) -> CorpusEntry {
    let plain = match (solvable_part, semisimple_part) {
        (Some(s), Some(t)) => dsum(&[s, t]),
        (Some(s), None) => s.clone(),
        (None, Some(t)) => t.clone(),
        (None, None) => unreachable!("an entry needs at least one block"),
    };
    let dim = plain.dim();
    let solv_dim = solvable_part.map_or(0, LieAlgebra::dim);
    let p = unimodular(rng, dim);
    let algebra = plain.change_basis(&p).expect("unimodular matrices are invertible");
    let p_inv = p.inverse().expect("unimodular matrices are invertible");
    // Old-coordinate vector v reads v * P^{-1} in the new basis, so the
    // radical (the first solv_dim standard vectors before scrambling) is
    // spanned by the leading rows of P^{-1}.
    let radical_rows: Vec<Vec<Rat>> = (0..solv_dim).map(|i| p_inv.row(i).to_vec()).collect();
    let radical = canonicalize(&radical_rows, dim).expect("rows have ambient length");
    CorpusEntry {
        name,
        algebra,
        solvable: semisimple_part.is_none(),
        radical,
        semisimple: solvable_part.is_none(),
    }
}

/// A deterministic corpus of at least 200 algebras of dimension at most
/// 8, mixing solvable, semisimple and mixed direct sums, most of them
/// scrambled by random unimodular changes of basis.
pub fn corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let solvables = solvable_pool();
    let semisimples = semisimple_pool();
    let mut entries = Vec::new();

    // Plain catalog entries in their natural bases.
    for (name, alg) in &solvables {
        let dim = alg.dim();
        entries.push(CorpusEntry {
            name: (*name).to_string(),
            algebra: alg.clone(),
            solvable: true,
            radical: Subspace::full(dim),
            semisimple: false,
        });
    }
    for (name, alg) in &semisimples {
        entries.push(CorpusEntry {
            name: (*name).to_string(),
            algebra: alg.clone(),
            solvable: false,
            radical: Subspace::zero(alg.dim()),
            semisimple: true,
        });
    }

    // Scrambled entries: solvable alone, semisimple alone, and mixed
    // sums, capped at dimension 8.
    let mut counter = 0usize;
    while entries.len() < 208 {
        counter += 1;
        match rng.gen_range(0..3) {
            0 => {
                let (name, alg) = &solvables[rng.gen_range(0..solvables.len())];
                entries.push(scrambled_entry(
                    format!("{}~{}", name, counter),
                    Some(alg),
                    None,
                    &mut rng,
                ));
            }
            1 => {
                let (name, alg) = &semisimples[rng.gen_range(0..semisimples.len())];
                entries.push(scrambled_entry(
                    format!("{}~{}", name, counter),
                    None,
                    Some(alg),
                    &mut rng,
                ));
            }
            _ => {
                let (sname, salg) = &solvables[rng.gen_range(0..solvables.len())];
                let (tname, talg) = &semisimples[rng.gen_range(0..semisimples.len())];
                if salg.dim() + talg.dim() > 8 {
                    continue;
                }
                entries.push(scrambled_entry(
                    format!("{}+{}~{}", sname, tname, counter),
                    Some(salg),
                    Some(talg),
                    &mut rng,
                ));
            }
        }
    }
    entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_large_diverse_and_valid() {
        let entries = corpus(7);
        assert!(entries.len() >= 200);
        assert!(entries.iter().all(|e| e.algebra.dim() <= 8));
        assert!(entries.iter().any(|e| e.solvable));
        assert!(entries.iter().any(|e| e.semisimple));
        assert!(entries
            .iter()
            .any(|e| !e.solvable && !e.semisimple && !e.radical.is_zero()));
        // Spot-check validity across the corpus; a change of basis of a
        // Lie algebra must still be a Lie algebra.
        for entry in entries.iter().step_by(17) {
            assert!(
                entry.algebra.validate().is_valid(),
                "corpus entry {} is not a Lie algebra",
                entry.name
            );
        }
    }

    #[test]
    fn corpus_is_deterministic_per_seed() {
        let a = corpus(3);
        let b = corpus(3);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.algebra, y.algebra);
            assert_eq!(x.radical, y.radical);
        }
    }

    #[test]
    fn scrambled_radicals_are_ideals() {
        for entry in corpus(11).iter().filter(|e| !e.radical.is_zero()).take(20) {
            assert!(
                entry.algebra.is_ideal(&entry.radical),
                "claimed radical of {} is not even an ideal",
                entry.name
            );
            assert!(entry
                .algebra
                .is_solvable_subalgebra(&entry.radical)
                .unwrap());
        }
    }

    #[test]
    fn unimodular_matrices_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=6 {
            let m = unimodular(&mut rng, n);
            let det = m.determinant();
            assert!(det == rat_int(1) || det == rat_int(-1), "det = {}", det);
        }
    }

    #[test]
    fn strict_upper_matches_heisenberg_in_dimension_three() {
        let alg = strict_upper(3);
        assert_eq!(alg.dim(), 3);
        assert!(alg.validate().is_valid());
        // [e12, e23] = e13 and e13 is central.
        let bracket = alg.bracket_basis(0, 2);
        assert_eq!(bracket[1], rat_int(1));
        assert_eq!(alg.centre().dim(), 1);
    }

    #[test]
    fn upper_triangular_is_solvable_not_nilpotent() {
        let alg = upper_triangular(2);
        assert!(alg.validate().is_valid());
        assert!(alg
            .is_solvable_subalgebra(&Subspace::full(alg.dim()))
            .unwrap());
        assert!(!alg
            .is_nilpotent_subalgebra(&Subspace::full(alg.dim()))
            .unwrap());
    }

    #[test]
    fn towers_have_matching_shapes() {
        let t = sl2_tower(4);
        assert_eq!(t.levels.len(), 4);
        assert_eq!(t.embeddings.len(), 3);
        assert_eq!(t.levels[2].dim(), 9);
        assert_eq!(t.embeddings[2].rows(), 9);
        assert_eq!(t.embeddings[2].cols(), 12);

        let n = nilpotent_tower(3);
        assert_eq!(n.levels[0].dim(), 3);
        assert_eq!(n.levels[1].dim(), 6);
        assert_eq!(n.levels[2].dim(), 10);
    }
}
