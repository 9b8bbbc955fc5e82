//! Fitting decomposition and primary components of a single operator.
//!
//! For a square operator `A` on `Q^d`, the kernel and the row space of
//! `A^d` split the space into the eventual null part and the part where
//! `A` is invertible. The trace of `A` on the invertible part coincides
//! with the ordinary trace, but it is computed honestly by restriction,
//! because downstream trace forms are defined through that quotient.

use crate::exactla::{canonicalize, kernel, Polynomial, QMatrix, Rat, Subspace};

/// The two invariant components of the Fitting decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingSplit {
    /// Vectors eventually killed by the operator: `ker A^d`.
    pub null_component: Subspace,
    /// The eventual image: the row space of `A^d`, on which the
    /// operator is invertible.
    pub one_component: Subspace,
}

/// Splits `Q^d` into the eventual kernel and eventual image of a square
/// operator.
pub fn fitting_decompose(a: &QMatrix) -> FittingSplit {
    assert!(a.is_square(), "Fitting decomposition needs a square operator");
    let d = a.rows();
    let stable = a.pow(d);
    let null_component = kernel(&stable);
    let one_component =
        canonicalize(&stable.to_rows(), d).expect("rows of a power have ambient length");
    debug_assert_eq!(null_component.dim() + one_component.dim(), d);
    debug_assert!(null_component.intersect(&one_component).is_zero());
    FittingSplit {
        null_component,
        one_component,
    }
}

/// The trace of `A` restricted to the invertible Fitting component.
/// Numerically equal to the ordinary trace, since the other component
/// only contributes nilpotent (traceless) action.
pub fn fitting_trace(a: &QMatrix) -> Rat {
    let split = fitting_decompose(a);
    if split.one_component.is_zero() {
        return Rat::from_integer(0.into());
    }
    let restricted = split
        .one_component
        .restrict_right_action(a)
        .expect("the eventual image is invariant");
    restricted.trace()
}

/// The primary component of `A` for a nonconstant polynomial `mu`:
/// vectors eventually killed by `mu(A)`.
pub fn mu_component(a: &QMatrix, mu: &Polynomial) -> Subspace {
    assert!(a.is_square(), "primary components need a square operator");
    assert!(!mu.is_constant(), "the defining polynomial must be nonconstant");
    let d = a.rows();
    kernel(&mu.eval_matrix(a).pow(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat_int, Rat};
    use crate::fixtures;
    use num_traits::Zero;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| rat_int(n)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn v(entries: &[i64]) -> Vec<Rat> {
        entries.iter().map(|&n| rat_int(n)).collect()
    }

    fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
        canonicalize(&rows.iter().map(|r| v(r)).collect::<Vec<_>>(), ambient).unwrap()
    }

    #[test]
    fn invertible_operator_has_trivial_null_part() {
        let split = fitting_decompose(&m(&[&[2, 0], &[0, 3]]));
        assert!(split.null_component.is_zero());
        assert!(split.one_component.is_full());
    }

    #[test]
    fn nilpotent_operator_is_all_null_part() {
        let split = fitting_decompose(&m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]));
        assert!(split.null_component.is_full());
        assert!(split.one_component.is_zero());
    }

    #[test]
    fn mixed_operator_splits() {
        // A Jordan-nilpotent block on {e1, e2} and scalar 5 on e3.
        let a = m(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 5]]);
        let split = fitting_decompose(&a);
        assert_eq!(split.null_component, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(split.one_component, span(3, &[&[0, 0, 1]]));
        assert_eq!(fitting_trace(&a), rat_int(5));
        assert_eq!(fitting_trace(&a), a.trace());
    }

    #[test]
    fn shear_plus_projection_splits() {
        // e1 -> e2, e2 -> 0, e3 -> e3.
        let a = m(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 1]]);
        let split = fitting_decompose(&a);
        assert_eq!(split.null_component, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(split.one_component, span(3, &[&[0, 0, 1]]));
    }

    #[test]
    fn primary_components_of_a_diagonal_operator() {
        let a = m(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 5]]);
        let at_two = mu_component(&a, &Polynomial::linear(&rat_int(2)));
        assert_eq!(at_two, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let at_five = mu_component(&a, &Polynomial::linear(&rat_int(5)));
        assert_eq!(at_five, span(3, &[&[0, 0, 1]]));
        let at_three = mu_component(&a, &Polynomial::linear(&rat_int(3)));
        assert!(at_three.is_zero());
    }

    #[test]
    fn primary_component_of_an_irrational_block() {
        // Rotation on {e2, e3}, zero on e1: x^2 + 1 captures the block.
        let a = m(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
        let quadratic = Polynomial::from_coeffs(v(&[1, 0, 1]));
        assert_eq!(mu_component(&a, &quadratic), span(3, &[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(mu_component(&a, &Polynomial::x()), span(3, &[&[1, 0, 0]]));
    }

    /// Builds a pair `(A, B)` such that iterating `C -> [C, A]` on `B`
    /// eventually gives zero: block scalars plus strictly upper
    /// triangular parts, both respecting the same block split, then a
    /// unimodular conjugation to hide the blocks.
    fn annihilating_pair(rng: &mut ChaCha8Rng) -> (QMatrix, QMatrix, Vec<Rat>) {
        let sizes = [2usize, rng.gen_range(2..=3)];
        let n: usize = sizes.iter().sum();
        let mut scalars = Vec::new();
        let mut a = QMatrix::zero(n, n);
        let mut b = QMatrix::zero(n, n);
        let mut offset = 0;
        for (bi, &size) in sizes.iter().enumerate() {
            let lambda = rat_int(bi as i64 * 3 + rng.gen_range(0..=1));
            scalars.push(lambda.clone());
            for i in 0..size {
                a.set(offset + i, offset + i, lambda.clone());
                for j in i + 1..size {
                    a.set(offset + i, offset + j, rat_int(rng.gen_range(-4i64..=4)));
                    b.set(offset + i, offset + j, rat_int(rng.gen_range(-4i64..=4)));
                }
            }
            offset += size;
        }
        let p = fixtures::unimodular(rng, n);
        let p_inv = p.inverse().unwrap();
        (&(&p * &a) * &p_inv, &(&p * &b) * &p_inv, scalars)
    }

    #[test]
    fn commutator_annihilated_pairs_leave_components_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..20 {
            let (a, b, scalars) = annihilating_pair(&mut rng);
            let n = a.rows();
            // Check the hypothesis: iterating C -> [C, A] from B dies.
            let mut c = b.clone();
            for _ in 0..n {
                c = &(&c * &a) - &(&a * &c);
            }
            assert!(c.is_zero(), "the constructed pair must satisfy the hypothesis");
            // Every primary component of A must be invariant under B.
            for lambda in &scalars {
                let comp = mu_component(&a, &Polynomial::linear(lambda));
                assert!(!comp.is_zero());
                for row in comp.basis() {
                    assert!(comp.contains(&b.apply_row(row)));
                }
            }
        }
    }

    prop_compose! {
        fn arb_entry()(n in -4i64..=4) -> Rat {
            rat_int(n)
        }
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec(proptest::collection::vec(arb_entry(), n), n)
            .prop_map(|data| QMatrix::from_rows(data).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn fitting_components_are_complementary_and_invariant(a in arb_matrix(4)) {
            let split = fitting_decompose(&a);
            prop_assert_eq!(split.null_component.dim() + split.one_component.dim(), 4);
            prop_assert!(split.null_component.intersect(&split.one_component).is_zero());
            // Both components are invariant under the operator.
            prop_assert!(split.null_component.restrict_right_action(&a).is_some());
            let restricted_one = split.one_component.restrict_right_action(&a);
            prop_assert!(restricted_one.is_some());
            // On the image component the operator is invertible; on the
            // null component it is nilpotent.
            if let Some(r) = restricted_one {
                if r.rows() > 0 {
                    prop_assert!(!r.determinant().is_zero());
                }
            }
            let on_null = split.null_component.restrict_right_action(&a).unwrap();
            prop_assert!(on_null.pow(split.null_component.dim()).is_zero());
        }

        #[test]
        fn fitting_trace_agrees_with_ordinary_trace(a in arb_matrix(4)) {
            prop_assert_eq!(fitting_trace(&a), a.trace());
        }
    }
}
