//! Univariate polynomials over the rationals, characteristic polynomials,
//! and rational root extraction.
//!
//! Characteristic polynomials come from the Faddeev-LeVerrier recurrence,
//! which is division-light and exact. Rational roots are found without
//! factoring large integers: a monic rational polynomial is rescaled to a
//! monic integer one, whose rational roots are integers dividing the
//! constant term, and every eigenvalue of a matrix is bounded by its
//! infinity norm, so only a short strip of integer candidates needs
//! testing. No attempt is made to factor the rootless cofactor.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::QMatrix;
use super::rational::Rat;

/// A polynomial with rational coefficients, stored lowest degree first
/// with no trailing zeros. The zero polynomial has an empty coefficient
/// list.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// The monic linear factor `x - root`.
    pub fn linear(root: &Rat) -> Self {
        Polynomial::from_coeffs(vec![-root.clone(), Rat::one()])
    }

    /// Builds from coefficients in ascending degree, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Coefficients in ascending degree; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention that constants (including zero) have
    /// degree zero.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Rat::is_one)
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, a: &QMatrix) -> QMatrix {
        assert!(a.is_square(), "polynomial evaluation needs a square matrix");
        let n = a.rows();
        let mut acc = QMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            let mut next = &acc * a;
            for i in 0..n {
                let d = next.get(i, i) + c;
                next.set(i, i, d);
            }
            acc = next;
        }
        acc
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Polynomial::from_coeffs(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Euclidean division: returns `(q, r)` with `self = q * divisor + r`
    /// and `deg r < deg divisor` (or `r = 0`). Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return (Polynomial::zero(), self.clone());
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quo = vec![Rat::zero(); qlen];
        for k in (0..qlen).rev() {
            let factor = &rem[k + dlen - 1] / &lead;
            if factor.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let delta = &factor * d;
                let updated = &rem[k + i] - &delta;
                rem[k + i] = updated;
            }
            quo[k] = factor;
        }
        (Polynomial::from_coeffs(quo), Polynomial::from_coeffs(rem))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !magnitude.is_one() || deg == 0;
            if show_coeff {
                write!(f, "{}", magnitude)?;
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", deg)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev-LeVerrier
/// recurrence. Always monic of degree `A.rows()`.
pub fn char_poly(a: &QMatrix) -> Polynomial {
    assert!(a.is_square(), "characteristic polynomial needs a square matrix");
    let n = a.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    if n == 0 {
        return Polynomial::from_coeffs(coeffs);
    }
    // m walks through the auxiliary matrices M_k of the recurrence.
    let mut m = QMatrix::identity(n);
    let mut am = a * &m;
    coeffs[n - 1] = -am.trace();
    for k in 2..=n {
        let mut shifted = am;
        for i in 0..n {
            let d = shifted.get(i, i) + &coeffs[n - k + 1];
            shifted.set(i, i, d);
        }
        m = shifted;
        am = a * &m;
        coeffs[n - k] = -(am.trace() / Rat::from_integer(BigInt::from(k)));
    }
    Polynomial::from_coeffs(coeffs)
}

/// The characteristic polynomial of a matrix together with its rational
/// roots and the rootless remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPolyFactors {
    /// `det(xI - A)`, monic.
    pub poly: Polynomial,
    /// Distinct rational roots with multiplicities, ascending by root.
    pub roots: Vec<(Rat, usize)>,
    /// The monic cofactor with no rational roots;
    /// `poly = cofactor * prod (x - r)^m`.
    pub cofactor: Polynomial,
}

/// Largest absolute value any eigenvalue of `a` can have: the maximum
/// absolute row sum.
fn infinity_norm(a: &QMatrix) -> Rat {
    let mut best = Rat::zero();
    for i in 0..a.rows() {
        let sum: Rat = a.row(i).iter().map(Rat::abs).sum();
        if sum > best {
            best = sum;
        }
    }
    best
}

/// Characteristic polynomial with all rational roots split off.
///
/// Intended for small matrices with moderate entries; the candidate scan
/// is linear in `lcm(denominators) * infinity_norm`.
pub fn char_poly_with_rational_roots(a: &QMatrix) -> CharPolyFactors {
    let poly = char_poly(a);
    let n = poly.degree();
    if n == 0 {
        return CharPolyFactors {
            poly: poly.clone(),
            roots: Vec::new(),
            cofactor: poly,
        };
    }

    // Split off x^v first: the zero root needs no candidate search.
    let zero_mult = poly
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("a monic polynomial is nonzero");
    let mut work = Polynomial::from_coeffs(poly.coeffs()[zero_mult..].to_vec());

    let mut roots: Vec<(Rat, usize)> = Vec::new();
    if zero_mult > 0 {
        roots.push((Rat::zero(), zero_mult));
    }

    if !work.is_constant() {
        for r in integer_scaled_roots(&work, &infinity_norm(a)) {
            let factor = Polynomial::linear(&r);
            let mut mult = 0usize;
            loop {
                let (quo, rem) = work.div_rem(&factor);
                if rem.is_zero() {
                    work = quo;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }

    roots.sort_by(|x, y| x.0.cmp(&y.0));
    CharPolyFactors {
        poly,
        roots,
        cofactor: work,
    }
}

/// Rational roots of a monic polynomial with nonzero constant term, all
/// of whose roots are bounded in absolute value by `bound`.
///
/// Substituting `x = y / c`, with `c` the lcm of the coefficient
/// denominators, turns the polynomial into a monic integer one whose
/// rational roots are integers dividing its constant term and bounded by
/// `c * bound`.
fn integer_scaled_roots(p: &Polynomial, bound: &Rat) -> Vec<Rat> {
    debug_assert!(p.is_monic());
    debug_assert!(!p.coeffs()[0].is_zero());
    let d = p.degree();
    let mut scale = BigInt::one();
    for c in p.coeffs() {
        scale = scale.lcm(c.denom());
    }
    // g(y) = scale^d * p(y / scale), a monic integer polynomial.
    let g: Vec<BigInt> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let scaled = c * Rat::from_integer(scale.pow((d - k) as u32));
            debug_assert!(scaled.denom().is_one());
            scaled.numer().clone()
        })
        .collect();
    let constant = g[0].clone();

    let scan_limit = {
        let scaled_bound = (bound * Rat::from_integer(scale.clone())).ceil().numer().clone();
        let by_constant = constant.abs();
        let tight = scaled_bound.min(by_constant);
        tight.to_u64().unwrap_or(u64::MAX)
    };
    assert!(
        scan_limit <= 50_000_000,
        "rational root scan bound {} is out of the supported range",
        scan_limit
    );

    let eval_g = |y: &BigInt| -> BigInt {
        let mut acc = BigInt::zero();
        for c in g.iter().rev() {
            acc = acc * y + c;
        }
        acc
    };

    let mut found = Vec::new();
    for magnitude in 1..=scan_limit {
        let m = BigInt::from(magnitude);
        if !(&constant % &m).is_zero() {
            continue;
        }
        for y in [m.clone(), -m] {
            if eval_g(&y).is_zero() {
                found.push(Rat::new(y, scale.clone()));
            }
        }
    }
    found
}
