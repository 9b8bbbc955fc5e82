//! Arbitrary-precision rational scalars and their text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// The scalar type used everywhere in this crate: an arbitrary-precision
/// rational number, always stored in lowest terms.
pub type Rat = BigRational;

/// Builds the rational `n / d` from machine integers.
///
/// Panics if `d == 0`; this is a convenience for literals in code and
/// tests, not a parser.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "rational literal with zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Errors from [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part {part:?} in rational literal {input:?}")]
    BadInteger { input: String, part: String },
    #[error("zero denominator in rational literal {input:?}")]
    ZeroDenominator { input: String },
    #[error("too many '/' in rational literal {input:?}")]
    TooManySlashes { input: String },
}

/// Parses `"p/q"` or `"p"` with optional sign into a rational in lowest
/// terms. Whitespace around the literal or the slash is accepted;
/// `"1/0"` is rejected rather than panicking downstream.
pub fn parse_rational(s: &str) -> Result<Rat, RationalParseError> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let mut parts = trimmed.split('/');
    let numer_part = parts.next().unwrap_or("").trim();
    let denom_part = parts.next().map(str::trim);
    if parts.next().is_some() {
        return Err(RationalParseError::TooManySlashes {
            input: s.to_string(),
        });
    }
    let numer: BigInt = numer_part
        .parse()
        .map_err(|_| RationalParseError::BadInteger {
            input: s.to_string(),
            part: numer_part.to_string(),
        })?;
    let denom: BigInt = match denom_part {
        None => BigInt::from(1),
        Some(d) => d.parse().map_err(|_| RationalParseError::BadInteger {
            input: s.to_string(),
            part: d.to_string(),
        })?,
    };
    if denom == BigInt::from(0) {
        return Err(RationalParseError::ZeroDenominator {
            input: s.to_string(),
        });
    }
    Ok(Rat::new(numer, denom))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
/// This is the exact inverse of [`parse_rational`] on its output.
pub fn format_rational(r: &Rat) -> String {
    r.to_string()
}
