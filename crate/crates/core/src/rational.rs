//! Exact rational scalars.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

pub type Rational = num_rational::BigRational;

/// Shorthand constructor `n/d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or `p` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| ParseError::new(s, "malformed rational"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| ParseError::new(s, "malformed rational"))?;
    if den.is_zero() {
        return Err(ParseError::new(s, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `p` or `p/q` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats `|r|` (sign handled by the caller).
pub(crate) fn format_abs(r: &Rational) -> String {
    format_rational(&r.abs())
}
