//! Exact rational scalars.
//!
//! Every quantity in this crate is a `BigRational`: arbitrary-precision
//! numerator, positive denominator, always in lowest terms. The helpers here
//! fix the external string format `"p/q"` (plain `"p"` for integers).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a scalar as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("empty scalar literal")]
    Empty,
    #[error("invalid integer part {0:?}")]
    BadInteger(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(s: &str) -> Result<Scalar, ScalarParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| ScalarParseError::BadInteger(s.to_string()))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| ScalarParseError::BadInteger(s.to_string()))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Scalar::new(num, den))
}

/// True if `x` is a non-negative integer.
pub fn is_nonneg_integer(x: &Scalar) -> bool {
    x.denom().is_one() && !x.numer().is_negative()
}
