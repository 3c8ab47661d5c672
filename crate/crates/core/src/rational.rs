//! Exact rational scalars.
//!
//! `BigRational` (re-exported from `num-rational`) is the universal exact
//! scalar of this crate: always stored in lowest terms with a positive
//! denominator, and all arithmetic is exact. This module adds the handful of
//! helpers the rest of the crate leans on: short constructors, `p/q` string
//! parsing and formatting, and fractional-part extraction.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

use crate::error::{Error, Result};

/// `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// Fractional part `{x} = x - floor(x)`, always in `[0, 1)`.
pub fn fract(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// Parses `p/q` or a bare integer. Whitespace is not accepted.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidSpec(format!("cannot parse rational from {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = den.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::InvalidSpec(format!("zero denominator in {s:?}")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

/// Formats as `p/q`, or just `p` for integers.
pub fn format_rational(x: &BigRational) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Denominator of `x` in lowest terms, as `u64`. Errors if it does not fit.
pub fn denominator_u64(x: &BigRational) -> Result<u64> {
    u64::try_from(x.denom().magnitude().clone())
        .map_err(|_| Error::InvalidSpec(format!("denominator of {x} exceeds u64")))
}

/// `(-1)^k` as a rational sign.
pub fn sign_pow(k: i64) -> BigRational {
    if k.rem_euclid(2) == 0 {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

/// `x^k` for integer `k` (negative exponents allowed for nonzero `x`).
pub fn rat_pow(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        x.pow(k as i32)
    } else {
        assert!(!x.is_zero(), "negative power of zero");
        x.pow(k as i32)
    }
}

/// Exact absolute value.
pub fn rat_abs(x: &BigRational) -> BigRational {
    x.abs()
}
