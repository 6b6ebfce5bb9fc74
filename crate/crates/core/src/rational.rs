//! Small exact-arithmetic helpers on [`BigRational`] shared across modules.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `x^n` for any integer exponent, exactly. Requires `x != 0` when `n < 0`.
pub fn pow_i64(x: &BigRational, n: i64) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let mag = n.unsigned_abs();
    let mut base = x.clone();
    let mut acc = BigRational::one();
    let mut e = mag;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            let sq = &base * &base;
            base = sq;
        }
    }
    if n < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Exact `n`-th root of a nonnegative rational, when one exists.
///
/// Returns `Some(r)` with `r^n == x` iff both numerator and denominator of
/// `x` (in lowest terms) are perfect `n`-th powers.
pub fn nth_root_exact(x: &BigRational, n: u32) -> Option<BigRational> {
    assert!(n >= 1, "root index must be >= 1");
    if x.is_negative() {
        return None;
    }
    if n == 1 {
        return Some(x.clone());
    }
    let num = nth_root_exact_int(x.numer(), n)?;
    let den = nth_root_exact_int(x.denom(), n)?;
    Some(BigRational::new(num, den))
}

fn nth_root_exact_int(x: &BigInt, n: u32) -> Option<BigInt> {
    let root = x.nth_root(n);
    if num_traits::pow(root.clone(), n as usize) == *x {
        Some(root)
    } else {
        None
    }
}

/// Largest integer `<= x`.
pub fn floor_int(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// True iff `x = k / 2^m` for some integers `k`, `m >= 0`.
pub fn is_dyadic(x: &BigRational) -> bool {
    let mut den = x.denom().clone();
    let two = BigInt::from(2);
    while den.is_even() {
        den /= &two;
    }
    den.is_one() || den == BigInt::from(-1)
}

/// Parses a rational from `num`, `num/den`, or a leading-sign variant.
///
/// The denominator must be nonzero; the result is reduced with a positive
/// denominator (the canonical form used by every text interface here).
pub fn parse_rational(s: &str) -> Result<BigRational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(String::from(num_str)))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| ParseRationalError::BadInteger(String::from(d)))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    Empty,
    BadInteger(String),
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Empty => write!(f, "empty rational literal"),
            ParseRationalError::BadInteger(s) => write!(f, "not an integer: `{s}`"),
            ParseRationalError::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

impl core::error::Error for ParseRationalError {}
