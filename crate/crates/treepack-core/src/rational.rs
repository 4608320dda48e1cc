//! Exact rational arithmetic helpers.
//!
//! All geometry and all weights in this crate are arbitrary-precision
//! rationals. This module fixes the canonical text form `p/q` (lowest terms,
//! positive denominator, bare `p` allowed on input and used on output when
//! `q == 1`) and provides the handful of exact integer extractions the
//! constructions need: floors, ceilings, powers, and ceiling square roots.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Builds `n / d` (`d != 0`).
///
/// # Panics
/// Panics if `d == 0`; use only with constant denominators.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the integer rational `n` from an unsigned machine integer.
pub fn rat_u(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses the canonical text form: `p/q` or a bare integer `p`.
///
/// Whitespace is not accepted; the denominator must be nonzero. The result
/// is reduced, with a positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let num_str = parts.next().ok_or_else(bad)?;
    let p: BigInt = num_str.parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rational::from_integer(p)),
        Some(den_str) => {
            let q: BigInt = den_str.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Formats a rational canonically: `p/q` in lowest terms with `q > 0`, or a
/// bare integer when the denominator is 1.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        let mut s = x.numer().to_string();
        s.push('/');
        s.push_str(&x.denom().to_string());
        s
    }
}

/// Exact `x^e` for a nonnegative integer exponent.
pub fn pow_u32(x: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Exact floor of a rational, as a big integer.
pub fn floor_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Exact ceiling of a rational, as a big integer.
pub fn ceil_int(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Exact ceiling as `u64`; errors when negative or too large.
pub fn ceil_u64(x: &Rational, what: &'static str) -> Result<u64> {
    ceil_int(x).to_u64().ok_or(Error::Overflow(what))
}

/// Exact floor as `i64`; errors when out of range.
pub fn floor_i64(x: &Rational, what: &'static str) -> Result<i64> {
    floor_int(x).to_i64().ok_or(Error::Overflow(what))
}

/// Exact ceiling as `i64`; errors when out of range.
pub fn ceil_i64(x: &Rational, what: &'static str) -> Result<i64> {
    ceil_int(x).to_i64().ok_or(Error::Overflow(what))
}

/// Smallest nonnegative integer `m` with `m * m >= x`.
///
/// This is `ceil(sqrt(x))` for nonnegative `x`, computed without any
/// floating-point rounding: we start from the integer square root of
/// `floor(x)` (which is at most the answer) and step upward; at most two
/// steps are ever needed.
pub fn ceil_sqrt(x: &Rational) -> BigInt {
    if x.is_negative() || x.is_zero() {
        return BigInt::zero();
    }
    let mut m = floor_int(x).sqrt();
    while Rational::from_integer(&m * &m) < *x {
        m += 1;
    }
    m
}

/// `ceil(a / b)` on machine integers (`b > 0`).
pub fn ceil_div_u64(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Exact comparison key: `true` when `a / b >= c / d` with all inputs
/// nonnegative big integers and `b, d > 0`.
pub fn frac_ge(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> bool {
    a * d >= c * b
}

/// Sum of a slice of rationals.
pub fn sum(xs: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for x in xs {
        acc += x;
    }
    acc
}

/// `gcd`-style helper: true when `x` is an integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}
