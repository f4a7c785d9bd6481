//! Exact rational scalars.
//!
//! Everything downstream of the cocycle computation is integer-valued, but
//! kernel bases and Gram eliminations pass through rationals whose numerators
//! and denominators can grow well past machine word size. All arithmetic is
//! arbitrary precision; there is no floating point in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number in canonical form (denominator > 0, fully reduced).
///
/// Backed by `num_rational::BigRational`, which maintains exactly the
/// invariants we need: the constructor reduces by the gcd and keeps the
/// sign on the numerator.
pub type Rational = BigRational;

/// Rational from an integer numerator/denominator pair.
///
/// Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sign of a rational as -1, 0, +1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// True when `r` is an integer (denominator 1 in canonical form).
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}
