//! Small exact-arithmetic helpers shared by the other modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rational;

/// Largest integer `f` with `f <= x`.
pub fn floor_rational(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Nearest integer to `x`, ties rounded up (`⌊x + 1/2⌋`).
pub fn round_half_up(x: &Rational) -> BigInt {
    let two = BigInt::from(2);
    (x.numer() * &two + x.denom()).div_floor(&(x.denom() * two))
}

/// `⌊a / m⌋` for integers, rounding toward negative infinity.
pub fn floor_div_int(a: &BigInt, m: &BigInt) -> BigInt {
    a.div_floor(m)
}

/// Residue of `n` modulo `m` in `[0, m)`.
pub fn residue(n: i64, m: usize) -> usize {
    debug_assert!(m >= 1);
    n.rem_euclid(m as i64) as usize
}

pub fn lcm_usize(a: usize, b: usize) -> Option<usize> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / a.gcd(&b)).checked_mul(b)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> alloc::vec::Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn rational_from_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// Returns the integer value of `x` if its denominator is 1.
pub fn as_integer(x: &Rational) -> Option<BigInt> {
    if x.denom().is_one() {
        Some(x.numer().clone())
    } else {
        None
    }
}

pub(crate) fn is_zero(x: &Rational) -> bool {
    x.numer().is_zero()
}
