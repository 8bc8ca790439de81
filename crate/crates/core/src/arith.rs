//! Integer helpers shared by the classification and structure engines.
//!
//! All gcds are taken of absolute values and `gcd(0, n) = n`, so that
//! expressions such as `(n, f)` with `f = 0` evaluate to `n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn gcd(a: i64, b: i64) -> i64 {
    a.unsigned_abs().gcd(&b.unsigned_abs()) as i64
}

pub fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    gcd(gcd(a, b), c)
}

/// Least nonnegative residue of `a` modulo `n` (`n > 0`).
pub fn modn(a: i64, n: i64) -> i64 {
    a.rem_euclid(n)
}

pub fn big_pow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `|a^e - b^e|`.
pub fn abs_pow_diff(a: i64, b: i64, exp: u32) -> BigInt {
    (big_pow(a, exp) - big_pow(b, exp)).abs()
}

pub fn big_mod(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

/// Least nonnegative inverse of `a` modulo `m`, or `None` when `a` is not a unit.
/// Every integer is an inverse modulo 1, and we return 0 there.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let m = m.abs();
    if m.is_zero() {
        return None;
    }
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let ext = a.mod_floor(&m).extended_gcd(&m);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(&m))
}

pub fn mod_inverse_i64(a: i64, m: i64) -> Option<i64> {
    mod_inverse(&BigInt::from(a), &BigInt::from(m)).map(|x| i64::try_from(x).unwrap())
}

/// `base^exp mod m` for nonnegative `exp`, result in `[0, m)`.
pub fn mod_pow(base: &BigInt, exp: &BigInt, m: &BigInt) -> BigInt {
    if m.is_one() {
        return BigInt::zero();
    }
    base.mod_floor(m).modpow(exp, m)
}

pub fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.abs().gcd(&b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_conventions() {
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(-4, 6), 2);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd3(24, 9, 12), 3);
    }

    #[test]
    fn inverses_are_least_nonnegative() {
        assert_eq!(mod_inverse_i64(-1, 15), Some(14));
        assert_eq!(mod_inverse_i64(2, 63), Some(32));
        assert_eq!(mod_inverse_i64(5, 1), Some(0));
        assert_eq!(mod_inverse_i64(6, 9), None);
    }

    #[test]
    fn powers() {
        assert_eq!(abs_pow_diff(2, -1, 4), BigInt::from(15));
        assert_eq!(abs_pow_diff(3, 1, 3), BigInt::from(26));
        assert_eq!(mod_pow(&BigInt::from(-32), &BigInt::from(2), &BigInt::from(21)), BigInt::from(16));
    }
}
