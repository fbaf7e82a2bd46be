//! The scalar field: arbitrary-precision rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value
//! reduced with a positive denominator. The helpers here cover the integer
//! combinatorics the rest of the crate needs.

use alloc::string::String;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(-1)^n` as a rational.
pub fn sign_pow(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `base^e` for a possibly negative exponent. Panics on `0^e` with `e < 0`.
pub fn pow_i(base: &Rational, e: i64) -> Rational {
    if e >= 0 {
        Pow::pow(base, e as u64)
    } else {
        Pow::pow(base.recip(), e.unsigned_abs())
    }
}

/// True when the value is reduced and the denominator is positive.
pub fn is_canonical(r: &Rational) -> bool {
    let den = r.denom();
    if den.sign() != Sign::Plus {
        return false;
    }
    if r.numer().is_zero() {
        return den.is_one();
    }
    r.numer().abs().gcd(den).is_one()
}

/// Parses `"-3"`, `"3/4"`, `"-3/4"` or a terminating decimal such as `"1.25"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = whole.starts_with('-');
        let mut digits = String::from(whole.trim_start_matches('-'));
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.push_str(frac);
        let mut n: BigInt = digits.parse().ok()?;
        if neg {
            n = -n;
        }
        let d = Pow::pow(BigInt::from(10u32), frac.len() as u32);
        return Some(Rational::new(n, d));
    }
    let n: BigInt = t.parse().ok()?;
    Some(Rational::from_integer(n))
}
