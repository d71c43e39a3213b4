//! Exact rationals, divisor arithmetic and height enumeration.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

use crate::error::{Error, Result};

/// Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    let mut m = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Naive height `max(|a|, b)` of a reduced fraction `a/b`.
pub fn naive_height(q: &BigRational) -> BigInt {
    let num = q.numer().abs();
    let den = q.denom().clone();
    if num > den {
        num
    } else {
        den
    }
}

/// Whether `2^n - 1` is prime, decided by the Lucas–Lehmer test.
pub fn is_mersenne_prime_exponent(n: u32) -> Result<bool> {
    match n {
        0 => Err(Error::ZeroArgument("N")),
        1 => Ok(false),
        2 => Ok(true),
        _ => {
            if (2..n)
                .take_while(|k| k * k <= n)
                .any(|k| n.is_multiple_of(k))
            {
                // 2^ab - 1 is divisible by 2^a - 1.
                return Ok(false);
            }
            let m = (BigUint::one() << n) - BigUint::one();
            let two = BigUint::from(2u32);
            let mut s = BigUint::from(4u32);
            for _ in 0..n - 2 {
                s = (&s * &s + &m - &two) % &m;
            }
            Ok(s.is_zero())
        }
    }
}

/// Every reduced rational of naive height at most `max_height`, ordered by
/// (height, numerator, denominator).
pub fn enumerate_rationals_by_height(max_height: u64) -> RationalsByHeight {
    RationalsByHeight {
        height: 0,
        max_height,
        pending: VecDeque::new(),
    }
}

/// Iterator returned by [`enumerate_rationals_by_height`].
#[derive(Clone, Debug)]
pub struct RationalsByHeight {
    height: u64,
    max_height: u64,
    pending: VecDeque<BigRational>,
}

impl RationalsByHeight {
    fn fill(&mut self) {
        while self.pending.is_empty() && self.height < self.max_height {
            self.height += 1;
            let h = self.height;
            for a in -(h as i64)..=(h as i64) {
                let abs = a.unsigned_abs();
                if abs == h {
                    for b in (1..=h).filter(|b| b.gcd(&h) == 1) {
                        self.pending.push_back(ratio(a, b));
                    }
                } else if abs.gcd(&h) == 1 {
                    self.pending.push_back(ratio(a, h));
                }
            }
        }
    }
}

fn ratio(a: i64, b: u64) -> BigRational {
    BigRational::new_raw(BigInt::from(a), BigInt::from(b))
}

impl Iterator for RationalsByHeight {
    type Item = BigRational;

    fn next(&mut self) -> Option<BigRational> {
        self.fill();
        self.pending.pop_front()
    }
}

/// Total order used for scans: (height, numerator, denominator).
pub fn height_order(a: &BigRational, b: &BigRational) -> core::cmp::Ordering {
    naive_height(a)
        .cmp(&naive_height(b))
        .then_with(|| a.numer().cmp(b.numer()))
        .then_with(|| a.denom().cmp(b.denom()))
}

/// Parses "a/b" or "a" with optional sign and surrounding whitespace.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Canonical text form: "a/b" with reduced terms, "a" for integers.
pub fn format_rational(q: &BigRational) -> String {
    let mut s = String::new();
    write_rational(&mut s, q);
    s
}

pub(crate) fn write_rational(out: &mut String, q: &BigRational) {
    if q.is_integer() {
        let _ = write!(out, "{}", q.numer());
    } else {
        let _ = write!(out, "{}/{}", q.numer(), q.denom());
    }
}

/// Splits a nonzero integer as `n = s^2 * k` with `k` squarefree (sign kept in `k`).
///
/// Trial division runs while `p^3` does not exceed the unfactored cofactor; what
/// remains then has at most two prime factors and is squarefree unless it is a
/// perfect square. Trial division stops at 2^20, and `None` is returned when the
/// leftover cofactor cannot be certified squarefree at that point.
pub fn square_decomposition(n: &BigInt) -> Option<(BigInt, BigInt)> {
    assert!(!n.is_zero(), "square_decomposition of zero");
    const LIMIT: u64 = 1 << 20;
    let mut rest = n.magnitude().clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p = 2u64;
    while p < LIMIT && BigUint::from(p * p * p) <= rest {
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        square *= BigUint::from(p).pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        square *= root;
    } else if rest < BigUint::from(p * p * p) {
        free *= rest;
    } else {
        return None;
    }
    let free = match n.sign() {
        Sign::Minus => -BigInt::from(free),
        _ => BigInt::from(free),
    };
    Some((BigInt::from(square), free))
}
