//! Multifactor Hensel lifting over Z/p^k.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::modp::{self, PolyP};

/// Polynomial over Z/M with coefficients in `[0, M)`, lowest degree first.
pub(crate) type PolyM = Vec<BigInt>;

fn trim(mut f: PolyM) -> PolyM {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

pub(crate) fn reduce(f: &[BigInt], m: &BigInt) -> PolyM {
    trim(f.iter().map(|c| c.mod_floor(m)).collect())
}

fn lift_from_p(f: &PolyP) -> PolyM {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> PolyM {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|k| (a.get(k).unwrap_or(&zero) + b.get(k).unwrap_or(&zero)).mod_floor(m))
            .collect(),
    )
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> PolyM {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|k| (a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero)).mod_floor(m))
            .collect(),
    )
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> PolyM {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(&out, m)
}

fn scale(a: &[BigInt], s: &BigInt, m: &BigInt) -> PolyM {
    reduce(&a.iter().map(|c| c * s).collect::<Vec<_>>(), m)
}

/// Division by a monic polynomial over Z/M.
fn div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (PolyM, PolyM) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = alloc::vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let q = rem[k + db].mod_floor(m);
        if q.is_zero() {
            continue;
        }
        for (j, c) in b.iter().enumerate() {
            rem[k + j] -= &q * c;
        }
        quot[k] = q;
    }
    rem.truncate(db);
    (reduce(&quot, m), reduce(&rem, m))
}

/// One quadratic Hensel step: from `f = g*h mod m`, `s*g + t*h = 1 mod m`
/// to the same relations modulo `m^2`. `h` is monic.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (PolyM, PolyM, PolyM, PolyM) {
    let e = sub(f, &mul(g, h, m2), m2);
    let (q, r) = div_rem_monic(&mul(s, &e, m2), h, m2);
    let g1 = add(&add(g, &mul(t, &e, m2), m2), &mul(&q, g, m2), m2);
    let h1 = add(h, &r, m2);
    let b = sub(
        &add(&mul(s, &g1, m2), &mul(t, &h1, m2), m2),
        &[BigInt::one()],
        m2,
    );
    let (c, d) = div_rem_monic(&mul(s, &b, m2), &h1, m2);
    let s1 = sub(s, &d, m2);
    let t1 = sub(&sub(t, &mul(t, &b, m2), m2), &mul(&c, &g1, m2), m2);
    (g1, h1, s1, t1)
}

fn product_mod_p(factors: &[PolyP], p: u64) -> PolyP {
    factors
        .iter()
        .fold(alloc::vec![1u64], |acc, f| modp::mul(&acc, f, p))
}

/// Lifts `f = lc(f) * prod(factors) mod p` to monic factors modulo `p^(2^rounds)`.
///
/// `f` is given modulo the target modulus; `factors` are monic, pairwise coprime mod p.
pub(crate) fn lift(f: &[BigInt], factors: &[PolyP], p: u64, rounds: u32) -> Vec<PolyM> {
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    for _ in 0..rounds {
        modulus = &modulus * &modulus;
    }
    let f = reduce(f, &modulus);
    let mut out = Vec::with_capacity(factors.len());
    lift_rec(&f, factors, p, rounds, &modulus, &mut out);
    out
}

fn lift_rec(
    f: &[BigInt],
    factors: &[PolyP],
    p: u64,
    rounds: u32,
    modulus: &BigInt,
    out: &mut Vec<PolyM>,
) {
    let lc = f.last().expect("nonzero").clone();
    let inv = inverse_mod(&lc, modulus);
    if factors.len() == 1 {
        out.push(scale(f, &inv, modulus));
        return;
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_p = lc.mod_floor(&BigInt::from(p)).try_into().expect("fits");
    let g0 = modp::scale(&product_mod_p(left, p), lc_p, p);
    let h0 = product_mod_p(right, p);
    let (one, s0, t0) = modp::ext_gcd(&g0, &h0, p);
    debug_assert_eq!(one, alloc::vec![1u64]);
    let (mut g, mut h) = (lift_from_p(&g0), lift_from_p(&h0));
    let (mut s, mut t) = (lift_from_p(&s0), lift_from_p(&t0));
    let mut m = BigInt::from(p);
    for _ in 0..rounds {
        m = &m * &m;
        let fm = reduce(f, &m);
        (g, h, s, t) = hensel_step(&fm, &g, &h, &s, &t, &m);
    }
    let g_monic = scale(&g, &inv, modulus);
    lift_rec(&g_monic, left, p, rounds, modulus, out);
    lift_rec(&h, right, p, rounds, modulus, out);
}

/// Inverse of `a` modulo `m`, assuming `gcd(a, m) = 1`.
pub(crate) fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifts_a_split_quadratic() {
        // z^2 - 2 splits mod 7 with roots 3 and 4.
        let f: Vec<BigInt> = [-2, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let factors = alloc::vec![alloc::vec![4u64, 1], alloc::vec![3u64, 1]];
        let lifted = lift(&f, &factors, 7, 3);
        let m = BigInt::from(7u32).pow(8);
        let prod = mul(&lifted[0], &lifted[1], &m);
        assert_eq!(prod, reduce(&f, &m));
        let root = (-&lifted[0][0]).mod_floor(&m);
        assert_eq!(
            (&root * &root - BigInt::from(2)).mod_floor(&m),
            BigInt::zero()
        );
    }

    #[test]
    fn lifts_with_leading_coefficient() {
        // 6(z - 1)(z - 2)(z - 3).
        let f: Vec<BigInt> = [-36, 66, -36, 6].iter().map(|&c| BigInt::from(c)).collect();
        let factors = alloc::vec![
            alloc::vec![4u64, 1],
            alloc::vec![3u64, 1],
            alloc::vec![2u64, 1]
        ];
        let lifted = lift(&f, &factors, 5, 2);
        let m = BigInt::from(5u32).pow(4);
        let prod = lifted
            .iter()
            .fold(alloc::vec![BigInt::from(6)], |acc, g| mul(&acc, g, &m));
        assert_eq!(prod, reduce(&f, &m));
    }
}
