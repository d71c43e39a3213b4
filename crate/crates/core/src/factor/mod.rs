//! Factorization of univariate polynomials over Q.
//!
//! Classical Zassenhaus: primitive integer form, squarefree decomposition,
//! Berlekamp factorization modulo a small prime, quadratic Hensel lifting past
//! the Landau–Mignotte bound, then recombination of modular factors by subsets
//! of increasing size.

mod hensel;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::BigRational;
use crate::error::{Error, Result};
use crate::modp::{self, PolyP};
use crate::poly::{IntPoly, RatPoly};

/// Number of usable primes compared when choosing the factorization prime.
const PRIME_CANDIDATES: usize = 5;

/// `content * prod(factor^multiplicity)` equals the factored polynomial exactly.
///
/// Factors are primitive integer polynomials with positive leading coefficient,
/// listed by degree and then by coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigRational,
    pub factors: Vec<(RatPoly, u32)>,
}

impl Factorization {
    /// Expands the factorization back into a single polynomial.
    pub fn expand(&self) -> RatPoly {
        self.factors
            .iter()
            .fold(RatPoly::constant(self.content.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }

    /// Distinct irreducible factors, made monic.
    pub fn monic_factors(&self) -> Vec<RatPoly> {
        self.factors.iter().map(|(f, _)| f.monic()).collect()
    }

    /// Total number of irreducible factors counted with multiplicity.
    pub fn count_with_multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|(f, m)| core::iter::repeat_n(f.degree().unwrap_or(0), *m as usize))
            .collect()
    }
}

pub(crate) fn canonical_order(a: &RatPoly, b: &RatPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Complete factorization of `f` over Q into irreducible factors.
pub fn factor_over_q(f: &RatPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let (prim, content) = f.primitive_integer_form()?;
    let mut factors: Vec<(RatPoly, u32)> = Vec::new();
    for (part, mult) in prim.to_rat().squarefree_decomposition()? {
        let (part_prim, _) = part.primitive_integer_form()?;
        for g in factor_squarefree_primitive(&part_prim) {
            factors.push((g.to_rat(), mult));
        }
    }
    factors.sort_by(|a, b| canonical_order(&a.0, &b.0));
    Ok(Factorization { content, factors })
}

/// Whether `f` is irreducible over Q.
pub fn is_irreducible(f: &RatPoly) -> Result<bool> {
    let fact = factor_over_q(f)?;
    Ok(fact.factors.len() == 1 && fact.factors[0].1 == 1)
}

/// Rational roots of `f` with multiplicities, in increasing order.
pub fn rational_roots(f: &RatPoly) -> Result<Vec<(BigRational, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let mut roots: Vec<(BigRational, u32)> = factor_over_q(f)?
        .factors
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, m)| (-(&g.coeffs()[0] / &g.coeffs()[1]), m))
        .collect();
    roots.sort();
    Ok(roots)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Factors a squarefree primitive integer polynomial with positive leading coefficient.
pub(crate) fn factor_squarefree_primitive(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.degree().expect("nonconstant");
    if n <= 1 {
        return vec![f.clone()];
    }
    if f.coeffs()[0].is_zero() {
        // Squarefree, so z divides exactly once.
        let rest = IntPoly::from_coeffs(f.coeffs()[1..].to_vec());
        let mut out = vec![IntPoly::from_i64(&[0, 1])];
        out.extend(factor_squarefree_primitive(&rest));
        return out;
    }
    let lc = f.leading().unwrap().clone();

    let mut best: Option<(usize, u64, PolyP)> = None;
    let mut seen = 0;
    for p in small_primes() {
        if seen == PRIME_CANDIDATES {
            break;
        }
        if lc.is_multiple_of(&BigInt::from(p)) {
            continue;
        }
        let fp = modp::monic(&f.reduce_mod(p), p);
        if modp::degree(&modp::gcd(&fp, &modp::derivative(&fp, p), p)) != Some(0) {
            continue;
        }
        seen += 1;
        let count = modp::berlekamp_count(&fp, p);
        if count == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(c, _, _)| count < *c) {
            best = Some((count, p, fp));
        }
    }
    let (_, p, fp) = best.expect("some prime keeps a squarefree polynomial squarefree");
    let modular = modp::berlekamp_factors(&fp, p);

    // Any factor g of f satisfies |g_j| <= 2^n ||f||_2; scaled by lc in recombination.
    let bound = (BigInt::one() << n) * f.l2_norm_ceil() * lc.abs();
    let target = bound * 2u32;
    let mut rounds = 0u32;
    let mut modulus = BigInt::from(p);
    while modulus <= target {
        modulus = &modulus * &modulus;
        rounds += 1;
    }
    let lifted = hensel::lift(f.coeffs(), &modular, p, rounds);
    recombine(f, lifted, &modulus)
}

fn symmetric(c: &BigInt, m: &BigInt, half: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r > half {
        r - m
    } else {
        r
    }
}

/// Visits index subsets of `0..n` of size `k` in lexicographic order until `visit` returns true.
fn find_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return Some(idx);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn recombine(f: &IntPoly, mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<IntPoly> {
    let half = modulus / 2u32;
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1usize;
    while 2 * size <= lifted.len() {
        let lc = rest.leading().unwrap().clone();
        let scaled_const = &lc * &rest.coeffs()[0];
        let consts: Vec<BigInt> = lifted.iter().map(|u| u[0].clone()).collect();
        let mut quotient = None;
        let hit = find_subset(lifted.len(), size, |subset| {
            let ct = subset
                .iter()
                .fold(lc.clone(), |acc, &i| (acc * &consts[i]).mod_floor(modulus));
            let ct = symmetric(&ct, modulus, &half);
            if ct.is_zero() || !scaled_const.is_multiple_of(&ct) {
                return false;
            }
            let product = subset.iter().fold(vec![lc.clone()], |acc, &i| {
                hensel::mul(&acc, &lifted[i], modulus)
            });
            let candidate = IntPoly::from_coeffs(
                product
                    .iter()
                    .map(|c| symmetric(c, modulus, &half))
                    .collect(),
            )
            .primitive_part();
            match rest.div_exact(&candidate) {
                Some(q) => {
                    quotient = Some((candidate, q));
                    true
                }
                None => false,
            }
        });
        match hit {
            Some(subset) => {
                let (g, q) = quotient.take().unwrap();
                found.push(g);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if rest.degree().is_some_and(|d| d > 0) {
        found.push(rest.primitive_part());
    }
    found
}
