//! Arithmetic in `Q[z]/(f)` for irreducible `f`, minimal polynomials and
//! degrees of subfields generated by a set of elements.

mod quadratic;

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use quadratic::{as_quadratic, QuadraticElement};

use crate::arith::BigRational;
use crate::error::{Error, Result};
use crate::modp::{self, PolyP};
use crate::poly::RatPoly;

/// The field `Q[z]/(f)`. The modulus is stored monic and is assumed irreducible.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    modulus: RatPoly,
    /// `z^(D+j) mod f = table[j] / table_den` for `j = 0, …, D-2`.
    table: Vec<Vec<BigInt>>,
    table_den: BigInt,
}

impl PartialEq for QuotientAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

impl Eq for QuotientAlgebra {}

impl QuotientAlgebra {
    pub fn new(modulus: &RatPoly) -> Result<Arc<Self>> {
        let dim = match modulus.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            Some(dim) => dim,
        };
        let modulus = modulus.monic();
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(dim.saturating_sub(1));
        let mut row: Vec<BigRational> = modulus.coeffs()[..dim].iter().map(|c| -c).collect();
        for _ in 1..dim {
            rows.push(row.clone());
            // Multiply by z and fold the overflowing z^D term back in.
            let top = row.pop().unwrap();
            row.insert(0, BigRational::zero());
            if !top.is_zero() {
                for (x, c) in row.iter_mut().zip(modulus.coeffs()) {
                    *x -= &top * c;
                }
            }
        }
        let table_den = rows
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let table = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|q| q.numer() * (&table_den / q.denom()))
                    .collect()
            })
            .collect();
        Ok(Arc::new(QuotientAlgebra {
            modulus,
            table,
            table_den,
        }))
    }

    pub fn modulus(&self) -> &RatPoly {
        &self.modulus
    }

    /// `D = [Q[z]/(f) : Q]`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// The class of `z`.
    pub fn generator(self: &Arc<Self>) -> AlgElement {
        AlgElement::new(self, RatPoly::identity())
    }

    pub fn constant(self: &Arc<Self>, q: BigRational) -> AlgElement {
        AlgElement::new(self, RatPoly::constant(q))
    }

    pub fn zero(self: &Arc<Self>) -> AlgElement {
        self.constant(BigRational::zero())
    }

    pub fn one(self: &Arc<Self>) -> AlgElement {
        self.constant(BigRational::one())
    }

    /// The modulus over F_p, if no denominator vanishes there.
    fn reduce_mod(&self, p: u64) -> Option<PolyP> {
        reduce_coeffs(self.modulus.coeffs(), p)
    }
}

fn reduce_rational(q: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = q.denom().mod_floor(&pb);
    if den.is_zero() {
        return None;
    }
    let num = q.numer().mod_floor(&pb);
    let (num, den): (u64, u64) = (num.try_into().ok()?, den.try_into().ok()?);
    Some(num * modp::inv_mod(den, p) % p)
}

fn reduce_coeffs(coeffs: &[BigRational], p: u64) -> Option<PolyP> {
    let v = coeffs
        .iter()
        .map(|q| reduce_rational(q, p))
        .collect::<Option<Vec<u64>>>()?;
    Some(modp::normalized(v))
}

/// An element of a [`QuotientAlgebra`]: `num / den` with `num` a polynomial of
/// degree `< D`, `den > 0` and no common factor between `den` and the content.
#[derive(Clone, Debug)]
pub struct AlgElement {
    parent: Arc<QuotientAlgebra>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for AlgElement {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den && same_parent(&self.parent, &other.parent)
    }
}

impl Eq for AlgElement {}

fn same_parent(a: &Arc<QuotientAlgebra>, b: &Arc<QuotientAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a.modulus == b.modulus
}

impl AlgElement {
    /// Reduces `rep` modulo the parent's modulus.
    pub fn new(parent: &Arc<QuotientAlgebra>, rep: RatPoly) -> Self {
        let rep = if rep.degree() >= parent.modulus.degree() {
            rep.rem(&parent.modulus).expect("nonzero modulus")
        } else {
            rep
        };
        let den = rep
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = rep
            .coeffs()
            .iter()
            .map(|q| q.numer() * (&den / q.denom()))
            .collect();
        Self::normalized(parent, num, den)
    }

    fn normalized(parent: &Arc<QuotientAlgebra>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        while num.last().is_some_and(Zero::is_zero) {
            num.pop();
        }
        if num.is_empty() {
            den = BigInt::one();
        } else {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if den.is_negative() {
                g = -g;
            }
            if !g.is_one() {
                for c in num.iter_mut() {
                    *c /= &g;
                }
                den /= &g;
            }
        }
        AlgElement {
            parent: Arc::clone(parent),
            num,
            den,
        }
    }

    pub fn parent(&self) -> &Arc<QuotientAlgebra> {
        &self.parent
    }

    /// The representative polynomial of degree `< D`.
    pub fn rep(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.num
                .iter()
                .map(|c| BigRational::new(c.clone(), self.den.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    fn check_parent(&self, other: &Self) -> Result<()> {
        if same_parent(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    fn combine(&self, other: &Self, sign: i8) -> Result<Self> {
        self.check_parent(other)?;
        let n = self.num.len().max(other.num.len());
        let zero = BigInt::zero();
        let num = (0..n)
            .map(|k| {
                let a = self.num.get(k).unwrap_or(&zero) * &other.den;
                let b = other.num.get(k).unwrap_or(&zero) * &self.den;
                if sign > 0 {
                    a + b
                } else {
                    a - b
                }
            })
            .collect();
        Ok(Self::normalized(&self.parent, num, &self.den * &other.den))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    pub fn add_rational(&self, q: &BigRational) -> Self {
        let mut num = self.num.clone();
        if num.is_empty() {
            num.push(BigInt::zero());
        }
        let den = &self.den * q.denom();
        for c in num.iter_mut() {
            *c *= q.denom();
        }
        num[0] += q.numer() * &self.den;
        Self::normalized(&self.parent, num, den)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * s.numer()).collect();
        Self::normalized(&self.parent, num, &self.den * s.denom())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.parent.zero());
        }
        let dim = self.parent.degree();
        let mut prod = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        let den = &self.den * &other.den;
        if prod.len() <= dim {
            return Ok(Self::normalized(&self.parent, prod, den));
        }
        let high = prod.split_off(dim);
        let table_den = &self.parent.table_den;
        let mut num: Vec<BigInt> = prod.into_iter().map(|c| c * table_den).collect();
        num.resize(dim, BigInt::zero());
        for (h, row) in high.iter().zip(&self.parent.table) {
            if h.is_zero() {
                continue;
            }
            for (x, r) in num.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x += h * r;
                }
            }
        }
        Ok(Self::normalized(&self.parent, num, den * table_den))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.parent.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).unwrap();
            }
        }
        acc
    }

    /// `x^d + c`.
    pub fn apply_phi(&self, d: u32, c: &BigRational) -> Self {
        self.pow(d).add_rational(c)
    }

    /// `g(x)` for a rational polynomial `g`, by the Paterson–Stockmeyer scheme.
    pub fn eval_poly(&self, g: &RatPoly) -> Self {
        let n = g.coeffs().len();
        if n == 0 {
            return self.parent.zero();
        }
        let block = n.isqrt().max(1);
        let mut powers = vec![self.parent.one(), self.clone()];
        while powers.len() <= block {
            let next = powers.last().unwrap().mul(self).unwrap();
            powers.push(next);
        }
        let giant = powers.pop().unwrap();
        let mut acc = self.parent.zero();
        for chunk in g.coeffs().chunks(block).rev() {
            acc = acc.mul(&giant).unwrap();
            for (c, p) in chunk.iter().zip(&powers) {
                if !c.is_zero() {
                    acc = acc.add(&p.scale(c)).unwrap();
                }
            }
        }
        acc
    }

    /// The image in `F_p[z]/(f mod p)`, if no denominator vanishes there.
    fn reduce_mod(&self, p: u64) -> Option<PolyP> {
        let pb = BigInt::from(p);
        let den: u64 = self.den.mod_floor(&pb).try_into().ok()?;
        if den == 0 {
            return None;
        }
        let inv = modp::inv_mod(den, p);
        Some(modp::normalized(
            self.num
                .iter()
                .map(|c| {
                    let r: u64 = c.mod_floor(&pb).try_into().unwrap();
                    r * inv % p
                })
                .collect(),
        ))
    }

    /// Monic minimal polynomial over Q: the first linear dependency among
    /// `1, x, x^2, …`, found by exact elimination.
    pub fn minimal_polynomial(&self) -> RatPoly {
        let dim = self.parent.degree();
        let mut basis = Echelon::new(dim);
        let mut power = self.parent.one();
        for k in 0..=dim {
            if let Some(relation) = basis.insert(coords(&power, dim), k) {
                return RatPoly::from_coeffs(relation).monic();
            }
            power = power.mul(self).unwrap();
        }
        unreachable!("dim + 1 vectors in a dim-dimensional space are dependent")
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.rep(), f)
    }
}

fn coords(x: &AlgElement, dim: usize) -> Vec<BigRational> {
    let mut v: Vec<BigRational> = x.rep().into_coeffs();
    v.resize(dim, BigRational::zero());
    v
}

/// Row echelon form that remembers how each row was combined from the inputs.
struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<BigRational>, Vec<BigRational>)>,
}

impl Echelon {
    fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
        }
    }

    /// Adds input vector number `index`. Returns the coefficients of a linear
    /// relation among inputs `0..=index` if the new vector is dependent.
    fn insert(&mut self, mut v: Vec<BigRational>, index: usize) -> Option<Vec<BigRational>> {
        let mut combo = alloc::vec![BigRational::zero(); index + 1];
        combo[index] = BigRational::one();
        for (pivot, row, row_combo) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
            for (x, r) in combo.iter_mut().zip(row_combo) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        match (0..self.dim).find(|&j| !v[j].is_zero()) {
            None => Some(combo),
            Some(pivot) => {
                let inv = v[pivot].recip();
                for x in v.iter_mut().chain(combo.iter_mut()) {
                    *x *= &inv;
                }
                self.rows.push((pivot, v, combo));
                None
            }
        }
    }
}

/// Minimal polynomial of `x` over Q.
pub fn minimal_polynomial(x: &AlgElement) -> RatPoly {
    x.minimal_polynomial()
}

/// `x * y` in the common parent algebra.
pub fn alg_mul(x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
    x.mul(y)
}

/// `x^d + c` in the parent algebra.
pub fn apply_phi(x: &AlgElement, d: u32, c: &BigRational) -> AlgElement {
    x.apply_phi(d, c)
}

/// Degree over Q of the field generated by `generators`.
pub fn subfield_degree(generators: &[AlgElement]) -> Result<usize> {
    subfield_degree_bounded(generators, None)
}

/// Primes used for modular rank bounds.
const RANK_PRIMES: [u64; 3] = [2_147_483_629, 2_147_483_587, 2_147_483_579];

/// Degree of the minimal polynomial of `s` over F_p: the rank of
/// `1, s, s^2, …` in `F_p[z]/(f)`. Never exceeds the degree over Q.
fn modular_degree(s: &[u64], f: &[u64], p: u64) -> usize {
    let dim = f.len() - 1;
    let mut rows: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut power: PolyP = vec![1];
    for _ in 0..=dim {
        let mut v = power.clone();
        v.resize(dim, 0);
        for (pivot, row) in &rows {
            let factor = v[*pivot];
            if factor == 0 {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                *x = (*x + p - factor * r % p) % p;
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => break,
            Some(pivot) => {
                let inv = modp::inv_mod(v[pivot], p);
                for x in v.iter_mut() {
                    *x = *x * inv % p;
                }
                rows.push((pivot, v));
            }
        }
        power = modp::rem(&modp::mul(&power, s, p), f, p);
    }
    rows.len()
}

fn weighted_sum(generators: &[AlgElement], lambda: u64) -> Result<AlgElement> {
    let weight = BigRational::from_integer(lambda.into());
    let mut s = generators[0].parent.zero();
    let mut w = BigRational::one();
    for g in generators {
        s = s.add(&g.scale(&w))?;
        w *= &weight;
    }
    Ok(s)
}

/// [`subfield_degree`] with an optional proven upper bound.
///
/// Candidates are `s_λ = Σ_i g_i λ^i` for `λ = 0, 1, …, D^2`; the answer is the
/// largest minimal-polynomial degree among them. With a bound, candidates are
/// first ranked modulo word-sized primes, which can only undercount, and the
/// sweep stops as soon as one reaches the bound. Otherwise the exact sweep
/// stops once the running maximum equals `D` or has been attained by `D`
/// consecutive values of `λ`.
pub fn subfield_degree_bounded(
    generators: &[AlgElement],
    upper_bound: Option<usize>,
) -> Result<usize> {
    let first = generators
        .first()
        .ok_or(Error::ZeroArgument("generator count"))?;
    for g in generators {
        first.check_parent(g)?;
    }
    if generators.iter().all(|g| g.as_rational().is_some()) {
        return Ok(1);
    }
    let dim = first.parent.degree();
    let sweep = (dim * dim) as u64;
    if let Some(bound) = upper_bound {
        let bound = bound.min(dim);
        for p in RANK_PRIMES {
            let Some(f) = first.parent.reduce_mod(p) else {
                continue;
            };
            let Some(gens) = generators
                .iter()
                .map(|g| g.reduce_mod(p))
                .collect::<Option<Vec<PolyP>>>()
            else {
                continue;
            };
            for lambda in 0..=sweep {
                let mut s: PolyP = Vec::new();
                let mut w = 1u64;
                for g in &gens {
                    s = modp::sub(&s, &modp::scale(g, p - w, p), p);
                    w = w * (lambda % p) % p;
                }
                if modular_degree(&s, &f, p) >= bound {
                    return Ok(bound);
                }
            }
        }
    }
    let cap = upper_bound.unwrap_or(dim).min(dim);
    let mut best = 0usize;
    let mut streak = 0usize;
    for lambda in 0..=sweep {
        let deg = weighted_sum(generators, lambda)?
            .minimal_polynomial()
            .degree()
            .unwrap();
        if deg > best {
            best = deg;
            streak = 1;
        } else if deg == best {
            streak += 1;
        } else {
            streak = 0;
        }
        if best >= cap || streak >= dim {
            break;
        }
    }
    Ok(best)
}
