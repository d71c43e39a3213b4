//! Dense polynomials over the rationals.
//!
//! [`RatPoly`] is univariate in `z`; [`BiPoly`] is univariate in `z` with
//! coefficients that are themselves [`RatPoly`]s in the parameter `c`.

mod bivariate;
mod int;
pub(crate) mod text;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use bivariate::BiPoly;
pub use int::IntPoly;

use crate::arith::BigRational;
use crate::error::{Error, Result};

/// Univariate polynomial with rational coefficients, lowest degree first.
///
/// The coefficient list never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The polynomial `z`.
    pub fn identity() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        RatPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// Convenience constructor from small integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Divides through by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// `self * z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlen = divisor.coeffs.len();
        let Some(lead) = divisor.leading() else {
            return Err(Error::DivisionByZeroPoly);
        };
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let lead_inv = lead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let q = top * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dlen - 1);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient `q` with `self = q * divisor` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (b, cb) = divisor
            .primitive_integer_form()
            .map_err(|_| Error::DivisionByZeroPoly)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Gauss: a rational quotient of primitive parts is itself primitive and integral.
        let (a, ca) = self.primitive_integer_form()?;
        let q = a.div_exact(&b).ok_or(Error::NonExactDivision)?;
        Ok(q.to_rat().scale(&(ca / cb)))
    }

    /// Remainder of `self` modulo `divisor`.
    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `outer(inner(z))`, evaluated by Horner's rule.
    pub fn compose(outer: &Self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in outer.coeffs.iter().rev() {
            acc = &acc * inner;
            acc = acc + Self::constant(c.clone());
        }
        acc
    }

    /// Monic greatest common divisor over Q; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Self::zero(),
            (true, false) => other.monic(),
            (false, true) => self.monic(),
            (false, false) => {
                let (a, _) = self.primitive_integer_form().expect("nonzero");
                let (b, _) = other.primitive_integer_form().expect("nonzero");
                a.gcd(&b).to_rat().monic()
            }
        }
    }

    /// Writes `self = content * primitive` where `primitive` has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn primitive_integer_form(&self) -> Result<(IntPoly, BigRational)> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if lc.is_negative() {
            g = -g;
        }
        let prim = IntPoly::from_coeffs(ints.into_iter().map(|c| c / &g).collect());
        Ok((prim, BigRational::new(g, den)))
    }

    /// Squarefree decomposition by Yun's algorithm.
    ///
    /// Returns monic, pairwise coprime, squarefree parts with their
    /// multiplicities in increasing order; their product with multiplicity is
    /// `self` up to the leading coefficient. Constants give an empty list.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(RatPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let (prim, _) = self.primitive_integer_form()?;
        if prim.is_squarefree_mod_small_prime() {
            return Ok(vec![(self.monic(), 1)]);
        }
        let f = prim.to_rat().monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0)?;
        let mut c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut parts = Vec::new();
        let mut i = 1u32;
        loop {
            let a = b.gcd(&d);
            if !a.is_constant() {
                parts.push((a.clone(), i));
            }
            b = b.exact_div(&a)?;
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(parts)
    }

    /// Product of the squarefree parts (the radical), monic.
    pub fn squarefree_part(&self) -> Result<RatPoly> {
        Ok(self
            .squarefree_decomposition()?
            .into_iter()
            .fold(RatPoly::one(), |acc, (p, _)| &acc * &p))
    }

    /// Renders with an arbitrary variable name.
    pub fn display_in(&self, var: &str) -> String {
        text::render(self, var)
    }

    /// Parses the canonical text form in variable `z`.
    pub fn parse(s: &str) -> Result<Self> {
        text::parse_univariate(s, "z")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self, "z"))
    }
}

impl FromStr for RatPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl From<BigRational> for RatPoly {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

fn add_coeffs(a: &[BigRational], b: &[BigRational], negate_b: bool) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k);
            let y = b.get(k);
            match (x, y, negate_b) {
                (Some(x), Some(y), false) => x + y,
                (Some(x), Some(y), true) => x - y,
                (Some(x), None, _) => x.clone(),
                (None, Some(y), false) => y.clone(),
                (None, Some(y), true) => -y,
                (None, None, _) => unreachable!(),
            }
        })
        .collect()
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Add for RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: RatPoly) -> RatPoly {
        &self + &rhs
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Sub for RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: RatPoly) -> RatPoly {
        &self - &rhs
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        // Accumulate over a common denominator per operand to avoid a gcd per term.
        let (a, ca) = self.primitive_integer_form().expect("nonzero");
        let (b, cb) = rhs.primitive_integer_form().expect("nonzero");
        (&a * &b).to_rat().scale(&(ca * cb))
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: RatPoly) -> RatPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn compose_examples() {
        let f = p("z^2 + 1");
        assert_eq!(RatPoly::compose(&f, &f), p("z^4 + 2*z^2 + 2"));
        let g = p("3*z^3 - 1/2*z + 7");
        assert_eq!(RatPoly::compose(&g, &RatPoly::identity()), g);
        assert_eq!(RatPoly::compose(&RatPoly::identity(), &g), g);
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("z^2 - 1").exact_div(&p("z - 1")).unwrap(), p("z + 1"));
        assert_eq!(
            p("z^2 + 1").exact_div(&p("z - 1")),
            Err(Error::NonExactDivision)
        );
        assert_eq!(
            p("z^2 + 1").exact_div(&RatPoly::zero()),
            Err(Error::DivisionByZeroPoly)
        );
        let (quo, rem) = p("z^2 + 1").div_rem(&p("z - 1")).unwrap();
        assert_eq!(quo, p("z + 1"));
        assert_eq!(rem, p("2"));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(
            p("z^2 + z + 1/4").squarefree_decomposition().unwrap(),
            vec![(p("z + 1/2"), 2)]
        );
        assert_eq!(
            p("z^2 - 1").squarefree_decomposition().unwrap(),
            vec![(p("z^2 - 1"), 1)]
        );
        let f = &p("z - 1").pow(3) * &p("z + 2");
        assert_eq!(
            f.squarefree_decomposition().unwrap(),
            vec![(p("z + 2"), 1), (p("z - 1"), 3)]
        );
        assert_eq!(
            RatPoly::zero().squarefree_decomposition(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn primitive_forms() {
        let (prim, content) = p("1/2*z^2 + 3/2").primitive_integer_form().unwrap();
        assert_eq!(prim, IntPoly::from_i64(&[3, 0, 1]));
        assert_eq!(content, q("1/2"));
        let (prim, content) = p("z^2 + z + 37/48").primitive_integer_form().unwrap();
        assert_eq!(prim, IntPoly::from_i64(&[37, 48, 48]));
        assert_eq!(content, q("1/48"));
        let (prim, content) = p("-2*z").primitive_integer_form().unwrap();
        assert_eq!(prim, IntPoly::from_i64(&[0, 1]));
        assert_eq!(content, q("-2"));
        assert!(RatPoly::zero().primitive_integer_form().is_err());
    }

    #[test]
    fn gcd_and_derivative() {
        let f = &p("z - 3") * &p("z^2 + 1");
        let g = &p("z - 3") * &p("2*z + 5");
        assert_eq!(f.gcd(&g), p("z - 3"));
        assert_eq!(p("z^2 + 1").gcd(&p("z - 1")), RatPoly::one());
        assert_eq!(p("z^3 + 1/2*z").derivative(), p("3*z^2 + 1/2"));
    }

    #[test]
    fn evaluation_and_powers() {
        let f = p("z^2 - z + 1/3");
        assert_eq!(f.eval(&q("3/2")), q("13/12"));
        assert_eq!(p("z + 1").pow(3), p("z^3 + 3*z^2 + 3*z + 1"));
        assert_eq!(p("z + 1").pow(0), RatPoly::one());
    }
}
