use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{square_decomposition, write_rational, BigRational};
use crate::error::{Error, Result};
use crate::poly::RatPoly;

/// `a + b*sqrt(D)` with `D` a squarefree integer other than 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticElement {
    d: BigInt,
    a: BigRational,
    b: BigRational,
}

impl QuadraticElement {
    pub fn new(d: BigInt, a: BigRational, b: BigRational) -> Result<Self> {
        if d.is_zero() || d.is_one() {
            return Err(Error::NotQuadraticIrrational);
        }
        match square_decomposition(&d) {
            Some((s, _)) if s.is_one() => Ok(QuadraticElement { d, a, b }),
            Some(_) => Err(Error::NotQuadraticIrrational),
            None => Err(Error::Unsupported(alloc::format!(
                "cannot certify that {d} is squarefree"
            ))),
        }
    }

    /// Skips the squarefree check; `d` must already be valid.
    fn raw(d: &BigInt, a: BigRational, b: BigRational) -> Self {
        QuadraticElement { d: d.clone(), a, b }
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.d
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self::raw(&self.d, self.a.clone(), -self.b.clone())
    }

    /// `x + conj(x)`.
    pub fn trace(&self) -> BigRational {
        &self.a * BigRational::from_integer(2.into())
    }

    /// `x * conj(x)`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::raw(&self.d, &self.a + &other.a, &self.b + &other.b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::raw(&self.d, &self.a - &other.a, &self.b - &other.b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = BigRational::from_integer(self.d.clone());
        Ok(Self::raw(
            &self.d,
            &self.a * &other.a + &self.b * &other.b * d,
            &self.a * &other.b + &self.b * &other.a,
        ))
    }

    pub fn add_rational(&self, q: &BigRational) -> Self {
        Self::raw(&self.d, &self.a + q, self.b.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::raw(&self.d, BigRational::one(), BigRational::zero());
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

    /// `g(x)` for a rational polynomial `g`.
    pub fn eval_poly(&self, g: &RatPoly) -> Self {
        let mut acc = Self::raw(&self.d, BigRational::zero(), BigRational::zero());
        for c in g.coeffs().iter().rev() {
            acc = acc.mul(self).unwrap().add_rational(c);
        }
        acc
    }
}

impl fmt::Display for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.a.is_zero() || self.b.is_zero() {
            write_rational(&mut out, &self.a);
        }
        if !self.b.is_zero() {
            let mag = self.b.abs();
            if out.is_empty() {
                if self.b.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if self.b.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                write_rational(&mut out, &mag);
                out.push('*');
            }
            out.push_str("sqrt(");
            out.push_str(&alloc::string::ToString::to_string(&self.d));
            out.push(')');
        }
        f.write_str(&out)
    }
}

/// The two roots of an irreducible quadratic over Q, as `a + b*sqrt(D)` and
/// its conjugate, the first with `b > 0`.
pub fn as_quadratic(f: &RatPoly) -> Result<(QuadraticElement, QuadraticElement)> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    if degree != 2 {
        return Err(Error::NotQuadratic { degree });
    }
    let (alpha, beta, gamma) = (&f.coeffs()[2], &f.coeffs()[1], &f.coeffs()[0]);
    let disc = beta * beta - alpha * gamma * BigRational::from_integer(4.into());
    if disc.is_zero() {
        return Err(Error::NotQuadraticIrrational);
    }
    // disc = n/m = n*m / m^2.
    let nm = disc.numer() * disc.denom();
    let (s, k) = square_decomposition(&nm).ok_or_else(|| {
        Error::Unsupported(alloc::format!("cannot extract the square part of {nm}"))
    })?;
    if k.is_one() {
        return Err(Error::NotQuadraticIrrational);
    }
    let two_alpha = alpha * BigRational::from_integer(2.into());
    let a = -(beta / &two_alpha);
    let b = (BigRational::new(s, disc.denom().clone()) / &two_alpha).abs();
    let root = QuadraticElement::raw(&k, a, b);
    let conj = root.conjugate();
    Ok((root, conj))
}
