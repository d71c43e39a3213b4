use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};
use core::str::FromStr;

use super::{text, RatPoly};
use crate::arith::BigRational;
use crate::error::{Error, Result};

/// Polynomial in `z` whose coefficients are polynomials in the parameter `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: Vec<RatPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<RatPoly>) -> Self {
        while coeffs.last().is_some_and(RatPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::from_coeffs(alloc::vec![RatPoly::zero(), RatPoly::one()])
    }

    /// The polynomial `c`, constant in `z`.
    pub fn c() -> Self {
        Self::from_coeffs(alloc::vec![RatPoly::identity()])
    }

    /// Embeds a polynomial in `z` with rational coefficients.
    pub fn from_z_poly(p: &RatPoly) -> Self {
        Self::from_coeffs(p.coeffs().iter().cloned().map(RatPoly::constant).collect())
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `z`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Substitutes a rational value for `c`.
    pub fn specialize(&self, c: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|p| p.eval(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BiPoly::from_coeffs(alloc::vec![RatPoly::one()]);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division in Q[c][z].
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let dlen = divisor.coeffs.len();
        let Some(lead) = divisor.coeffs.last() else {
            return Err(Error::DivisionByZeroPoly);
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < dlen {
            return Err(Error::NonExactDivision);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![RatPoly::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(lead)?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&q * d);
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn parse(s: &str) -> Result<Self> {
        text::parse_bivariate(s, "z", "c")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render_bivariate(self, "z", "c"))
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn zip_with(a: &[RatPoly], b: &[RatPoly], f: impl Fn(&RatPoly, &RatPoly) -> RatPoly) -> BiPoly {
    let zero = RatPoly::zero();
    let n = a.len().max(b.len());
    BiPoly::from_coeffs(
        (0..n)
            .map(|k| f(a.get(k).unwrap_or(&zero), b.get(k).unwrap_or(&zero)))
            .collect(),
    )
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        zip_with(&self.coeffs, &rhs.coeffs, |x, y| x + y)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        zip_with(&self.coeffs, &rhs.coeffs, |x, y| x - y)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = alloc::vec![RatPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        BiPoly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;
    use alloc::string::ToString;

    #[test]
    fn generic_second_dynatomic_by_division() {
        // (φ²(z) − z) / (φ(z) − z) with φ = z² + c.
        let num: BiPoly = "z^4 + 2*c*z^2 - z + c^2 + c".parse().unwrap();
        let den: BiPoly = "z^2 - z + c".parse().unwrap();
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q.to_string(), "z^2 + z + (c + 1)");
        assert_eq!(
            "z^2 + 1"
                .parse::<BiPoly>()
                .unwrap()
                .exact_div(&"z - 1".parse().unwrap()),
            Err(Error::NonExactDivision)
        );
    }

    #[test]
    fn specialization() {
        let p: BiPoly = "z^2 + z + (c + 1)".parse().unwrap();
        let c = parse_rational("-3/4").unwrap();
        assert_eq!(p.specialize(&c), "z^2 + z + 1/4".parse().unwrap());
        assert!(BiPoly::zero().specialize(&c).is_zero());
    }
}
