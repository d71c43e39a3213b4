use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RatPoly;
use crate::arith::BigRational;
use crate::modp::{self, PolyP};

/// Primes tried for modular shortcuts (squarefreeness, coprimality).
const SHORTCUT_PRIMES: [u64; 8] = [10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079];

/// Univariate polynomial with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        let mut g = self.content();
        if g.is_zero() {
            return Self::default();
        }
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        if g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) - other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Euclidean norm, rounded up.
    pub fn l2_norm_ceil(&self) -> BigInt {
        let sq: BigInt = self.coeffs.iter().map(|c| c * c).sum();
        let root = sq.sqrt();
        if &root * &root == sq {
            root
        } else {
            root + 1
        }
    }

    pub fn max_norm(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Reduction modulo a word-sized prime.
    pub fn reduce_mod(&self, p: u64) -> PolyP {
        let pb = BigInt::from(p);
        modp::normalized(
            self.coeffs
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits in u64"))
                .collect(),
        )
    }

    /// Exact quotient over Z, or `None` if `divisor` does not divide `self` in Z[z].
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dlen = divisor.coeffs.len();
        let lead = divisor.leading()?;
        if self.is_zero() {
            return Some(Self::default());
        }
        if self.coeffs.len() < dlen {
            return None;
        }
        // Cheap necessary condition on the constant terms.
        if !divisor.coeffs[0].is_zero() && !self.coeffs[0].is_multiple_of(&divisor.coeffs[0]) {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        if rem[..dlen - 1].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.leading().unwrap();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * lb).collect();
            for (j, c) in b.coeffs.iter().enumerate() {
                next[j + dr - db] -= &lr * c;
            }
            r = Self::from_coeffs(next);
        }
        r
    }

    /// Whether some word-sized prime certifies that `self` is squarefree.
    pub fn is_squarefree_mod_small_prime(&self) -> bool {
        let Some(lc) = self.leading() else {
            return false;
        };
        SHORTCUT_PRIMES
            .iter()
            .filter(|&&p| !lc.is_multiple_of(&BigInt::from(p)))
            .take(3)
            .any(|&p| {
                let f = self.reduce_mod(p);
                let df = modp::derivative(&f, p);
                modp::degree(&modp::gcd(&f, &df, p)) == Some(0)
            })
    }

    /// Greatest common divisor in Z[z], primitive with positive leading coefficient
    /// times the gcd of the contents.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let g = self.content().gcd(&other.content());
        let constant = Self::from_coeffs(vec![g.clone()]);
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        if b.degree() == Some(0) {
            return constant;
        }
        let (la, lb) = (a.leading().unwrap(), b.leading().unwrap());
        let coprime_mod_p = SHORTCUT_PRIMES
            .iter()
            .filter(|&&p| {
                let pb = BigInt::from(p);
                !la.is_multiple_of(&pb) && !lb.is_multiple_of(&pb)
            })
            .take(2)
            .any(|&p| {
                let h = modp::gcd(&a.reduce_mod(p), &b.reduce_mod(p), p);
                modp::degree(&h) == Some(0)
            });
        if coprime_mod_p {
            return constant;
        }
        loop {
            let r = a.pseudo_rem(&b);
            match r.degree() {
                None => return b.primitive_part().scale(&g),
                Some(0) => return constant,
                Some(_) => {
                    a = b;
                    b = r.primitive_part();
                }
            }
        }
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_over_integers() {
        let a = &IntPoly::from_i64(&[-1, 2]) * &IntPoly::from_i64(&[1, 0, 3]);
        let b = &IntPoly::from_i64(&[-1, 2]) * &IntPoly::from_i64(&[5, 7]);
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[-1, 2]));
        let a6 = a.scale(&BigInt::from(6));
        let b4 = b.scale(&BigInt::from(-4));
        assert_eq!(a6.gcd(&b4), IntPoly::from_i64(&[-2, 4]));
        assert_eq!(
            IntPoly::from_i64(&[1, 0, 1]).gcd(&IntPoly::from_i64(&[-1, 1])),
            IntPoly::from_i64(&[1])
        );
    }

    #[test]
    fn exact_integer_division() {
        let a = IntPoly::from_i64(&[-1, 0, 4]);
        assert_eq!(
            a.div_exact(&IntPoly::from_i64(&[1, 2])),
            Some(IntPoly::from_i64(&[-1, 2]))
        );
        assert_eq!(a.div_exact(&IntPoly::from_i64(&[1, 3])), None);
        // Divisible over Q but not over Z.
        assert_eq!(
            IntPoly::from_i64(&[1, 1]).div_exact(&IntPoly::from_i64(&[2, 2])),
            None
        );
    }

    #[test]
    fn squarefree_certificate() {
        assert!(IntPoly::from_i64(&[-1, 0, 1]).is_squarefree_mod_small_prime());
        assert!(!IntPoly::from_i64(&[1, 2, 1]).is_squarefree_mod_small_prime());
    }
}
