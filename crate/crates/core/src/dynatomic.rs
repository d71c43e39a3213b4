//! Iterates of `z^d + c` and dynatomic polynomials.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{divisors, mobius, BigRational};
use crate::error::{Error, Result};
use crate::poly::{BiPoly, RatPoly};

/// Largest dynatomic degree the pipeline accepts.
pub const DEGREE_LIMIT: u64 = 5000;

/// The map `z -> z^d + c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MapSpec {
    d: u32,
    c: BigRational,
}

impl MapSpec {
    pub fn new(d: u32, c: BigRational) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidMapDegree(d));
        }
        Ok(MapSpec { d, c })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    /// `z^d + c` as a polynomial.
    pub fn polynomial(&self) -> RatPoly {
        &RatPoly::monomial(BigRational::from_integer(1.into()), self.d as usize)
            + &RatPoly::constant(self.c.clone())
    }

    pub fn apply(&self, z: &BigRational) -> BigRational {
        num_traits::pow(z.clone(), self.d as usize) + &self.c
    }
}

/// Memoized iterates `φ^0, φ^1, …` for one map; scoped to a single computation.
#[derive(Clone, Debug)]
pub struct Iterates {
    spec: MapSpec,
    cache: Vec<RatPoly>,
}

impl Iterates {
    pub fn new(spec: MapSpec) -> Self {
        Iterates {
            spec,
            cache: vec![RatPoly::identity()],
        }
    }

    pub fn get(&mut self, n: usize) -> &RatPoly {
        let c = RatPoly::constant(self.spec.c.clone());
        while self.cache.len() <= n {
            let prev = self.cache.last().unwrap();
            let next = &prev.pow(self.spec.d) + &c;
            self.cache.push(next);
        }
        &self.cache[n]
    }
}

/// `φ^n(z)`; `φ^0 = z`.
pub fn iterate(spec: &MapSpec, n: usize) -> RatPoly {
    Iterates::new(spec.clone()).get(n).clone()
}

/// `Σ_{m | N} μ(N/m) d^m`, saturating at `u64::MAX` when it does not fit.
pub fn dynatomic_degree(d: u32, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument("N"));
    }
    let mut total: i128 = 0;
    for m in divisors(n as u64)? {
        let mu = mobius(n as u64 / m)? as i128;
        if mu == 0 {
            continue;
        }
        let Some(term) = u32::try_from(m)
            .ok()
            .and_then(|m| (d as i128).checked_pow(m))
        else {
            return Ok(u64::MAX);
        };
        total += mu * term;
    }
    Ok(u64::try_from(total).unwrap_or(u64::MAX))
}

/// Rejects `(d, N)` whose dynatomic degree exceeds [`DEGREE_LIMIT`].
pub fn check_degree_guard(d: u32, n: u32) -> Result<u64> {
    if d < 2 {
        return Err(Error::InvalidMapDegree(d));
    }
    let deg = dynatomic_degree(d, n)?;
    if deg > DEGREE_LIMIT {
        return Err(Error::DegreeGuard {
            d,
            n,
            limit: DEGREE_LIMIT,
        });
    }
    Ok(deg)
}

/// Splits the divisors of `n` by the sign of `μ(n/m)`.
fn mobius_groups(n: u32) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for m in divisors(n as u64)? {
        match mobius(n as u64 / m)? {
            1 => plus.push(m as usize),
            -1 => minus.push(m as usize),
            _ => {}
        }
    }
    Ok((plus, minus))
}

fn division_invariant(e: Error) -> Error {
    match e {
        Error::NonExactDivision => Error::Invariant("dynatomic quotient is not exact".into()),
        other => other,
    }
}

/// `Φ_N(z)` at the given parameter, via one exact division of grouped products.
pub fn dynatomic_poly(spec: &MapSpec, n: u32) -> Result<RatPoly> {
    dynatomic_poly_with(&mut Iterates::new(spec.clone()), n)
}

pub(crate) fn dynatomic_poly_with(iterates: &mut Iterates, n: u32) -> Result<RatPoly> {
    check_degree_guard(iterates.spec.d, n)?;
    let (plus, minus) = mobius_groups(n)?;
    let z = RatPoly::identity();
    let mut numerator = RatPoly::one();
    for m in plus {
        numerator = &numerator * &(iterates.get(m) - &z);
    }
    let mut denominator = RatPoly::one();
    for m in minus {
        denominator = &denominator * &(iterates.get(m) - &z);
    }
    numerator
        .exact_div(&denominator)
        .map_err(division_invariant)
}

/// `Φ_N(z, c)` with `c` symbolic.
pub fn dynatomic_poly_generic(d: u32, n: u32) -> Result<BiPoly> {
    check_degree_guard(d, n)?;
    let (plus, minus) = mobius_groups(n)?;
    let top = plus.iter().chain(&minus).copied().max().unwrap_or(1);
    let mut iterates = vec![BiPoly::z()];
    for k in 1..=top {
        let next = &iterates[k - 1].pow(d) + &BiPoly::c();
        iterates.push(next);
    }
    let z = BiPoly::z();
    let product = |ms: &[usize]| {
        ms.iter()
            .fold(BiPoly::from_z_poly(&RatPoly::one()), |acc, &m| {
                &acc * &(&iterates[m] - &z)
            })
    };
    product(&plus)
        .exact_div(&product(&minus))
        .map_err(division_invariant)
}

/// Checks `φ^n(z) − z = Π_{N | n} Φ_N(z)` exactly.
pub fn verify_product_identity(spec: &MapSpec, n: u32) -> Result<bool> {
    let mut iterates = Iterates::new(spec.clone());
    let mut product = RatPoly::one();
    for m in divisors(n as u64)? {
        product = &product * &dynatomic_poly_with(&mut iterates, m as u32)?;
    }
    let lhs = iterates.get(n as usize) - &RatPoly::identity();
    Ok(product == lhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;
    use alloc::string::ToString;

    fn spec(d: u32, c: &str) -> MapSpec {
        MapSpec::new(d, parse_rational(c).unwrap()).unwrap()
    }

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn iterates() {
        assert_eq!(iterate(&spec(2, "1"), 2), p("z^4 + 2*z^2 + 2"));
        assert_eq!(iterate(&spec(5, "-3/7"), 0), p("z"));
        assert_eq!(iterate(&spec(3, "-1"), 1), p("z^3 - 1"));
        assert_eq!(
            MapSpec::new(1, parse_rational("0").unwrap()),
            Err(Error::InvalidMapDegree(1))
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(dynatomic_degree(2, 1).unwrap(), 2);
        assert_eq!(dynatomic_degree(2, 6).unwrap(), 54);
        assert_eq!(dynatomic_degree(3, 2).unwrap(), 6);
        assert_eq!(dynatomic_degree(2, 11).unwrap(), 2046);
        assert_eq!(dynatomic_degree(2, 200).unwrap(), u64::MAX);
        assert!(check_degree_guard(2, 12).is_ok());
        assert_eq!(
            check_degree_guard(2, 13),
            Err(Error::DegreeGuard {
                d: 2,
                n: 13,
                limit: DEGREE_LIMIT
            })
        );
    }

    #[test]
    fn small_dynatomic_polynomials() {
        for c in ["0", "1", "-3/4", "22/7"] {
            let s = spec(2, c);
            let cq = parse_rational(c).unwrap();
            assert_eq!(
                dynatomic_poly(&s, 1).unwrap(),
                &p("z^2 - z") + &RatPoly::constant(cq.clone())
            );
            assert_eq!(
                dynatomic_poly(&s, 2).unwrap(),
                &p("z^2 + z + 1") + &RatPoly::constant(cq)
            );
        }
        assert_eq!(
            dynatomic_poly(&spec(2, "0"), 3).unwrap(),
            p("z^6 + z^5 + z^4 + z^3 + z^2 + z + 1")
        );
    }

    #[test]
    fn generic_polynomials() {
        assert_eq!(
            dynatomic_poly_generic(2, 2).unwrap().to_string(),
            "z^2 + z + (c + 1)"
        );
        assert_eq!(
            dynatomic_poly_generic(2, 1).unwrap().to_string(),
            "z^2 - z + c"
        );
        assert_eq!(
            dynatomic_poly_generic(3, 1).unwrap().to_string(),
            "z^3 - z + c"
        );
    }

    #[test]
    fn product_identities() {
        assert!(verify_product_identity(&spec(2, "1"), 1).unwrap());
        assert!(verify_product_identity(&spec(2, "-1"), 2).unwrap());
        assert!(verify_product_identity(&spec(2, "-71/48"), 6).unwrap());
        assert!(verify_product_identity(&spec(3, "2/5"), 4).unwrap());
    }
}
