//! Periodic cycles read off the irreducible factors of a dynatomic polynomial.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::{divisors, BigRational};
use crate::dynatomic::{dynatomic_poly, MapSpec};
use crate::error::{Error, Result};
use crate::factor::{factor_over_q, Factorization};
use crate::numfield::{as_quadratic, AlgElement, QuadraticElement, QuotientAlgebra};
use crate::poly::RatPoly;

/// One Galois orbit of periodic cycles.
///
/// The base point `x` is the class of `z` in `Q[z]/(factor)`. Every factor of
/// `Φ_N` whose roots lie on the orbit of `x` is listed in `merged_factors`.
#[derive(Clone, Debug)]
pub struct CycleRecord {
    pub d: u32,
    pub c: BigRational,
    /// The period the record was computed for.
    pub n: u32,
    /// Monic minimal polynomial of the base point.
    pub factor: RatPoly,
    pub field_degree: usize,
    pub exact_period: usize,
    /// `x, φ(x), …, φ^(exact_period - 1)(x)`.
    pub orbit: Vec<AlgElement>,
    /// Elementary symmetric functions `e_1, …, e_k` of the orbit, `k = exact_period`.
    pub symmetric: Vec<AlgElement>,
    pub trace: AlgElement,
    /// Multiplicity of `factor` in `Φ_N`.
    pub multiplicity: u32,
    /// Monic factors of `Φ_N` covered by this orbit, base factor first.
    pub merged_factors: Vec<RatPoly>,
    /// Steps `i` with `φ^i(x)` a root of `factor`; always contains 0.
    pub self_steps: Vec<usize>,
    /// The exact period is a proper divisor of `n`.
    pub degenerate: bool,
    /// Orbit points, when they are rational.
    pub rational_points: Option<Vec<BigRational>>,
    /// Orbit points as `a + b*sqrt(D)`, when the field is quadratic.
    pub quadratic_points: Option<Vec<QuadraticElement>>,
}

impl CycleRecord {
    /// Exact period below `n`, or a repeated factor of `Φ_N`.
    pub fn is_flagged(&self) -> bool {
        self.degenerate || self.multiplicity > 1
    }

    /// Number of distinct cycles represented.
    pub fn cycle_count(&self) -> usize {
        self.field_degree * self.merged_factors.len() / self.exact_period
    }

    /// Squarefree `D` with the points in `Q(sqrt(D))`, for quadratic records.
    pub fn discriminant(&self) -> Option<&BigInt> {
        self.quadratic_points
            .as_ref()
            .and_then(|pts| pts.first())
            .map(|x| x.discriminant())
    }

    pub fn trace_rational(&self) -> Option<BigRational> {
        self.trace.as_rational()
    }
}

/// Orbit of the class of `z` in `Q[z]/(f)` under `spec`, up to its first return.
pub fn orbit_in_algebra(f: &RatPoly, spec: &MapSpec, max_steps: usize) -> Result<Vec<AlgElement>> {
    let algebra = QuotientAlgebra::new(f)?;
    let x = algebra.generator();
    let mut orbit = vec![x.clone()];
    for _ in 0..max_steps {
        let next = orbit.last().unwrap().apply_phi(spec.d(), spec.c());
        if next == x {
            return Ok(orbit);
        }
        if orbit.contains(&next) {
            break;
        }
        orbit.push(next);
    }
    Err(Error::NonPeriodic { steps: max_steps })
}

/// `e_1, …, e_k` of the given elements.
pub fn elementary_symmetric(points: &[AlgElement]) -> Result<Vec<AlgElement>> {
    let first = points.first().ok_or(Error::ZeroArgument("point count"))?;
    let algebra = first.parent();
    let mut e = vec![algebra.one()];
    e.resize(points.len() + 1, algebra.zero());
    for (count, y) in points.iter().enumerate() {
        for k in (1..=count + 1).rev() {
            e[k] = e[k].add(&e[k - 1].mul(y)?)?;
        }
    }
    e.remove(0);
    Ok(e)
}

/// Dynatomic polynomial, its factorization and the cycle records built from it.
#[derive(Clone, Debug)]
pub struct CycleAnalysis {
    pub phi: RatPoly,
    pub factorization: Factorization,
    pub records: Vec<CycleRecord>,
}

pub fn analyze(spec: &MapSpec, n: u32) -> Result<CycleAnalysis> {
    if n == 0 {
        return Err(Error::ZeroArgument("N"));
    }
    let phi = dynatomic_poly(spec, n)?;
    let factorization = factor_over_q(&phi)?;
    let factors: Vec<(RatPoly, u32)> = factorization
        .factors
        .iter()
        .map(|(f, m)| (f.monic(), *m))
        .collect();
    let mut covered = vec![false; factors.len()];
    let mut records = Vec::new();
    for base in 0..factors.len() {
        if covered[base] {
            continue;
        }
        covered[base] = true;
        let (factor, multiplicity) = &factors[base];
        let degree = factor.degree().unwrap();
        let orbit = orbit_in_algebra(factor, spec, n as usize).map_err(|e| match e {
            Error::NonPeriodic { .. } => {
                Error::Invariant(alloc::format!("root of Φ_{n} is not periodic"))
            }
            other => other,
        })?;
        // Steps returning to a root of `factor` form a subgroup of Z/k, generated by
        // its least element; the other residues below it land on distinct factors.
        let k = orbit.len();
        let mut generator = k;
        for g in divisors(k as u64)? {
            let g = g as usize;
            if g < k && orbit[g].eval_poly(factor).is_zero() {
                generator = g;
                break;
            }
        }
        let self_steps: Vec<usize> = (0..k).step_by(generator).collect();
        let mut merged = vec![factor.clone()];
        for y in &orbit[1..generator] {
            let hit = (0..factors.len()).find(|&l| {
                !covered[l]
                    && factors[l].0.degree() == Some(degree)
                    && y.eval_poly(&factors[l].0).is_zero()
            });
            let Some(l) = hit else {
                return Err(Error::Invariant(
                    "orbit point is not a root of any remaining dynatomic factor".into(),
                ));
            };
            covered[l] = true;
            merged.push(factors[l].0.clone());
        }
        let symmetric = elementary_symmetric(&orbit)?;
        let rational_points = (degree == 1).then(|| {
            orbit
                .iter()
                .map(|y| y.as_rational().expect("linear factor"))
                .collect()
        });
        let quadratic_points = if degree == 2 {
            let (root, _) = as_quadratic(factor)?;
            Some(orbit.iter().map(|y| root.eval_poly(&y.rep())).collect())
        } else {
            None
        };
        records.push(CycleRecord {
            d: spec.d(),
            c: spec.c().clone(),
            n,
            factor: factor.clone(),
            field_degree: degree,
            exact_period: orbit.len(),
            trace: symmetric[0].clone(),
            symmetric,
            multiplicity: *multiplicity,
            merged_factors: merged,
            self_steps,
            degenerate: orbit.len() < n as usize,
            rational_points,
            quadratic_points,
            orbit,
        });
    }
    Ok(CycleAnalysis {
        phi,
        factorization,
        records,
    })
}

/// All cycle records for `Φ_N`, degenerate ones included.
pub fn cycles_from_dynatomic(spec: &MapSpec, n: u32) -> Result<Vec<CycleRecord>> {
    Ok(analyze(spec, n)?.records)
}

/// Records of rational cycles with exact period `N`.
pub fn rational_cycles(spec: &MapSpec, n: u32) -> Result<Vec<CycleRecord>> {
    Ok(cycles_from_dynatomic(spec, n)?
        .into_iter()
        .filter(|r| r.field_degree == 1 && !r.degenerate)
        .collect())
}

/// Records of quadratic cycles with exact period `N`.
pub fn quadratic_cycles(spec: &MapSpec, n: u32) -> Result<Vec<CycleRecord>> {
    Ok(cycles_from_dynatomic(spec, n)?
        .into_iter()
        .filter(|r| r.field_degree == 2 && !r.degenerate)
        .collect())
}
