//! Property A per periodic point and per parameter.
//!
//! For a point `x` of exact period `N` with cycle polynomial
//! `p(T) = Π (T - φ^i(x))`, Property A holds iff `Q(x) ≠ Q(p(x))`, where
//! `Q(p(x)) = Q(e_1, …, e_N)`. Every conjugate of `x` over `Q(p(x))` is a cycle
//! point inside `Q(x)`, so the extension is normal and the test is `D > D0`.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::BigRational;
use crate::cycles::{analyze, CycleRecord};
use crate::dynatomic::{dynatomic_poly, MapSpec};
use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::numfield::subfield_degree_bounded;
use crate::poly::RatPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    DegreeComparison,
    QuadraticFastPath,
    Irreducibility,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DegreeComparison => "degree-comparison",
            Method::QuadraticFastPath => "quadratic-fast-path",
            Method::Irreducibility => "irreducibility",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Aggregate {
    Holds,
    Fails,
    Vacuous,
}

impl Aggregate {
    pub fn as_str(self) -> &'static str {
        match self {
            Aggregate::Holds => "holds",
            Aggregate::Fails => "fails",
            Aggregate::Vacuous => "vacuous",
        }
    }
}

impl fmt::Display for Aggregate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether rational points of exact period `N` take part in the quantification.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Interpretation {
    #[default]
    ExcludeRational,
    RationalFalsifies,
}

impl Interpretation {
    pub fn as_str(self) -> &'static str {
        match self {
            Interpretation::ExcludeRational => "exclude-rational",
            Interpretation::RationalFalsifies => "rational-falsifies",
        }
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointVerdict {
    pub factor: RatPoly,
    /// `D = [Q(x):Q]`.
    pub field_degree: usize,
    /// `D0 = [Q(e_1, …, e_N):Q]`.
    pub orbit_degree: usize,
    pub holds: bool,
    pub method: Method,
    /// Independent checks that agreed with `holds`.
    pub confirmed_by: Vec<Method>,
}

#[derive(Clone, Debug)]
pub struct PropertyAReport {
    pub d: u32,
    pub c: BigRational,
    pub n: u32,
    pub phi_degree: usize,
    /// Degrees of the irreducible factors of `Φ_N`, with multiplicity.
    pub factor_degrees: Vec<usize>,
    pub irreducible: bool,
    /// Every record extracted from `Φ_N`, in canonical factor order.
    pub records: Vec<CycleRecord>,
    /// Verdicts paired with the index of their record.
    pub verdicts: Vec<(usize, PointVerdict)>,
    /// Rational points of exact period `N`, ascending.
    pub rational_points: Vec<BigRational>,
    /// Indices of flagged records (exact period below `N` or repeated factor).
    pub degenerate: Vec<usize>,
    pub aggregate: Aggregate,
    pub interpretation: Interpretation,
}

impl PropertyAReport {
    /// Nondegenerate quadratic records with their verdicts.
    pub fn quadratic(&self) -> impl Iterator<Item = (&CycleRecord, &PointVerdict)> {
        self.verdicts
            .iter()
            .map(|(i, v)| (&self.records[*i], v))
            .filter(|(r, _)| r.field_degree == 2)
    }

    /// Number of distinct quadratic cycles of exact period `N`.
    pub fn quadratic_cycle_count(&self) -> usize {
        self.quadratic().map(|(r, _)| r.cycle_count()).sum()
    }
}

/// Degree comparison for one nonrational point of exact period `N`.
pub fn check_point(record: &CycleRecord, spec: &MapSpec, n: u32) -> Result<PointVerdict> {
    if record.field_degree < 2 {
        return Err(Error::RationalPoint);
    }
    if record.exact_period != n as usize {
        return Err(Error::InvalidPeriod(n));
    }
    if record.d != spec.d() || &record.c != spec.c() {
        return Err(Error::ParentMismatch);
    }
    let dim = record.field_degree;
    // [Q(x):Q(p(x))] is the number of cycle steps landing on conjugates of x.
    let bound = dim / record.self_steps.len();
    let orbit_degree = subfield_degree_bounded(&record.symmetric, Some(bound))?;
    if orbit_degree != bound || !dim.is_multiple_of(orbit_degree) {
        return Err(Error::Invariant(alloc::format!(
            "orbit field degree {orbit_degree} disagrees with stabilizer bound {bound} (D = {dim})"
        )));
    }
    Ok(PointVerdict {
        factor: record.factor.clone(),
        field_degree: dim,
        orbit_degree,
        holds: dim > orbit_degree,
        method: Method::DegreeComparison,
        confirmed_by: Vec::new(),
    })
}

/// For a quadratic cycle: whether `φ^(N/2)(z_0)` is the conjugate of `z_0`.
/// Always false for odd `N`.
pub fn check_quadratic_cycle(record: &CycleRecord, n: u32) -> Result<bool> {
    if record.field_degree == 1 {
        return Err(Error::RationalPoint);
    }
    let points = record
        .quadratic_points
        .as_ref()
        .ok_or(Error::NotQuadratic {
            degree: record.field_degree,
        })?;
    if n % 2 == 1 {
        return Ok(false);
    }
    let z0 = &points[0];
    let mut z = z0.clone();
    for _ in 0..n / 2 {
        z = z.apply_phi(record.d, &record.c);
    }
    Ok(z == z0.conjugate())
}

/// Whether `Φ_N` is irreducible over Q; for `d = 2` this forces Property A.
pub fn irreducibility_sufficient(spec: &MapSpec, n: u32) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidPeriod(n));
    }
    is_irreducible(&dynatomic_poly(spec, n)?)
}

/// Whether the cycle trace `e_1` is rational.
pub fn trace_test(record: &CycleRecord) -> bool {
    record.trace_rational().is_some()
}

pub fn check_aggregate(spec: &MapSpec, n: u32) -> Result<PropertyAReport> {
    check_aggregate_with(spec, n, Interpretation::default())
}

pub fn check_aggregate_with(
    spec: &MapSpec,
    n: u32,
    interpretation: Interpretation,
) -> Result<PropertyAReport> {
    if n < 2 {
        return Err(Error::InvalidPeriod(n));
    }
    let analysis = analyze(spec, n)?;
    let fact = &analysis.factorization;
    let irreducible = fact.factors.len() == 1 && fact.factors[0].1 == 1;
    let mut verdicts = Vec::new();
    let mut rational_points = Vec::new();
    let mut degenerate = Vec::new();
    for (i, record) in analysis.records.iter().enumerate() {
        if record.is_flagged() {
            degenerate.push(i);
        }
        if record.degenerate {
            continue;
        }
        if record.field_degree == 1 {
            rational_points.extend(record.rational_points.iter().flatten().cloned());
            continue;
        }
        let mut verdict = check_point(record, spec, n)?;
        if record.field_degree == 2 {
            let fast = check_quadratic_cycle(record, n)?;
            if fast != verdict.holds {
                return Err(Error::Invariant(alloc::format!(
                    "quadratic methods disagree for {} at c = {}",
                    record.factor,
                    spec.c()
                )));
            }
            verdict.confirmed_by.push(Method::QuadraticFastPath);
        }
        verdicts.push((i, verdict));
    }
    rational_points.sort();
    let aggregate = if verdicts.is_empty() && rational_points.is_empty() {
        Aggregate::Vacuous
    } else if interpretation == Interpretation::RationalFalsifies && !rational_points.is_empty() {
        Aggregate::Fails
    } else if verdicts.iter().all(|(_, v)| v.holds) {
        Aggregate::Holds
    } else {
        Aggregate::Fails
    };
    if spec.d() == 2 && irreducible {
        if aggregate != Aggregate::Holds {
            return Err(Error::Invariant(alloc::format!(
                "Φ_{n} is irreducible at c = {} but the aggregate is {aggregate}",
                spec.c()
            )));
        }
        for (_, v) in verdicts.iter_mut() {
            v.confirmed_by.push(Method::Irreducibility);
        }
    }
    Ok(PropertyAReport {
        d: spec.d(),
        c: spec.c().clone(),
        n,
        phi_degree: analysis.phi.degree().unwrap_or(0),
        factor_degrees: fact.degrees(),
        irreducible,
        records: analysis.records,
        verdicts,
        rational_points,
        degenerate,
        aggregate,
        interpretation,
    })
}
