//! JSON records and text renderings.

use std::fmt::Write as _;

use dynatomic::arith::{format_rational, naive_height};
use dynatomic::cycles::CycleRecord;
use dynatomic::property_a::PropertyAReport;
use dynatomic::{BigRational, Factorization, RatPoly};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

/// Small integers become JSON numbers, anything larger a decimal string.
pub fn int_value(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(n.to_string()),
    }
}

#[derive(Debug, Serialize)]
pub struct PhiJson {
    pub d: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub c: Option<String>,
    pub degree: usize,
    pub polynomial: String,
}

#[derive(Debug, Serialize)]
pub struct FactorJson {
    pub content: String,
    pub factors: Vec<FactorEntry>,
}

#[derive(Debug, Serialize)]
pub struct FactorEntry {
    pub degree: usize,
    pub multiplicity: u32,
    pub polynomial: String,
}

impl FactorJson {
    pub fn new(f: &Factorization) -> Self {
        FactorJson {
            content: format_rational(&f.content),
            factors: f
                .factors
                .iter()
                .map(|(g, m)| FactorEntry {
                    degree: g.degree().unwrap_or(0),
                    multiplicity: *m,
                    polynomial: g.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CycleJson {
    pub d: u32,
    pub c: String,
    #[serde(rename = "N")]
    pub n: u32,
    pub exact_period: usize,
    pub field_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<Value>,
    /// Rationals, `a + b*sqrt(D)` forms, or polynomials in z modulo `factor`.
    pub points: Vec<String>,
    pub trace: String,
    pub factor: String,
    pub merged_factors: usize,
    pub cycles: usize,
    pub multiplicity: u32,
    pub degenerate: bool,
}

pub fn point_texts(r: &CycleRecord) -> Vec<String> {
    if let Some(pts) = &r.rational_points {
        pts.iter().map(format_rational).collect()
    } else if let Some(pts) = &r.quadratic_points {
        pts.iter().map(|x| x.to_string()).collect()
    } else {
        r.orbit.iter().map(|x| x.to_string()).collect()
    }
}

pub fn trace_text(r: &CycleRecord) -> String {
    match (&r.quadratic_points, r.trace_rational()) {
        (_, Some(q)) => format_rational(&q),
        (Some(pts), None) => {
            let mut t = pts[0].clone();
            for p in &pts[1..] {
                t = t.add(p).expect("same quadratic field");
            }
            t.to_string()
        }
        (None, None) => r.trace.to_string(),
    }
}

impl CycleJson {
    pub fn new(r: &CycleRecord) -> Self {
        CycleJson {
            d: r.d,
            c: format_rational(&r.c),
            n: r.n,
            exact_period: r.exact_period,
            field_degree: r.field_degree,
            discriminant: r.discriminant().map(int_value),
            points: point_texts(r),
            trace: trace_text(r),
            factor: r.factor.to_string(),
            merged_factors: r.merged_factors.len(),
            cycles: r.cycle_count(),
            multiplicity: r.multiplicity,
            degenerate: r.degenerate,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerdictJson {
    pub factor_degree: usize,
    #[serde(rename = "D0")]
    pub d0: usize,
    pub holds: bool,
    pub method: &'static str,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub d: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub c: String,
    pub height: Value,
    pub phi_degree: usize,
    pub factor_degrees: Vec<usize>,
    pub rational_points: Vec<String>,
    pub degenerate_count: usize,
    pub verdicts: Vec<VerdictJson>,
    pub aggregate: &'static str,
    pub interpretation: &'static str,
}

impl ReportJson {
    pub fn new(r: &PropertyAReport) -> Self {
        ReportJson {
            d: r.d,
            n: r.n,
            c: format_rational(&r.c),
            height: int_value(&naive_height(&r.c)),
            phi_degree: r.phi_degree,
            factor_degrees: r.factor_degrees.clone(),
            rational_points: r.rational_points.iter().map(format_rational).collect(),
            degenerate_count: r.degenerate.len(),
            verdicts: r
                .verdicts
                .iter()
                .map(|(_, v)| VerdictJson {
                    factor_degree: v.field_degree,
                    d0: v.orbit_degree,
                    holds: v.holds,
                    method: v.method.as_str(),
                })
                .collect(),
            aggregate: r.aggregate.as_str(),
            interpretation: r.interpretation.as_str(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Counts {
    pub rational_points: usize,
    pub quadratic_cycles: usize,
    pub degenerate: usize,
}

#[derive(Debug, Serialize)]
pub struct QuadraticJson {
    pub discriminant: Value,
    pub trace: String,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct ScanRecord {
    pub d: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub c: String,
    pub height: Value,
    pub phi_degree: usize,
    pub factor_degrees: Vec<usize>,
    pub aggregate: &'static str,
    pub counts: Counts,
    pub quadratic: Vec<QuadraticJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl ScanRecord {
    pub fn new(r: &PropertyAReport, runtime_ms: Option<u64>) -> Self {
        ScanRecord {
            d: r.d,
            n: r.n,
            c: format_rational(&r.c),
            height: int_value(&naive_height(&r.c)),
            phi_degree: r.phi_degree,
            factor_degrees: r.factor_degrees.clone(),
            aggregate: r.aggregate.as_str(),
            counts: Counts {
                rational_points: r.rational_points.len(),
                quadratic_cycles: r.quadratic_cycle_count(),
                degenerate: r.degenerate.len(),
            },
            quadratic: r
                .quadratic()
                .map(|(rec, v)| QuadraticJson {
                    discriminant: rec.discriminant().map(int_value).unwrap_or(Value::Null),
                    trace: trace_text(rec),
                    holds: v.holds,
                })
                .collect(),
            runtime_ms,
        }
    }
}

/// Flat projection of [`ScanRecord`] for CSV output.
#[derive(Debug, Serialize)]
pub struct ScanRow<'a> {
    pub d: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub c: &'a str,
    pub height: String,
    pub phi_degree: usize,
    pub factor_degrees: String,
    pub aggregate: &'a str,
    pub rational_points: usize,
    pub quadratic_cycles: usize,
    pub degenerate: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl<'a> ScanRow<'a> {
    pub fn new(r: &'a ScanRecord) -> Self {
        ScanRow {
            d: r.d,
            n: r.n,
            c: &r.c,
            height: r.height.to_string().trim_matches('"').to_string(),
            phi_degree: r.phi_degree,
            factor_degrees: r
                .factor_degrees
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            aggregate: r.aggregate,
            rational_points: r.counts.rational_points,
            quadratic_cycles: r.counts.quadratic_cycles,
            degenerate: r.counts.degenerate,
            runtime_ms: r.runtime_ms,
        }
    }
}

fn describe_c(c: &BigRational) -> String {
    format!("{} (height {})", format_rational(c), naive_height(c))
}

pub fn render_factorization(f: &Factorization) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "content {}", format_rational(&f.content));
    for (g, m) in &f.factors {
        let _ = writeln!(
            out,
            "degree {} multiplicity {m}: {g}",
            g.degree().unwrap_or(0)
        );
    }
    out
}

pub fn render_cycle(r: &CycleRecord) -> String {
    let mut out = String::new();
    let kind = match r.field_degree {
        1 => "rational".to_string(),
        2 => format!(
            "quadratic, Q(sqrt({}))",
            r.discriminant().map(|d| d.to_string()).unwrap_or_default()
        ),
        k => format!("degree {k}"),
    };
    let _ = writeln!(
        out,
        "exact period {} ({kind}), {} cycle(s) over {} factor(s){}",
        r.exact_period,
        r.cycle_count(),
        r.merged_factors.len(),
        if r.degenerate { ", degenerate" } else { "" }
    );
    let _ = writeln!(out, "  factor: {}", r.factor);
    if r.multiplicity > 1 {
        let _ = writeln!(out, "  multiplicity: {}", r.multiplicity);
    }
    let pts = point_texts(r);
    if r.field_degree <= 2 {
        for (i, p) in pts.iter().enumerate() {
            let _ = writeln!(out, "  z_{i} = {p}");
        }
    } else {
        let _ = writeln!(out, "  z_0 = z, a root of the factor");
        for (i, p) in pts.iter().enumerate().skip(1) {
            let _ = writeln!(out, "  z_{i} = {p}");
        }
    }
    let _ = writeln!(out, "  trace: {}", trace_text(r));
    out
}

pub fn render_report(r: &PropertyAReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "d = {}, N = {}, c = {}", r.d, r.n, describe_c(&r.c));
    let _ = writeln!(
        out,
        "Phi_N degree {}, factor degrees {:?}",
        r.phi_degree, r.factor_degrees
    );
    let rational: Vec<String> = r.rational_points.iter().map(format_rational).collect();
    let _ = writeln!(
        out,
        "rational points of exact period N: {}",
        if rational.is_empty() {
            "none".to_string()
        } else {
            rational.join(", ")
        }
    );
    let _ = writeln!(out, "flagged records: {}", r.degenerate.len());
    for (i, v) in &r.verdicts {
        let rec = &r.records[*i];
        let confirmed = if v.confirmed_by.is_empty() {
            String::new()
        } else {
            let names: Vec<&str> = v.confirmed_by.iter().map(|m| m.as_str()).collect();
            format!("; confirmed by {}", names.join(", "))
        };
        let _ = writeln!(
            out,
            "point of degree {}: D = {}, D0 = {}, {} ({}{confirmed})",
            v.field_degree,
            v.field_degree,
            v.orbit_degree,
            if v.holds { "holds" } else { "fails" },
            v.method
        );
        if rec.field_degree == 2 {
            for line in render_cycle(rec).lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
    }
    let _ = writeln!(out, "aggregate: {} ({})", r.aggregate, r.interpretation);
    out
}

pub fn render_phi(p: &RatPoly) -> String {
    format!("# degree {}\n{p}\n", p.degree().unwrap_or(0))
}
