//! Reference checks on known dynatomic results, recomputed from scratch.

use dynatomic::arith::{
    enumerate_rationals_by_height, is_mersenne_prime_exponent, parse_rational, BigRational,
};
use dynatomic::cycles::{analyze, quadratic_cycles, CycleRecord};
use dynatomic::dynatomic::{dynatomic_degree, dynatomic_poly, verify_product_identity, MapSpec};
use dynatomic::numfield::QuadraticElement;
use dynatomic::property_a::{
    check_aggregate, check_point, check_quadratic_cycle, trace_test, Aggregate, PropertyAReport,
};
use dynatomic::{is_irreducible, Error};
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct ItemResult {
    pub id: &'static str,
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<(bool, String), Error>;

fn q(s: &str) -> BigRational {
    parse_rational(s).expect("literal rational")
}

fn spec(d: u32, c: &BigRational) -> Result<MapSpec, Error> {
    MapSpec::new(d, c.clone())
}

fn quad(d: i64, a: &str, b: &str) -> QuadraticElement {
    QuadraticElement::new(d.into(), q(a), q(b)).expect("squarefree literal")
}

/// Whether `found` is a rotation of `expected`.
fn same_cycle(found: &[QuadraticElement], expected: &[QuadraticElement]) -> bool {
    found.len() == expected.len()
        && (0..found.len())
            .any(|s| (0..found.len()).all(|i| found[(i + s) % found.len()] == expected[i]))
}

fn six_cycle() -> Outcome {
    let s = spec(2, &q("-71/48"))?;
    let recs = quadratic_cycles(&s, 6)?;
    let [rec] = recs.as_slice() else {
        return Ok((
            false,
            format!("{} quadratic records, expected 1", recs.len()),
        ));
    };
    let z: Vec<QuadraticElement> = [("-1", "1/12"), ("-1/4", "-1/6"), ("-1/2", "1/12")]
        .iter()
        .map(|(a, b)| quad(33, a, b))
        .collect();
    let expected: Vec<QuadraticElement> = z
        .iter()
        .cloned()
        .chain(z.iter().map(QuadraticElement::conjugate))
        .collect();
    let points = rec.quadratic_points.as_deref().unwrap_or_default();
    let verdict = check_point(rec, &s, 6)?;
    let report = check_aggregate(&s, 6)?;
    let checks = [
        ("one cycle", rec.cycle_count() == 1),
        ("field Q(sqrt(33))", rec.discriminant() == Some(&33.into())),
        ("points match", same_cycle(points, &expected)),
        ("exact period 6", rec.exact_period == 6),
        ("quadratic fast path", check_quadratic_cycle(rec, 6)?),
        (
            "(D, D0) = (2, 1), holds",
            (verdict.field_degree, verdict.orbit_degree, verdict.holds) == (2, 1, true),
        ),
        ("trace -7/2", rec.trace_rational() == Some(q("-7/2"))),
        ("aggregate holds", report.aggregate == Aggregate::Holds),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Ok((
        failed.is_empty(),
        if failed.is_empty() {
            "z_0 = -1 + 1/12*sqrt(33), exact period 6, (D, D0) = (2, 1), trace -7/2".into()
        } else {
            format!("failed: {}", failed.join(", "))
        },
    ))
}

fn reducible_at_minus_two() -> Outcome {
    let s = spec(2, &q("-2"))?;
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 3..=6 {
        let red = !is_irreducible(&dynatomic_poly(&s, n)?)?;
        ok &= red;
        parts.push(format!(
            "N={n} {}",
            if red { "reducible" } else { "IRREDUCIBLE" }
        ));
    }
    Ok((ok, parts.join(", ")))
}

fn mersenne() -> Outcome {
    let s = spec(2, &q("0"))?;
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [4, 6] {
        let red = !is_irreducible(&dynatomic_poly(&s, n)?)? && !is_mersenne_prime_exponent(n)?;
        ok &= red;
        parts.push(format!("N={n} reducible by factorization: {red}"));
    }
    let m = (1u64 << 11) - 1;
    let witness =
        !is_mersenne_prime_exponent(11)? && (2..m).find(|k| m.is_multiple_of(*k)) == Some(23);
    ok &= witness;
    parts.push(format!(
        "N=11 via Mersenne witness 2047 = 23*89 (Phi_11 has degree {}, not factored): {witness}",
        dynatomic_degree(2, 11)?
    ));
    for n in [2, 3, 5, 7] {
        let irr = is_irreducible(&dynatomic_poly(&s, n)?)? && is_mersenne_prime_exponent(n)?;
        ok &= irr;
        parts.push(format!("N={n} irreducible: {irr}"));
    }
    Ok((ok, parts.join("; ")))
}

fn scan(pool: &rayon::ThreadPool, n: u32, height: u64) -> Result<Vec<PropertyAReport>, Error> {
    let params: Vec<BigRational> = enumerate_rationals_by_height(height).collect();
    pool.install(|| {
        params
            .par_iter()
            .map(|c| check_aggregate(&spec(2, c)?, n))
            .collect()
    })
}

fn exact_period_two_cycles(r: &PropertyAReport) -> usize {
    r.records
        .iter()
        .filter(|rec| !rec.degenerate)
        .map(CycleRecord::cycle_count)
        .sum()
}

fn two_cycles(pool: &rayon::ThreadPool) -> Outcome {
    let reports = scan(pool, 2, 20)?;
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| exact_period_two_cycles(r) > 1 || r.aggregate == Aggregate::Fails)
        .map(|r| r.c.to_string())
        .collect();
    Ok((
        bad.is_empty(),
        format!(
            "{} parameters of height <= 20, violations: {bad:?}",
            reports.len()
        ),
    ))
}

fn period_three(pool: &rayon::ThreadPool) -> Outcome {
    let reports = scan(pool, 3, 10)?;
    let fails = reports
        .iter()
        .filter(|r| r.aggregate == Aggregate::Fails)
        .count();
    Ok((
        fails == 0,
        format!("{} parameters, {fails} failures", reports.len()),
    ))
}

fn period_five(pool: &rayon::ThreadPool) -> Outcome {
    let reports = scan(pool, 5, 6)?;
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| r.aggregate == Aggregate::Holds && r.quadratic_cycle_count() > 0)
        .map(|r| r.c.to_string())
        .collect();
    Ok((
        bad.is_empty(),
        format!(
            "{} parameters of height <= 6, quadratic 5-cycles at {bad:?}",
            reports.len()
        ),
    ))
}

fn product_identity() -> Outcome {
    let params: Vec<BigRational> = enumerate_rationals_by_height(10)
        .step_by(6)
        .take(20)
        .collect();
    let mut checked = 0;
    for d in [2, 3] {
        for c in &params {
            for n in 1..=6 {
                if !verify_product_identity(&spec(d, c)?, n)? {
                    return Ok((false, format!("fails at d={d}, c={c}, n={n}")));
                }
                checked += 1;
            }
        }
    }
    Ok((
        true,
        format!("{checked} identities over {} parameters", params.len()),
    ))
}

fn degree_formula() -> Outcome {
    let mut checked = 0;
    for d in [2u32, 3, 4] {
        for n in 1..=6u32 {
            let expected = dynatomic_degree(d, n)?;
            for c in ["0", "1"] {
                let got = dynatomic_poly(&spec(d, &q(c))?, n)?.degree().unwrap_or(0) as u64;
                if got != expected {
                    return Ok((
                        false,
                        format!("d={d}, N={n}, c={c}: degree {got}, expected {expected}"),
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok((true, format!("{checked} polynomials, d in 2..=4, N <= 6")))
}

fn cross_consistency(scans: &[(u32, Vec<PropertyAReport>)]) -> Outcome {
    let mut quadratic = 0;
    let mut irreducible = 0;
    for (n, reports) in scans {
        for r in reports {
            for (rec, v) in r.quadratic() {
                quadratic += 1;
                if check_quadratic_cycle(rec, *n)? != v.holds {
                    return Ok((false, format!("methods disagree at c={}, N={n}", r.c)));
                }
            }
            if r.irreducible {
                irreducible += 1;
                if r.aggregate != Aggregate::Holds {
                    return Ok((
                        false,
                        format!("irreducible but {} at c={}, N={n}", r.aggregate, r.c),
                    ));
                }
            }
        }
    }
    Ok((
        true,
        format!("{quadratic} quadratic records agree; {irreducible} irreducible cases hold"),
    ))
}

fn trace_rationality(scans: &[(u32, Vec<PropertyAReport>)]) -> Outcome {
    let mut checked = 0;
    for (n, reports) in scans {
        for r in reports {
            for (rec, v) in r.quadratic() {
                if v.holds {
                    checked += 1;
                    if !trace_test(rec) {
                        return Ok((false, format!("irrational trace at c={}, N={n}", r.c)));
                    }
                }
            }
        }
    }
    Ok((
        true,
        format!("{checked} holding quadratic cycles with rational trace"),
    ))
}

fn small_examples() -> Outcome {
    let two_one = check_aggregate(&spec(2, &q("1"))?, 2)?;
    let cyclotomic = check_aggregate(&spec(2, &q("0"))?, 3)?;
    let double = check_aggregate(&spec(2, &q("-3/4"))?, 2)?;
    let three_cycle = analyze(&spec(2, &q("-29/16"))?, 3)?;
    let rational: Vec<BigRational> = three_cycle
        .records
        .iter()
        .filter(|r| r.field_degree == 1 && !r.degenerate)
        .flat_map(|r| r.rational_points.clone().unwrap_or_default())
        .collect();
    let mut sorted = rational.clone();
    sorted.sort();
    let checks = [
        ("(2, 1, 2) holds", two_one.aggregate == Aggregate::Holds),
        (
            "(2, 0, 3): D = 6, D0 = 2",
            cyclotomic.verdicts.len() == 1
                && (
                    cyclotomic.verdicts[0].1.field_degree,
                    cyclotomic.verdicts[0].1.orbit_degree,
                ) == (6, 2),
        ),
        (
            "(2, -3/4, 2) vacuous",
            double.aggregate == Aggregate::Vacuous,
        ),
        (
            "rational 3-cycle at -29/16",
            sorted == [q("-7/4"), q("-1/4"), q("5/4")],
        ),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Ok((
        failed.is_empty(),
        format!("{} checks, failed: {failed:?}", checks.len()),
    ))
}

fn item(id: &'static str, claim: &'static str, outcome: Outcome) -> ItemResult {
    let (passed, detail) = match outcome {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    ItemResult {
        id,
        claim,
        passed,
        detail,
    }
}

/// Runs every corpus item in a fixed order.
pub fn run_corpus(pool: &rayon::ThreadPool) -> Vec<ItemResult> {
    let mut items = vec![
        item(
            "six-cycle",
            "exactly one 6-cycle at c = -71/48, in Q(sqrt(33))",
            six_cycle(),
        ),
        item(
            "reducible-minus-two",
            "Phi_N(z, -2) is reducible for N = 3..6",
            reducible_at_minus_two(),
        ),
        item(
            "mersenne",
            "Phi_N(z, 0) is reducible when 2^N - 1 is not prime",
            mersenne(),
        ),
        item(
            "two-cycles",
            "at most one 2-cycle; (2, c, 2) satisfies Property A",
            two_cycles(pool),
        ),
        item(
            "period-three",
            "(2, c, 3) satisfies Property A",
            period_three(pool),
        ),
        item(
            "period-five",
            "no quadratic 5-cycles where Property A holds",
            period_five(pool),
        ),
        item(
            "product-identity",
            "phi^n(z) - z is the product of Phi_N over N | n",
            product_identity(),
        ),
        item(
            "degree-formula",
            "deg Phi_N = sum of mu(N/m) d^m over m | N",
            degree_formula(),
        ),
        item(
            "examples",
            "worked examples at c = 1, 0, -3/4, -29/16",
            small_examples(),
        ),
    ];
    let scans: Result<Vec<(u32, Vec<PropertyAReport>)>, Error> = [2, 4, 6]
        .into_iter()
        .map(|n| Ok((n, scan(pool, n, 10)?)))
        .collect();
    match scans {
        Ok(scans) => {
            items.push(item(
                "cross-consistency",
                "degree comparison, quadratic fast path and irreducibility agree",
                cross_consistency(&scans),
            ));
            items.push(item(
                "trace-rationality",
                "the trace of a cycle with Property A is rational",
                trace_rationality(&scans),
            ));
        }
        Err(e) => {
            for (id, claim) in [
                (
                    "cross-consistency",
                    "degree comparison, quadratic fast path and irreducibility agree",
                ),
                (
                    "trace-rationality",
                    "the trace of a cycle with Property A is rational",
                ),
            ] {
                items.push(item(id, claim, Err(e.clone())));
            }
        }
    }
    items
}
