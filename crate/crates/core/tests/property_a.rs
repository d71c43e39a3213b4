mod common;

use common::*;
use dynatomic::cycles::quadratic_cycles;
use dynatomic::numfield::QuotientAlgebra;
use dynatomic::property_a::{
    check_aggregate, check_aggregate_with, check_point, check_quadratic_cycle,
    irreducibility_sufficient, trace_test, Aggregate, Interpretation, Method,
};
use dynatomic::{is_irreducible, Error};
use proptest::prelude::*;

#[test]
fn six_cycle_verdict() {
    let s = spec(2, &q("-71/48"));
    let report = check_aggregate(&s, 6).unwrap();
    assert_eq!(report.aggregate, Aggregate::Holds);
    let quad: Vec<_> = report.quadratic().collect();
    assert_eq!(quad.len(), 1);
    let (rec, v) = quad[0];
    assert_eq!((v.field_degree, v.orbit_degree), (2, 1));
    assert!(v.confirmed_by.contains(&Method::QuadraticFastPath));
    assert!(trace_test(rec));
    assert_eq!(report.quadratic_cycle_count(), 1);
}

#[test]
fn trace_test_rejects_an_irrational_trace() {
    let mut rec = quadratic_cycles(&spec(2, &int(1)), 2).unwrap().remove(0);
    assert!(trace_test(&rec));
    let sqrt2 = QuotientAlgebra::new(&poly("z^2 - 2")).unwrap().generator();
    rec.trace = sqrt2;
    assert!(!trace_test(&rec));
}

#[test]
fn input_errors() {
    let s = spec(2, &int(1));
    let rec = quadratic_cycles(&s, 2).unwrap().remove(0);
    assert_eq!(
        check_point(&rec, &s, 4).unwrap_err(),
        Error::InvalidPeriod(4)
    );
    assert_eq!(
        check_point(&rec, &spec(2, &int(2)), 2).unwrap_err(),
        Error::ParentMismatch
    );
    assert_eq!(check_quadratic_cycle(&rec, 3), Ok(false));
    assert_eq!(check_aggregate(&s, 1).unwrap_err(), Error::InvalidPeriod(1));
    let rational = &check_aggregate(&spec(2, &q("-29/16")), 3).unwrap();
    let idx = rational
        .records
        .iter()
        .position(|r| r.field_degree == 1)
        .unwrap();
    let rec = &rational.records[idx];
    assert_eq!(
        check_point(rec, &spec(2, &q("-29/16")), 3).unwrap_err(),
        Error::RationalPoint
    );
}

#[test]
fn interpretations() {
    let s = spec(2, &q("-29/16"));
    let lenient = check_aggregate(&s, 3).unwrap();
    let strict = check_aggregate_with(&s, 3, Interpretation::RationalFalsifies).unwrap();
    assert_eq!(lenient.interpretation, Interpretation::ExcludeRational);
    assert_eq!(lenient.rational_points.len(), 3);
    assert_ne!(lenient.aggregate, Aggregate::Fails);
    assert_eq!(strict.aggregate, Aggregate::Fails);
    // Phi_2 at c = -3/4 is (z + 1/2)^2: only a degenerate record remains.
    let saddle = check_aggregate(&spec(2, &q("-3/4")), 2).unwrap();
    assert_eq!(saddle.aggregate, Aggregate::Vacuous);
    assert_eq!(saddle.degenerate.len(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn verdicts_are_consistent(c in parameter(10), n in 2u32..=4, d in 2u32..=3) {
        prop_assume!(d == 2 || n <= 3);
        let s = spec(d, &c);
        let report = check_aggregate(&s, n).unwrap();
        for (i, v) in &report.verdicts {
            let rec = &report.records[*i];
            prop_assert!(!rec.degenerate);
            prop_assert!(rec.field_degree >= 2);
            prop_assert_eq!(v.field_degree % v.orbit_degree, 0);
            prop_assert_eq!(v.holds, v.field_degree > v.orbit_degree);
            prop_assert_eq!(v.orbit_degree, v.field_degree / rec.self_steps.len());
            if rec.field_degree == 2 {
                prop_assert_eq!(check_quadratic_cycle(rec, n).unwrap(), v.holds);
                if v.holds {
                    prop_assert!(trace_test(rec));
                }
            }
        }
        let expected = if report.verdicts.is_empty() && report.rational_points.is_empty() {
            Aggregate::Vacuous
        } else if report.verdicts.iter().all(|(_, v)| v.holds) {
            Aggregate::Holds
        } else {
            Aggregate::Fails
        };
        prop_assert_eq!(report.aggregate, expected);
        let phi = dynatomic::dynatomic::dynatomic_poly(&s, n).unwrap();
        prop_assert_eq!(report.irreducible, is_irreducible(&phi).unwrap());
        prop_assert_eq!(irreducibility_sufficient(&s, n).unwrap(), report.irreducible);
        if d == 2 && report.irreducible {
            prop_assert_eq!(report.aggregate, Aggregate::Holds);
        }
        prop_assert_eq!(report.factor_degrees.iter().sum::<usize>(), report.phi_degree);
    }
}
