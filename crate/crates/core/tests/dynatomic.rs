mod common;

use common::*;
use dynatomic::dynatomic::{
    check_degree_guard, dynatomic_degree, dynatomic_poly, dynatomic_poly_generic, iterate,
    verify_product_identity, MapSpec,
};
use dynatomic::{BiPoly, Error, RatPoly};
use proptest::prelude::*;

fn mobius(n: u32) -> i64 {
    let primes: Vec<u32> = (2..=n)
        .filter(|p| n.is_multiple_of(*p) && (2..*p).all(|k| p % k != 0))
        .collect();
    if primes.iter().any(|p| n.is_multiple_of(p * p)) {
        0
    } else if primes.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn degree_formula(d: u32, n: u32) -> usize {
    (1..=n)
        .filter(|m| n.is_multiple_of(*m))
        .map(|m| mobius(n / m) * i64::from(d).pow(m))
        .sum::<i64>() as usize
}

#[test]
fn small_cases() {
    assert_eq!(iterate(&spec(2, &int(1)), 2), poly("z^4 + 2*z^2 + 2"));
    assert_eq!(
        dynatomic_poly(&spec(2, &int(1)), 1).unwrap(),
        poly("z^2 - z + 1")
    );
    assert_eq!(
        dynatomic_poly_generic(2, 2).unwrap().to_string(),
        "z^2 + z + (c + 1)"
    );
    assert_eq!(dynatomic_degree(2, 11), Ok(2046));
    assert!(matches!(
        check_degree_guard(2, 13),
        Err(Error::DegreeGuard { .. })
    ));
    assert_eq!(check_degree_guard(2, 12), Ok(4020));
    assert_eq!(
        MapSpec::new(1, int(0)).unwrap_err(),
        Error::InvalidMapDegree(1)
    );
    assert!(dynatomic_degree(2, 0).is_err());
}

#[test]
fn degrees_follow_mobius_inversion() {
    let cases = (1..=8)
        .map(|n| (2, n))
        .chain((1..=5).flat_map(|n| [(3, n), (4, n)]));
    for (d, n) in cases {
        let expected = degree_formula(d, n);
        assert_eq!(dynatomic_degree(d, n), Ok(expected as u64), "d={d}, N={n}");
        for c in [q("-7/4"), int(0), int(3)] {
            let p = dynatomic_poly(&spec(d, &c), n).unwrap();
            assert_eq!(p.degree(), Some(expected), "d={d}, N={n}, c={c}");
            assert!(p.leading().unwrap() == &int(1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn generic_form_specializes(c in parameter(20), d in 2u32..=3, n in 1u32..=4) {
        prop_assume!(d == 2 || n <= 3);
        let generic = dynatomic_poly_generic(d, n).unwrap();
        prop_assert_eq!(generic.specialize(&c), dynatomic_poly(&spec(d, &c), n).unwrap());
    }

    #[test]
    fn product_identity(c in parameter(10), d in 2u32..=3, n in 1u32..=5) {
        let s = spec(d, &c);
        prop_assert!(verify_product_identity(&s, n).unwrap());
        let mut product = RatPoly::one();
        for m in (1..=n).filter(|m| n % m == 0) {
            product = &product * &dynatomic_poly(&s, m).unwrap();
        }
        prop_assert_eq!(product, &iterate(&s, n as usize) - &RatPoly::identity());
    }

    #[test]
    fn iterates_compose(c in parameter(10), a in 0usize..=3, b in 0usize..=3) {
        let s = spec(2, &c);
        prop_assert_eq!(
            RatPoly::compose(&iterate(&s, a), &iterate(&s, b)),
            iterate(&s, a + b)
        );
    }

    #[test]
    fn rational_periodic_points_are_roots(c in parameter(12), n in 1u32..=3) {
        // Points of exact period n found by iterating rational roots of phi^n(z) - z.
        let s = spec(2, &c);
        let phi = dynatomic_poly(&s, n).unwrap();
        for (z, _) in dynatomic::rational_roots(&(&iterate(&s, n as usize) - &RatPoly::identity())).unwrap() {
            let mut w = z.clone();
            let mut period = 0;
            loop {
                w = s.apply(&w);
                period += 1;
                if w == z {
                    break;
                }
            }
            if period == n {
                prop_assert!(phi.eval(&z) == int(0));
            }
        }
    }
}

#[test]
fn generic_dynatomic_divides_over_q_c() {
    let phi3 = dynatomic_poly_generic(2, 3).unwrap();
    let z = BiPoly::z();
    let c = BiPoly::c();
    let f = &(&z * &z) + &c;
    let f2 = &(&f * &f) + &c;
    let f3 = &(&f2 * &f2) + &c;
    assert_eq!((&f3 - &z).exact_div(&(&f - &z)).unwrap(), phi3);
}
