mod common;

use common::*;
use dynatomic::dynatomic::dynatomic_poly;
use dynatomic::{factor_over_q, is_irreducible, rational_roots, BigRational, RatPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n: i64 = n.abs().try_into().unwrap();
    (1..=n).filter(|k| n % k == 0).map(BigInt::from).collect()
}

/// Rational roots by the rational root theorem, with a nonzero constant term
/// after removing the root at zero.
fn brute_rational_roots(p: &RatPoly) -> Vec<BigRational> {
    let (ints, _) = p.primitive_integer_form().unwrap();
    let mut coeffs = ints.coeffs().to_vec();
    let mut roots = Vec::new();
    if coeffs[0].is_zero() {
        roots.push(BigRational::zero());
        while coeffs[0].is_zero() {
            coeffs.remove(0);
        }
    }
    let lead = coeffs.last().unwrap().clone();
    for a in positive_divisors(&coeffs[0]) {
        for b in positive_divisors(&lead) {
            for sign in [1, -1] {
                let x = BigRational::new(&a * sign, b.clone());
                if p.eval(&x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Degree at most 3: irreducible over Q iff there is no rational root.
fn small_degree_irreducible(p: &RatPoly) -> bool {
    let d = p.degree().unwrap();
    assert!((1..=3).contains(&d));
    d == 1 || brute_rational_roots(p).is_empty()
}

#[test]
fn dynatomic_examples() {
    let phi3_0 = dynatomic_poly(&spec(2, &int(0)), 3).unwrap();
    assert_eq!(phi3_0, poly("z^6 + z^5 + z^4 + z^3 + z^2 + z + 1"));
    assert!(is_irreducible(&phi3_0).unwrap());
    let phi3_m2 = dynatomic_poly(&spec(2, &int(-2)), 3).unwrap();
    assert_eq!(factor_over_q(&phi3_m2).unwrap().degrees(), [3, 3]);
    let phi4_0 = dynatomic_poly(&spec(2, &int(0)), 4).unwrap();
    assert!(!is_irreducible(&phi4_0).unwrap());
    assert_eq!(factor_over_q(&phi4_0).unwrap().expand(), phi4_0);
}

#[test]
fn hard_cases_for_zassenhaus() {
    // Swinnerton-Dyer polynomials split into linear or quadratic factors modulo every prime.
    assert!(is_irreducible(&poly("z^4 - 10*z^2 + 1")).unwrap());
    let sd3 = poly("z^8 - 40*z^6 + 352*z^4 - 960*z^2 + 576");
    assert!(is_irreducible(&sd3).unwrap());
    let product = &poly("z^4 - 10*z^2 + 1") * &poly("z^4 + 1");
    assert_eq!(factor_over_q(&product).unwrap().degrees(), [4, 4]);
    let f = factor_over_q(&poly("2*z^2 - 8")).unwrap();
    assert_eq!(f.content, int(2));
    assert_eq!(f.factors, vec![(poly("z - 2"), 1), (poly("z + 2"), 1)]);
}

#[test]
fn cyclotomic_factorizations() {
    for n in [6usize, 8, 12, 15, 30] {
        let p = &RatPoly::monomial(int(1), n) - &RatPoly::one();
        let f = factor_over_q(&p).unwrap();
        let divisor_count = (1..=n).filter(|k| n % k == 0).count();
        assert_eq!(f.factors.len(), divisor_count, "z^{n} - 1");
        assert_eq!(f.expand(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factors_multiply_back(parts in prop::collection::vec(int_poly(1, 3, 6), 1..4), m in 1u32..3) {
        let mut p = RatPoly::one();
        for (i, f) in parts.iter().enumerate() {
            p = &p * &f.pow(if i == 0 { m } else { 1 });
        }
        let fact = factor_over_q(&p).unwrap();
        prop_assert_eq!(fact.expand(), p.clone());
        prop_assert!(fact.count_with_multiplicity() as usize >= parts.len() + m as usize - 1);
        for (g, _) in &fact.factors {
            prop_assert!(g.leading().unwrap().is_positive());
            if g.degree().unwrap() <= 3 {
                prop_assert!(small_degree_irreducible(g), "factor {} is reducible", g);
            }
            prop_assert!(is_irreducible(g).unwrap());
        }
    }

    #[test]
    fn irreducibility_matches_root_oracle(p in int_poly(1, 3, 12)) {
        prop_assert_eq!(is_irreducible(&p).unwrap(), small_degree_irreducible(&p));
    }

    #[test]
    fn rational_roots_match_brute_force(p in int_poly(1, 5, 12)) {
        let roots: Vec<BigRational> = rational_roots(&p).unwrap().into_iter().map(|(r, _)| r).collect();
        prop_assert_eq!(roots, brute_rational_roots(&p));
    }
}
