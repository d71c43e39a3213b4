mod common;

use common::*;
use dynatomic::{BiPoly, Error, RatPoly};
use proptest::prelude::*;

#[test]
fn parse_and_display() {
    let p = poly("z^3 - 1/2*z + 7");
    assert_eq!(p.to_string(), "z^3 + (-1/2)*z + 7");
    assert_eq!(p.coeff(1), q("-1/2"));
    let b: BiPoly = "z^2 + z + (c + 1)".parse().unwrap();
    assert_eq!(b.specialize(&int(1)), poly("z^2 + z + 2"));
}

#[test]
fn division_errors() {
    assert_eq!(
        poly("z^2").div_rem(&RatPoly::zero()),
        Err(Error::DivisionByZeroPoly)
    );
    assert_eq!(
        poly("z^2 + 1").exact_div(&poly("z + 1")),
        Err(Error::NonExactDivision)
    );
    assert_eq!(
        poly("z").exact_div(&poly("z^2")),
        Err(Error::NonExactDivision)
    );
    assert_eq!(RatPoly::zero().exact_div(&poly("z")), Ok(RatPoly::zero()));
}

#[test]
fn squarefree_decomposition_of_known_product() {
    let p = &poly("z - 1").pow(3) * &(&poly("z^2 + 1") * &poly("2*z + 3").pow(2));
    let parts = p.squarefree_decomposition().unwrap();
    assert_eq!(
        parts,
        vec![
            (poly("z^2 + 1"), 1),
            (poly("z + 3/2"), 2),
            (poly("z - 1"), 3)
        ]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(p in rat_poly(6, 20)) {
        prop_assert_eq!(p.to_string().parse::<RatPoly>().unwrap(), p);
    }

    #[test]
    fn division_identity(a in rat_poly(8, 20), b in nonzero_poly(4, 20)) {
        let (quot, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn exact_div_round_trip(a in rat_poly(6, 20), b in nonzero_poly(5, 20)) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn compose_is_associative(
        f in rat_poly(3, 5),
        g in rat_poly(3, 5),
        h in rat_poly(2, 5),
    ) {
        let left = RatPoly::compose(&RatPoly::compose(&f, &g), &h);
        let right = RatPoly::compose(&f, &RatPoly::compose(&g, &h));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn compose_evaluates_pointwise(f in rat_poly(4, 9), g in rat_poly(3, 9), x in rational(9)) {
        prop_assert_eq!(RatPoly::compose(&f, &g).eval(&x), f.eval(&g.eval(&x)));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(4, 9), b in nonzero_poly(4, 9), g in nonzero_poly(2, 9)) {
        let (x, y) = (&a * &g, &b * &g);
        let d = x.gcd(&y);
        prop_assert!(x.rem(&d).unwrap().is_zero());
        prop_assert!(y.rem(&d).unwrap().is_zero());
        prop_assert!(d.rem(&g.monic()).unwrap().is_zero());
    }

    #[test]
    fn squarefree_parts_reassemble(a in nonzero_poly(3, 9), b in nonzero_poly(2, 9)) {
        let p = &a * &b.pow(2);
        let parts = p.squarefree_decomposition().unwrap();
        let rebuilt = parts
            .iter()
            .fold(RatPoly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        prop_assert_eq!(rebuilt, p.monic());
        for (f, _) in &parts {
            prop_assert!(f.gcd(&f.derivative()).is_constant());
        }
    }

    #[test]
    fn specialization_is_a_ring_homomorphism(
        a in prop::collection::vec(rat_poly(3, 9), 0..4),
        b in prop::collection::vec(rat_poly(3, 9), 0..4),
        c in rational(9),
    ) {
        let (a, b) = (BiPoly::from_coeffs(a), BiPoly::from_coeffs(b));
        prop_assert_eq!((&a * &b).specialize(&c), &a.specialize(&c) * &b.specialize(&c));
        prop_assert_eq!((&a + &b).specialize(&c), &a.specialize(&c) + &b.specialize(&c));
        prop_assert_eq!((&a - &b).specialize(&c), &a.specialize(&c) - &b.specialize(&c));
    }
}
