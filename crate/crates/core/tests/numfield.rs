mod common;

use std::sync::Arc;

use common::*;
use dynatomic::numfield::{
    as_quadratic, minimal_polynomial, subfield_degree, subfield_degree_bounded, AlgElement,
    QuadraticElement, QuotientAlgebra,
};
use dynatomic::{is_irreducible, Error, RatPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

const MODULI: [&str; 4] = [
    "z^3 - 2",
    "z^4 - 10*z^2 + 1",
    "z^6 + z^5 + z^4 + z^3 + z^2 + z + 1",
    "z^2 + z + 37/48",
];

fn algebra(i: usize) -> Arc<QuotientAlgebra> {
    QuotientAlgebra::new(&poly(MODULI[i])).unwrap()
}

fn element(i: usize) -> impl Strategy<Value = AlgElement> {
    let a = algebra(i);
    rat_poly(a.degree() - 1, 9).prop_map(move |p| AlgElement::new(&a, p))
}

fn any_element() -> impl Strategy<Value = AlgElement> {
    prop_oneof![element(0), element(1), element(2), element(3)]
}

fn pair() -> impl Strategy<Value = (AlgElement, AlgElement)> {
    (0..MODULI.len()).prop_flat_map(|i| (element(i), element(i)))
}

#[test]
fn reduction_and_mismatch() {
    let a = QuotientAlgebra::new(&poly("z^2 + z + 2")).unwrap();
    let z = a.generator();
    assert_eq!(z.mul(&z).unwrap().rep(), poly("-z - 2"));
    assert_eq!(z.apply_phi(2, &int(1)).rep(), poly("-z - 1"));
    let b = algebra(0);
    assert_eq!(z.add(&b.generator()).unwrap_err(), Error::ParentMismatch);
    assert_eq!(
        QuotientAlgebra::new(&poly("3")).unwrap_err(),
        Error::ConstantPolynomial
    );
}

#[test]
fn gauss_period_generates_quadratic_subfield() {
    let a = algebra(2);
    let z = a.generator();
    let t = z.add(&z.pow(2)).unwrap().add(&z.pow(4)).unwrap();
    assert_eq!(minimal_polynomial(&t), poly("z^2 + z + 2"));
    assert_eq!(subfield_degree(std::slice::from_ref(&t)), Ok(2));
    assert_eq!(subfield_degree(&[t, a.constant(q("5/3"))]), Ok(2));
    assert_eq!(subfield_degree(&[z]), Ok(6));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimal_polynomial_annihilates(x in any_element()) {
        let m = minimal_polynomial(&x);
        prop_assert!(x.eval_poly(&m).is_zero());
        let dim = x.parent().degree();
        let k = m.degree().unwrap();
        prop_assert_eq!(dim % k, 0);
        prop_assert!(is_irreducible(&m).unwrap());
        prop_assert_eq!(subfield_degree(std::slice::from_ref(&x)).unwrap(), k);
        prop_assert_eq!(subfield_degree_bounded(&[x], Some(k)).unwrap(), k);
    }

    #[test]
    fn ring_axioms((x, y) in pair(), s in rational(9)) {
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(&xy, &y.mul(&x).unwrap());
        let x_y2 = x.mul(&y.add(&y).unwrap()).unwrap();
        prop_assert_eq!(x_y2, xy.add(&xy).unwrap());
        prop_assert_eq!(x.mul(&xy).unwrap(), x.mul(&x).unwrap().mul(&y).unwrap());
        prop_assert_eq!(x.scale(&s), x.mul(&x.parent().constant(s.clone())).unwrap());
        prop_assert!(x.sub(&x).unwrap().is_zero());
        // The product of representatives reduces to the product in the algebra.
        let rep = (&x.rep() * &y.rep()).rem(x.parent().modulus()).unwrap();
        prop_assert_eq!(xy.rep(), rep);
    }

    #[test]
    fn phi_is_power_plus_constant(x in any_element(), d in 2u32..=4, c in rational(9)) {
        prop_assert_eq!(x.apply_phi(d, &c), x.pow(d).add_rational(&c));
        let map = &RatPoly::monomial(int(1), d as usize) + &RatPoly::constant(c.clone());
        prop_assert_eq!(x.apply_phi(d, &c), x.eval_poly(&map));
    }

    #[test]
    fn quadratic_roots((b, c) in (rational(30), rational(30))) {
        let f = &(&poly("z^2") + &RatPoly::monomial(b.clone(), 1)) + &RatPoly::constant(c.clone());
        match as_quadratic(&f) {
            Ok((root, conj)) => {
                let value = root.eval_poly(&f);
                prop_assert!(value.a() == &int(0) && value.b() == &int(0));
                prop_assert_eq!(root.trace(), -b.clone());
                prop_assert_eq!(root.norm(), c.clone());
                prop_assert_eq!(&conj, &root.conjugate());
                prop_assert!(root.b() > &int(0));
            }
            Err(Error::NotQuadraticIrrational) => {
                prop_assert!(!dynatomic::rational_roots(&f).unwrap().is_empty());
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn conjugation_is_a_field_automorphism(
        d in prop_oneof![Just(-7i64), Just(-1), Just(2), Just(33)],
        a in (rational(9), rational(9)),
        b in (rational(9), rational(9)),
        c in rational(9),
    ) {
        let x = QuadraticElement::new(BigInt::from(d), a.0, a.1).unwrap();
        let y = QuadraticElement::new(BigInt::from(d), b.0, b.1).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap().conjugate(), x.conjugate().mul(&y.conjugate()).unwrap());
        prop_assert_eq!(x.apply_phi(2, &c).conjugate(), x.conjugate().apply_phi(2, &c));
        let n = x.mul(&x.conjugate()).unwrap();
        prop_assert!(n.is_rational());
        prop_assert_eq!(n.a(), &x.norm());
    }
}
