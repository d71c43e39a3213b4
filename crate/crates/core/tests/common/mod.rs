#![allow(dead_code)]

use dynatomic::arith::parse_rational;
use dynatomic::dynatomic::MapSpec;
use dynatomic::{BigRational, RatPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn q(text: &str) -> BigRational {
    parse_rational(text).unwrap()
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn poly(text: &str) -> RatPoly {
    text.parse().unwrap()
}

pub fn spec(d: u32, c: &BigRational) -> MapSpec {
    MapSpec::new(d, c.clone()).unwrap()
}

pub fn rational(max: i64) -> impl Strategy<Value = BigRational> {
    (-max..=max, 1..=max).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

/// Parameters of naive height at most `h`.
pub fn parameter(h: i64) -> impl Strategy<Value = BigRational> {
    rational(h)
}

pub fn rat_poly(max_degree: usize, max: i64) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(rational(max), 0..=max_degree + 1).prop_map(RatPoly::from_coeffs)
}

pub fn nonzero_poly(max_degree: usize, max: i64) -> impl Strategy<Value = RatPoly> {
    rat_poly(max_degree, max).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn int_poly(min_degree: usize, max_degree: usize, max: i64) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-max..=max, min_degree + 1..=max_degree + 1)
        .prop_filter("full degree", move |v| {
            v.len() > min_degree && *v.last().unwrap() != 0
        })
        .prop_map(|v| RatPoly::from_ints(&v))
}
