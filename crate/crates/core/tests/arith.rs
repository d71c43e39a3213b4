mod common;

use std::collections::HashSet;

use common::*;
use dynatomic::arith::{
    divisors, enumerate_rationals_by_height, format_rational, height_order, mobius, naive_height,
    parse_rational, square_decomposition,
};
use dynatomic::{BigRational, Error};
use num_bigint::BigInt;
use proptest::prelude::*;

fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[test]
fn mobius_and_divisors_match_trial_factorization() {
    for n in 1..=500u64 {
        let f = trial_factor(n);
        let expected = if f.iter().any(|&(_, e)| e > 1) {
            0
        } else if f.len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        assert_eq!(mobius(n).unwrap(), expected, "mu({n})");
        let brute: Vec<u64> = (1..=n).filter(|k| n % k == 0).collect();
        assert_eq!(divisors(n).unwrap(), brute);
    }
    assert_eq!(mobius(0), Err(Error::ZeroArgument("n")));
}

#[test]
fn height_enumeration_is_complete_and_ordered() {
    let h = 12u64;
    let all: Vec<BigRational> = enumerate_rationals_by_height(h).collect();
    let mut brute = HashSet::new();
    for b in 1..=h as i64 {
        for a in -(h as i64)..=h as i64 {
            brute.insert(BigRational::new(a.into(), b.into()));
        }
    }
    assert_eq!(all.len(), brute.len());
    assert_eq!(all.iter().cloned().collect::<HashSet<_>>(), brute);
    for w in all.windows(2) {
        assert_eq!(height_order(&w[0], &w[1]), std::cmp::Ordering::Less);
        assert!(naive_height(&w[0]) <= naive_height(&w[1]));
    }
    assert_eq!(all[..3], [int(-1), int(0), int(1)]);
}

#[test]
fn rational_text() {
    assert_eq!(format_rational(&q("6/4")), "3/2");
    assert_eq!(format_rational(&int(-5)), "-5");
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("x").is_err());
    assert_eq!(naive_height(&q("-71/48")), BigInt::from(71));
}

proptest! {
    #[test]
    fn rational_text_round_trip(x in rational(1_000_000)) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn square_decomposition_is_exact(n in (-1_000_000_000i64..1_000_000_000).prop_filter("nonzero", |n| *n != 0)) {
        let (s, k) = square_decomposition(&BigInt::from(n)).unwrap();
        prop_assert_eq!(&s * &s * &k, BigInt::from(n));
        let k: i64 = k.try_into().unwrap();
        prop_assert!(trial_factor(k.unsigned_abs()).iter().all(|&(_, e)| e == 1));
    }
}
