use num_bigint::BigInt;
use proptest::prelude::*;
use qpcert_core::arith::floor_rational;
use qpcert_core::{Poly, QuasiPoly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..8).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn quasi(max_period: usize, max_len: usize) -> impl Strategy<Value = QuasiPoly> {
    (1..=max_period).prop_flat_map(move |period| {
        prop::collection::vec(
            prop::collection::vec(rational(), 0..=max_len).prop_map(Poly::new),
            period,
        )
        .prop_map(move |cs| QuasiPoly::new(period, cs).unwrap())
    })
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_homomorphism(a in quasi(4, 3), b in quasi(6, 3)) {
        let sum = &a + &b;
        let prod = &a * &b;
        prop_assert_eq!(sum.period() % a.period(), 0);
        for n in -24..=120 {
            prop_assert_eq!(sum.eval(n), a.eval(n) + b.eval(n));
            prop_assert_eq!(prod.eval(n), a.eval(n) * b.eval(n));
        }
    }

    #[test]
    fn floor_contract(q in quasi(3, 3), m in prop::sample::select(vec![2i64, 3, 4, 12])) {
        let f = q.floor_div(m).unwrap();
        for n in -50..=200 {
            let exact = q.eval(n) / int(m);
            let value = f.eval(n);
            prop_assert!(value.denom() == &BigInt::from(1));
            prop_assert!(value <= exact && exact < &value + int(1));
            prop_assert_eq!(value.numer(), &floor_rational(&exact));
        }
    }

    #[test]
    fn floor_preserves_degree(q in quasi(3, 4), m in 1i64..13) {
        let floored = q.floor_div(m).unwrap().degree();
        match q.degree() {
            Some(d) if d >= 1 => prop_assert_eq!(floored, Some(d)),
            // a constant below m floors to zero
            _ => prop_assert!(floored.is_none_or(|d| d == 0)),
        }
    }

    #[test]
    fn round_is_floor_of_shifted(q in quasi(2, 3), m in 1i64..13) {
        let r = q.round_div(m).unwrap();
        for n in -20..=60 {
            let exact = q.eval(n) / int(m);
            let expected = floor_rational(&(exact + Rational::new(1.into(), 2.into())));
            prop_assert_eq!(r.eval(n), Rational::from_integer(expected));
        }
    }

    #[test]
    fn canonicalization_preserves_behaviour(q in quasi(6, 2), k in 1usize..4) {
        let refined = q.refine(q.period() * k);
        let canon = refined.canonicalize();
        prop_assert_eq!(refined.period() % canon.period(), 0);
        prop_assert!(canon.period() <= q.period());
        for n in 0..(2 * refined.period() as i64) {
            prop_assert_eq!(refined.eval(n), canon.eval(n));
        }
        let twice = canon.canonicalize();
        prop_assert_eq!(twice.constituents(), canon.constituents());
        prop_assert_eq!(&refined, &q);
    }

    #[test]
    fn product_degree_bound(a in quasi(3, 3), b in quasi(3, 3)) {
        let prod = &a * &b;
        if let (Some(da), Some(db), Some(dp)) = (a.degree(), b.degree(), prod.degree()) {
            prop_assert!(dp <= da + db);
        }
    }
}

#[test]
fn additive_identity_after_canonicalization() {
    let a = QuasiPoly::var().floor_div(3).unwrap();
    let s = (&a + &QuasiPoly::zero()).canonicalize();
    assert_eq!(s.period(), 3);
    assert_eq!(s.constituents(), a.canonicalize().constituents());
}
