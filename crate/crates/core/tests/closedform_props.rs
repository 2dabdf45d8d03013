use num_bigint::BigInt;
use proptest::prelude::*;
use qpcert_core::{parse, Expr, Rational};

/// Conversion battery: nested floors, round-of-floor, products, powers.
pub const BATTERY: [&str; 14] = [
    "round(n^2/12) - floor(n/4)*floor((n+2)/4)",
    "floor(n/4)",
    "n^2",
    "floor(floor(n/2)/3)",
    "round(floor(n/3)/2)",
    "floor(n/2)*floor(n/3)",
    "round(n^3/7) - 2*n",
    "floor((n^2 + 3*n)/5) - round(n/6)",
    "-floor(-n/4)",
    "floor(floor(n/4)*n/3) + 1",
    "(floor(n/2) - round(n/5))^2",
    "round(round(n^2/3)/4)",
    "floor((7 - n)/3)*n",
    "floor(n/12)*round((n+5)/8) - floor(n^2/24)",
];

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..20).prop_map(Expr::constant),
        Just(Expr::Var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), 1u32..3).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
            (inner.clone(), 1u64..7).prop_map(|(e, m)| Expr::Floor(Box::new(e), m)),
            (inner, 1u64..7).prop_map(|(e, m)| Expr::Round(Box::new(e), m)),
        ]
    })
}

#[test]
fn battery_conversion_is_sound() {
    for src in BATTERY {
        let e = parse(src).unwrap();
        let qp = e.to_quasi_poly().unwrap();
        for n in 0..=5000i64 {
            assert_eq!(qp.eval(n), Rational::from_integer(e.eval_i64(n)), "{src} at {n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn printed_form_reparses(e in expr_strategy()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e);
    }

    #[test]
    fn random_expressions_convert_exactly(e in expr_strategy()) {
        let qp = e.to_quasi_poly().unwrap();
        prop_assert!(qp.is_integer_valued());
        for n in -30..=90i64 {
            prop_assert_eq!(qp.eval(n), Rational::from_integer(e.eval_i64(n)));
        }
    }

    #[test]
    fn evaluation_is_total(e in expr_strategy(), n in -10_000i64..10_000) {
        let _: BigInt = e.eval_i64(n);
    }
}

#[test]
fn flagship_degree_and_period() {
    let qp = qpcert_core::triangles::andrews_expr().to_quasi_poly().unwrap();
    assert_eq!(qp.degree(), Some(2));
    assert_eq!(qp.period(), 12);
}
