mod common;

use common::{andrews_i128, naive_triangle_count};
use num_bigint::BigInt;
use proptest::prelude::*;
use qpcert_core::certify::{certify, fit_quasipoly, soundness_probe, Verdict};
use qpcert_core::triangles::{andrews_expr, triangle_gf};
use qpcert_core::{parse, QuasiPoly, Rational, RationalGF};

fn window_geometry_holds(gf: &RationalGF, src: &str) {
    let cert = certify(gf, &parse(src).unwrap(), None).unwrap();
    let p = cert.period as u64;
    let mut per_class = vec![0usize; cert.period];
    for n in cert.window.clone() {
        per_class[(n % p) as usize] += 1;
    }
    assert!(per_class.iter().all(|&c| c == cert.degree_bound + 1), "{src}");
}

#[test]
fn window_has_d_plus_one_points_per_class() {
    window_geometry_holds(&triangle_gf(), "round(n^2/12) - floor(n/4)*floor((n+2)/4)");
    window_geometry_holds(&RationalGF::from_parts(&[2, 5], 7).unwrap(), "floor(n^2/7)");
    window_geometry_holds(&RationalGF::from_parts(&[1, 1, 1], 0).unwrap(), "round(n/3)");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn refutation_witness_rechecks(
        parts in prop::collection::vec(1u64..=5, 1..=3),
        shift in 0usize..5,
        src in prop::sample::select(vec!["n", "floor(n/2)", "round(n^2/6)", "floor(n/3)*n", "1"]),
    ) {
        let gf = RationalGF::from_parts(&parts, shift).unwrap();
        let expr = parse(src).unwrap();
        let cert = certify(&gf, &expr, None).unwrap();
        match cert.verdict {
            Verdict::Refuted { n, lhs, rhs } => {
                let coeff = &gf.coeffs(n as usize)[n as usize];
                prop_assert_eq!(coeff, &lhs);
                prop_assert_eq!(&expr.eval_i64(n as i64), &rhs);
                prop_assert_ne!(lhs, rhs);
                prop_assert!(cert.window.contains(&n));
            }
            Verdict::Certified => {
                let coeffs = gf.coeffs(400);
                for n in cert.onset..=400 {
                    prop_assert_eq!(&coeffs[n as usize], &expr.eval_i64(n as i64));
                }
            }
        }
    }

    #[test]
    fn fit_reproduces_training_samples(
        seq in prop::collection::vec(-40i64..40, 30..60),
        d_max in 0usize..3,
        l_max in 1usize..5,
    ) {
        let samples: Vec<BigInt> = seq.iter().map(|&v| BigInt::from(v)).collect();
        let fit = fit_quasipoly(&samples, d_max, l_max, 3).unwrap();
        for (n, v) in samples.iter().enumerate().take(fit.samples_used) {
            prop_assert_eq!(fit.model.eval(n as i64), Rational::from_integer(v.clone()));
        }
        let matches = (fit.samples_used..samples.len())
            .filter(|&n| fit.model.eval(n as i64) == Rational::from_integer(samples[n].clone()))
            .count();
        prop_assert_eq!(fit.holdout_verified, matches == samples.len() - fit.samples_used);
    }
}

#[test]
fn flagship_fit_matches_andrews() {
    let samples: Vec<BigInt> = (0..50).map(|n| BigInt::from(naive_triangle_count(n))).collect();
    let fit = fit_quasipoly(&samples, 3, 12, 12).unwrap();
    assert_eq!((fit.period, fit.degree), (12, 2));
    assert!(fit.holdout_verified);
    let andrews: QuasiPoly = andrews_expr().to_quasi_poly().unwrap();
    assert_eq!(fit.model, andrews);
    for n in 0..50i64 {
        assert_eq!(fit.model.eval(n), Rational::from_integer(BigInt::from(andrews_i128(n as i128))));
    }
    assert_eq!(
        fit.model.eval(10_000),
        Rational::from_integer(BigInt::from(andrews_i128(10_000)))
    );
}

#[test]
fn probe_catches_halved_period() {
    let mut cert = certify(&triangle_gf(), &andrews_expr(), None).unwrap();
    assert!(soundness_probe(&cert, 200, 5000, 0));
    let half = cert.period / 2;
    let corrupted: Vec<_> = cert.model.constituents()[..half].to_vec();
    cert.model = QuasiPoly::new(half, corrupted).unwrap();
    cert.period = half;
    assert!(!soundness_probe(&cert, 200, 5000, 0));
}

#[test]
fn probe_catches_wrong_expression() {
    let mut cert = certify(&triangle_gf(), &andrews_expr(), None).unwrap();
    cert.expr = parse("round(n^2/12) - floor(n/4)*floor((n+2)/4) + floor(n/1000)").unwrap();
    assert!(!soundness_probe(&cert, 100, 100_000, 1));
}
