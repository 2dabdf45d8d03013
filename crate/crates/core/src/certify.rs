//! Finite-window certification of generating-function identities, and
//! quasi-polynomial ansatz fitting.
//!
//! If the coefficients of a [`RationalGF`] and a closed form are both
//! quasi-polynomials of degree at most `D` with period dividing `P` from
//! index `n₀` on, their difference is too. A polynomial of degree `≤ D`
//! vanishing at `D + 1` points is zero, so agreement on `D + 1` indices in
//! every residue class mod `P` (the window `[n₀, n₀ + (D+1)·P)`) proves
//! agreement at every `n ≥ n₀`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use num_bigint::BigInt;

use crate::closedform::Expr;
use crate::genfunc::RationalGF;
use crate::polynomial::{interpolate, PolyError};
use crate::quasipoly::{QuasiPoly, QuasiPolyError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    /// First index in the window where the two sides differ.
    Refuted { n: u64, lhs: BigInt, rhs: BigInt },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified)
    }
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub gf: RationalGF,
    pub expr: Expr,
    /// `expr` as a canonical quasi-polynomial.
    pub model: QuasiPoly,
    pub onset: u64,
    pub degree_bound: usize,
    pub period: usize,
    pub window: Range<u64>,
    pub verdict: Verdict,
}

impl Certificate {
    /// Number of indices compared, `(D + 1) · P`.
    pub fn checks(&self) -> u64 {
        self.window.end - self.window.start
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyError {
    /// The closed form could not be converted (its period overflowed).
    Conversion(QuasiPolyError),
    /// The window end does not fit in a `u64`.
    WindowOverflow,
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::Conversion(e) => write!(f, "closed form conversion failed: {e}"),
            CertifyError::WindowOverflow => f.write_str("certification window is too large"),
        }
    }
}

impl From<QuasiPolyError> for CertifyError {
    fn from(e: QuasiPolyError) -> Self {
        CertifyError::Conversion(e)
    }
}

/// Proves or refutes `[q^n] gf = expr(n)` for every `n ≥ n₀`.
///
/// `n₀` is `onset_override` when given, otherwise the generating
/// function's own onset. A refutation is an ordinary result.
pub fn certify(
    gf: &RationalGF,
    expr: &Expr,
    onset_override: Option<u64>,
) -> Result<Certificate, CertifyError> {
    let model = expr.to_quasi_poly()?;
    let degree_bound = gf.degree_bound().max(model.degree().unwrap_or(0));
    let gf_period =
        usize::try_from(gf.period_bound()).map_err(|_| CertifyError::WindowOverflow)?;
    let period = crate::arith::lcm_usize(gf_period, model.period())
        .ok_or(CertifyError::WindowOverflow)?;
    let onset = onset_override.unwrap_or(gf.onset() as u64);
    let len = (degree_bound as u64 + 1)
        .checked_mul(period as u64)
        .ok_or(CertifyError::WindowOverflow)?;
    let window = onset..onset.checked_add(len).ok_or(CertifyError::WindowOverflow)?;

    let coeffs = gf.coeffs((window.end - 1) as usize);
    let mut verdict = Verdict::Certified;
    for n in window.clone() {
        let lhs = &coeffs[n as usize];
        let n_i = n as i64;
        if model.eval(n_i) != Rational::from_integer(lhs.clone()) {
            verdict = Verdict::Refuted {
                n,
                lhs: lhs.clone(),
                rhs: expr.eval_i64(n_i),
            };
            break;
        }
    }

    Ok(Certificate {
        gf: gf.clone(),
        expr: expr.clone(),
        model,
        onset,
        degree_bound,
        period,
        window,
        verdict,
    })
}

/// Knuth's MMIX linear congruential generator:
/// `x ← 6364136223846793005·x + 1442695040888963407 (mod 2⁶⁴)`,
/// output taken from the high 32 bits.
#[derive(Debug, Clone)]
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next_u32(&mut self) -> u32 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 32) as u32
    }

    pub fn next_u64(&mut self) -> u64 {
        (u64::from(self.next_u32()) << 32) | u64::from(self.next_u32())
    }

    /// Uniform-ish draw from `lo..=hi` by reduction modulo the span.
    pub fn in_range(&mut self, lo: u64, hi: u64) -> u64 {
        let span = hi - lo + 1;
        if span == 0 {
            return self.next_u64();
        }
        lo + self.next_u64() % span
    }
}

/// Indices the probe will visit for `(onset, probes, n_max, seed)`.
pub fn probe_indices(onset: u64, probes: usize, n_max: u64, seed: u64) -> Vec<u64> {
    if probes == 0 || n_max < onset {
        return Vec::new();
    }
    let mut rng = Lcg::new(seed);
    (0..probes).map(|_| rng.in_range(onset, n_max)).collect()
}

/// Spot-checks a certified identity at pseudo-random indices in
/// `[onset, n_max]`: the generating-function coefficient, the direct value
/// of the expression, and the certificate's model must all agree.
pub fn soundness_probe(cert: &Certificate, probes: usize, n_max: u64, seed: u64) -> bool {
    if !cert.verdict.is_certified() {
        return false;
    }
    let indices = probe_indices(cert.onset, probes, n_max, seed);
    let Some(&top) = indices.iter().max() else {
        return true;
    };
    let coeffs = cert.gf.coeffs(top as usize);
    indices.iter().all(|&n| {
        let lhs = &coeffs[n as usize];
        let n_big = BigInt::from(n);
        let direct = cert.expr.eval(&n_big);
        lhs == &direct && cert.model.eval_big(&n_big) == Rational::from_integer(direct)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitResult {
    pub model: QuasiPoly,
    pub degree: usize,
    pub period: usize,
    /// Every sample past the training prefix matches the model.
    pub holdout_verified: bool,
    /// Length of the training prefix, `(degree + 1) · period`.
    pub samples_used: usize,
    /// Samples past the training prefix that the model reproduces.
    pub holdout_matches: usize,
    pub holdout_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FitError {
    InsufficientSamples { have: usize, need: usize },
    /// `l_max` was 0 or `holdout` was 0.
    BadBounds,
    Interpolation(PolyError),
}

impl fmt::Display for FitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitError::InsufficientSamples { have, need } => {
                write!(f, "insufficient samples: have {have}, need at least {need}")
            }
            FitError::BadBounds => f.write_str("period bound and holdout must be at least 1"),
            FitError::Interpolation(e) => write!(f, "interpolation failed: {e}"),
        }
    }
}

/// Smallest sample count `fit_quasipoly` accepts: every period up to
/// `l_max` must admit at least a constant fit plus the holdout.
pub fn min_fit_samples(l_max: usize, holdout: usize) -> usize {
    l_max + holdout
}

/// Guesses a quasi-polynomial for `samples[n]`, `n = 0, 1, ...`.
///
/// Candidates `(L, d)` are tried by increasing period, then increasing
/// degree. A candidate is trained on the first `(d+1)·L` samples (one
/// interpolation per residue class) and is skipped when that leaves fewer
/// than `holdout` samples to test. The first candidate reproducing every
/// remaining sample wins; if none does, the candidate with the most
/// matching samples is returned with `holdout_verified = false`.
pub fn fit_quasipoly(
    samples: &[BigInt],
    d_max: usize,
    l_max: usize,
    holdout: usize,
) -> Result<FitResult, FitError> {
    if l_max == 0 || holdout == 0 {
        return Err(FitError::BadBounds);
    }
    let need = min_fit_samples(l_max, holdout);
    if samples.len() < need {
        return Err(FitError::InsufficientSamples {
            have: samples.len(),
            need,
        });
    }

    let mut best: Option<(usize, FitResult)> = None;
    for period in 1..=l_max {
        for degree in 0..=d_max {
            let train = (degree + 1) * period;
            if train + holdout > samples.len() {
                break;
            }
            let model = fit_candidate(samples, degree, period)?;
            let matches = samples[train..]
                .iter()
                .enumerate()
                .filter(|(k, v)| model.eval((train + k) as i64) == Rational::from_integer((*v).clone()))
                .count();
            let holdout_len = samples.len() - train;
            let result = FitResult {
                model,
                degree,
                period,
                holdout_verified: matches == holdout_len,
                samples_used: train,
                holdout_matches: matches,
                holdout_len,
            };
            if result.holdout_verified {
                return Ok(result);
            }
            let score = train + matches;
            if best.as_ref().is_none_or(|(s, _)| score > *s) {
                best = Some((score, result));
            }
        }
    }
    Ok(best.expect("period 1, degree 0 is always feasible").1)
}

fn fit_candidate(samples: &[BigInt], degree: usize, period: usize) -> Result<QuasiPoly, FitError> {
    let constituents = (0..period)
        .map(|r| {
            let points: Vec<(Rational, Rational)> = (0..=degree)
                .map(|k| {
                    let n = r + k * period;
                    (
                        Rational::from_integer(BigInt::from(n)),
                        Rational::from_integer(samples[n].clone()),
                    )
                })
                .collect();
            interpolate(&points).map_err(FitError::Interpolation)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QuasiPoly::new(period, constituents).expect("one constituent per residue"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::parse;
    use crate::polynomial::Poly;
    use alloc::vec;

    fn ints(v: impl IntoIterator<Item = i64>) -> Vec<BigInt> {
        v.into_iter().map(BigInt::from).collect()
    }

    fn triangle_gf() -> RationalGF {
        RationalGF::from_parts(&[2, 3, 4], 3).unwrap()
    }

    #[test]
    fn andrews_certifies() {
        let e = parse("round(n^2/12) - floor(n/4)*floor((n+2)/4)").unwrap();
        let cert = certify(&triangle_gf(), &e, None).unwrap();
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.degree_bound, 2);
        assert_eq!(cert.period, 12);
        assert_eq!(cert.onset, 0);
        assert_eq!(cert.window, 0..36);
        assert_eq!(cert.checks(), 36);
    }

    #[test]
    fn floor_quarter_is_refuted_at_three() {
        let e = parse("floor(n/4)").unwrap();
        let cert = certify(&triangle_gf(), &e, None).unwrap();
        assert_eq!(
            cert.verdict,
            Verdict::Refuted {
                n: 3,
                lhs: BigInt::from(1),
                rhs: BigInt::from(0)
            }
        );
    }

    #[test]
    fn geometric_series_needs_one_check() {
        let gf = RationalGF::from_parts(&[1], 0).unwrap();
        let cert = certify(&gf, &parse("1").unwrap(), None).unwrap();
        assert!(cert.verdict.is_certified());
        assert_eq!((cert.degree_bound, cert.period, cert.checks()), (0, 1, 1));
    }

    #[test]
    fn onset_override_moves_window() {
        // q^5/(1-q^2) is 0 below 5; from 4 on it equals n mod 2
        let gf = RationalGF::from_parts(&[2], 5).unwrap();
        let e = parse("n - 2*floor(n/2)").unwrap();
        let cert = certify(&gf, &e, None).unwrap();
        assert_eq!(cert.onset, 4);
        assert!(cert.verdict.is_certified());
        let cert = certify(&gf, &e, Some(0)).unwrap();
        assert_eq!(
            cert.verdict,
            Verdict::Refuted { n: 1, lhs: BigInt::from(0), rhs: BigInt::from(1) }
        );
    }

    #[test]
    fn lcg_is_deterministic() {
        let mut a = Lcg::new(0);
        assert_eq!(a.next_u32(), (1442695040888963407u64 >> 32) as u32);
        assert_eq!(probe_indices(0, 5, 100, 7), probe_indices(0, 5, 100, 7));
        assert!(probe_indices(10, 50, 20, 1).iter().all(|&n| (10..=20).contains(&n)));
        assert!(probe_indices(10, 5, 9, 1).is_empty());
    }

    #[test]
    fn zero_probes_pass_vacuously() {
        let e = parse("round(n^2/12) - floor(n/4)*floor((n+2)/4)").unwrap();
        let cert = certify(&triangle_gf(), &e, None).unwrap();
        assert!(soundness_probe(&cert, 0, 1000, 0));
        assert!(soundness_probe(&cert, 50, 2000, 3));
    }

    #[test]
    fn refuted_certificates_never_probe_true() {
        let cert = certify(&triangle_gf(), &parse("floor(n/4)").unwrap(), None).unwrap();
        assert!(!soundness_probe(&cert, 0, 10, 0));
    }

    #[test]
    fn fit_constant() {
        let fit = fit_quasipoly(&ints([5; 20]), 2, 4, 4).unwrap();
        assert_eq!(fit.period, 1);
        assert_eq!(fit.degree, 0);
        assert!(fit.holdout_verified);
        assert_eq!(fit.model.constituent(0), &Poly::from_ints([5]));
    }

    #[test]
    fn fit_half_floor() {
        let fit = fit_quasipoly(&ints((0..20).map(|n| n / 2)), 2, 4, 4).unwrap();
        assert_eq!((fit.period, fit.degree), (2, 1));
        assert!(fit.holdout_verified);
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(fit.model.constituent(0), &Poly::new(vec![Rational::from_integer(0.into()), half.clone()]));
        assert_eq!(fit.model.constituent(1), &Poly::new(vec![-half.clone(), half]));
    }

    #[test]
    fn fit_rejects_short_input() {
        assert_eq!(
            fit_quasipoly(&ints([1, 2, 3, 4, 5]), 2, 4, 2).unwrap_err(),
            FitError::InsufficientSamples { have: 5, need: 6 }
        );
        assert_eq!(fit_quasipoly(&ints([1]), 0, 0, 1).unwrap_err(), FitError::BadBounds);
    }

    #[test]
    fn fit_reports_best_failure() {
        // 2^n is no quasi-polynomial
        let samples = ints((0..30).map(|n| 1i64 << n));
        let fit = fit_quasipoly(&samples, 2, 3, 5).unwrap();
        assert!(!fit.holdout_verified);
        assert!(fit.holdout_matches < fit.holdout_len);
        for n in 0..fit.samples_used {
            assert_eq!(fit.model.eval(n as i64), Rational::from_integer(samples[n].clone()));
        }
    }
}
