//! Quasi-polynomials: one polynomial constituent per residue class.
//!
//! A [`QuasiPoly`] of period `L` evaluates at an integer `n` by picking the
//! constituent for `n mod L` (mathematical modulus, so negative `n` works)
//! and evaluating it at `n` itself. Constituents are polynomials in `n`, not
//! in the quotient `(n − r)/L`, which makes mixed-period arithmetic a matter
//! of refining both operands to the lcm of their periods.
//!
//! Arithmetic does not canonicalize. [`QuasiPoly::canonicalize`] returns
//! the minimal-period representative, and `==` compares canonical forms.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::arith::{divisors, lcm_usize, residue};
use crate::polynomial::Poly;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuasiPolyError {
    /// Period 0 was requested.
    ZeroPeriod,
    /// The number of constituents differs from the period.
    ConstituentCount { period: usize, given: usize },
    /// Floor/round division by an integer below 1.
    NonPositiveModulus(i64),
    /// A refined period does not fit in `usize`.
    PeriodOverflow,
}

impl fmt::Display for QuasiPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuasiPolyError::ZeroPeriod => f.write_str("quasi-polynomial period must be at least 1"),
            QuasiPolyError::ConstituentCount { period, given } => {
                write!(f, "period {period} needs {period} constituents, got {given}")
            }
            QuasiPolyError::NonPositiveModulus(m) => {
                write!(f, "modulus must be a positive integer, got {m}")
            }
            QuasiPolyError::PeriodOverflow => f.write_str("refined period overflows"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct QuasiPoly {
    constituents: Vec<Poly>,
}

impl QuasiPoly {
    pub fn new(period: usize, constituents: Vec<Poly>) -> Result<Self, QuasiPolyError> {
        if period == 0 {
            return Err(QuasiPolyError::ZeroPeriod);
        }
        if constituents.len() != period {
            return Err(QuasiPolyError::ConstituentCount {
                period,
                given: constituents.len(),
            });
        }
        Ok(QuasiPoly { constituents })
    }

    /// Period 1 with the single constituent `p`.
    pub fn from_poly(p: Poly) -> Self {
        QuasiPoly {
            constituents: alloc::vec![p],
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_poly(Poly::from_ints([c.into()]))
    }

    /// The identity `n`.
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn period(&self) -> usize {
        self.constituents.len()
    }

    pub fn constituents(&self) -> &[Poly] {
        &self.constituents
    }

    /// Constituent governing `n ≡ r (mod period)`.
    pub fn constituent(&self, r: usize) -> &Poly {
        &self.constituents[r % self.period()]
    }

    /// Maximum constituent degree; `None` when every constituent is zero.
    pub fn degree(&self) -> Option<usize> {
        self.constituents.iter().filter_map(Poly::degree).max()
    }

    pub fn eval(&self, n: i64) -> Rational {
        self.constituents[residue(n, self.period())].eval_int(n)
    }

    pub fn eval_big(&self, n: &BigInt) -> Rational {
        let r = n.mod_floor(&BigInt::from(self.period()));
        let r = r.to_usize().expect("residue below period");
        self.constituents[r].eval(&Rational::from_integer(n.clone()))
    }

    /// Same function written with period `new_period`, a multiple of the
    /// current period.
    pub fn refine(&self, new_period: usize) -> QuasiPoly {
        assert!(
            new_period >= 1 && new_period % self.period() == 0,
            "refined period must be a multiple of the current one"
        );
        QuasiPoly {
            constituents: (0..new_period)
                .map(|r| self.constituent(r).clone())
                .collect(),
        }
    }

    fn zip_with(
        &self,
        other: &QuasiPoly,
        f: impl Fn(&Poly, &Poly) -> Poly,
    ) -> Result<QuasiPoly, QuasiPolyError> {
        let period =
            lcm_usize(self.period(), other.period()).ok_or(QuasiPolyError::PeriodOverflow)?;
        Ok(QuasiPoly {
            constituents: (0..period)
                .map(|r| f(self.constituent(r), other.constituent(r)))
                .collect(),
        })
    }

    pub fn checked_add(&self, other: &QuasiPoly) -> Result<QuasiPoly, QuasiPolyError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &QuasiPoly) -> Result<QuasiPoly, QuasiPolyError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn checked_mul(&self, other: &QuasiPoly) -> Result<QuasiPoly, QuasiPolyError> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Rational) -> QuasiPoly {
        QuasiPoly {
            constituents: self.constituents.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Result<QuasiPoly, QuasiPolyError> {
        (0..k).try_fold(QuasiPoly::constant(1), |acc, _| acc.checked_mul(self))
    }

    /// Exact `⌊Q(n) / m⌋` as a quasi-polynomial.
    ///
    /// Each constituent `p = u / c` (with `u` integral) is split over
    /// residues mod `lcm(L, c·m)`: on a residue `r'` the value `u(n) mod c·m`
    /// is the constant `u(r') mod c·m`, so the floor is the polynomial
    /// `(u(n) − (u(r') mod c·m)) / (c·m)`.
    pub fn floor_div(&self, m: i64) -> Result<QuasiPoly, QuasiPolyError> {
        if m < 1 {
            return Err(QuasiPolyError::NonPositiveModulus(m));
        }
        let m_big = BigInt::from(m);

        struct Split {
            numerator: Poly,
            modulus: BigInt,
        }
        let splits: Vec<Split> = self
            .constituents
            .iter()
            .map(|p| {
                let (ints, c) = p.integer_numerator();
                Split {
                    numerator: Poly::from_ints(ints),
                    modulus: c * &m_big,
                }
            })
            .collect();

        let mut period = self.period();
        for s in &splits {
            let modulus = s.modulus.to_usize().ok_or(QuasiPolyError::PeriodOverflow)?;
            period = lcm_usize(period, modulus).ok_or(QuasiPolyError::PeriodOverflow)?;
        }

        let constituents = (0..period)
            .map(|r| {
                let s = &splits[r % self.period()];
                let at_r = s.numerator.eval_int(r as i64);
                debug_assert!(at_r.denom().is_one());
                let offset = at_r.numer().mod_floor(&s.modulus);
                let shifted = &s.numerator - &Poly::from_ints([offset]);
                shifted.scale(&Rational::new(BigInt::one(), s.modulus.clone()))
            })
            .collect();
        Ok(QuasiPoly::new(period, constituents)?.canonicalize())
    }

    /// Nearest integer to `Q(n) / m`, ties rounded up:
    /// `⌊(2·Q(n) + m) / (2m)⌋`.
    pub fn round_div(&self, m: i64) -> Result<QuasiPoly, QuasiPolyError> {
        if m < 1 {
            return Err(QuasiPolyError::NonPositiveModulus(m));
        }
        let doubled = self.scale(&Rational::from_integer(BigInt::from(2)));
        let shifted = doubled.checked_add(&QuasiPoly::constant(m))?;
        let two_m = m.checked_mul(2).ok_or(QuasiPolyError::PeriodOverflow)?;
        shifted.floor_div(two_m)
    }

    /// Minimal-period representative with identical values at every integer.
    pub fn canonicalize(&self) -> QuasiPoly {
        let period = self.period();
        for d in divisors(period) {
            let fits = (d..period).all(|r| self.constituents[r] == self.constituents[r % d]);
            if fits {
                return QuasiPoly {
                    constituents: self.constituents[..d].to_vec(),
                };
            }
        }
        unreachable!("the full period always fits")
    }

    /// True when every value at an integer is an integer. Checked on
    /// `degree + 1` points per residue class, which determines each
    /// constituent.
    pub fn is_integer_valued(&self) -> bool {
        let points = self.degree().map_or(1, |d| d + 1);
        let period = self.period();
        (0..period * points).all(|n| self.eval(n as i64).denom().is_one())
    }
}

impl PartialEq for QuasiPoly {
    fn eq(&self, other: &Self) -> bool {
        let a = self.canonicalize();
        let b = other.canonicalize();
        a.constituents == b.constituents
    }
}

impl Eq for QuasiPoly {}

impl Add for &QuasiPoly {
    type Output = QuasiPoly;
    fn add(self, rhs: &QuasiPoly) -> QuasiPoly {
        self.checked_add(rhs).expect("period overflow")
    }
}

impl Sub for &QuasiPoly {
    type Output = QuasiPoly;
    fn sub(self, rhs: &QuasiPoly) -> QuasiPoly {
        self.checked_sub(rhs).expect("period overflow")
    }
}

impl Mul for &QuasiPoly {
    type Output = QuasiPoly;
    fn mul(self, rhs: &QuasiPoly) -> QuasiPoly {
        self.checked_mul(rhs).expect("period overflow")
    }
}

impl Neg for &QuasiPoly {
    type Output = QuasiPoly;
    fn neg(self) -> QuasiPoly {
        QuasiPoly {
            constituents: self.constituents.iter().map(|p| -p).collect(),
        }
    }
}
