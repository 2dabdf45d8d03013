//! Rational generating functions `N(q) / ∏(1 − q^b)` and their exact
//! coefficient streams.
//!
//! Every pole of such a function sits at a root of unity of order dividing
//! some part `b`, with multiplicity at most the number of parts, so past the
//! onset its coefficients form a quasi-polynomial of degree at most
//! `#parts − 1` and period dividing `lcm(parts)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::polynomial::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfError {
    /// The denominator needs at least one factor.
    EmptyParts,
    /// A part size of 0 would make the denominator vanish.
    ZeroPart,
    /// The numerator polynomial has a non-integer coefficient.
    NonIntegerNumerator,
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::EmptyParts => f.write_str("denominator parts must be non-empty"),
            GfError::ZeroPart => f.write_str("denominator parts must be positive integers"),
            GfError::NonIntegerNumerator => f.write_str("numerator must have integer coefficients"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    /// Low-to-high integer coefficients, trailing zeros trimmed.
    numerator: Vec<BigInt>,
    parts: Vec<u64>,
}

impl RationalGF {
    pub fn new(numerator: Vec<BigInt>, parts: Vec<u64>) -> Result<Self, GfError> {
        if parts.is_empty() {
            return Err(GfError::EmptyParts);
        }
        if parts.contains(&0) {
            return Err(GfError::ZeroPart);
        }
        let mut numerator = numerator;
        while numerator.last().is_some_and(Zero::is_zero) {
            numerator.pop();
        }
        Ok(RationalGF { numerator, parts })
    }

    /// `q^shift / ∏(1 − q^b)`.
    pub fn from_parts(parts: &[u64], shift: usize) -> Result<Self, GfError> {
        let mut numerator = vec![BigInt::zero(); shift + 1];
        numerator[shift] = BigInt::one();
        Self::new(numerator, parts.to_vec())
    }

    pub fn from_poly_numerator(numerator: &Poly, parts: Vec<u64>) -> Result<Self, GfError> {
        if !numerator.has_integer_coeffs() {
            return Err(GfError::NonIntegerNumerator);
        }
        let coeffs = numerator.coeffs().iter().map(|c| c.numer().clone()).collect();
        Self::new(coeffs, parts)
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn numerator_poly(&self) -> Poly {
        Poly::from_ints(self.numerator.iter().cloned())
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Expanded `∏(1 − q^b)`, low-to-high.
    pub fn den_coeffs(&self) -> Vec<BigInt> {
        let total: u64 = self.parts.iter().sum();
        let mut den = vec![BigInt::zero(); total as usize + 1];
        den[0] = BigInt::one();
        let mut deg = 0usize;
        for &b in &self.parts {
            let b = b as usize;
            // multiply in place by (1 - q^b), high to low
            for i in (b..=deg + b).rev() {
                let below = den[i - b].clone();
                den[i] -= below;
            }
            deg += b;
        }
        den
    }

    pub fn den_poly(&self) -> Poly {
        Poly::from_ints(self.den_coeffs())
    }

    /// Power-series coefficients `c_0 ..= c_upto`.
    ///
    /// Uses `c_n = N_n − Σ_{j≥1} d_j · c_{n−j}`; `d_0 = 1` keeps every step
    /// in the integers.
    pub fn coeffs(&self, upto: usize) -> Vec<BigInt> {
        let den = self.den_coeffs();
        let taps: Vec<(usize, BigInt)> = den
            .into_iter()
            .enumerate()
            .skip(1)
            .filter(|(_, d)| !d.is_zero())
            .collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(upto + 1);
        for n in 0..=upto {
            let mut c = self.numerator.get(n).cloned().unwrap_or_default();
            for (j, d) in &taps {
                if *j > n {
                    break;
                }
                c -= d * &out[n - j];
            }
            out.push(c);
        }
        out
    }

    /// Upper bound on the degree of the coefficient quasi-polynomial.
    pub fn degree_bound(&self) -> usize {
        self.parts.len() - 1
    }

    /// A period the coefficient quasi-polynomial is guaranteed to have.
    pub fn period_bound(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &b| acc.lcm(&b))
    }

    /// First index from which the coefficients follow a single
    /// quasi-polynomial: `max(0, deg N − deg D + 1)`.
    pub fn onset(&self) -> usize {
        let Some(deg_num) = self.numerator.len().checked_sub(1) else {
            return 0;
        };
        let deg_den: u64 = self.parts.iter().sum();
        (deg_num + 1).saturating_sub(deg_den as usize)
    }
}
