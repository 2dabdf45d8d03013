//! Dense univariate polynomials with exact rational coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::is_zero;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Two interpolation points share the same abscissa.
    DuplicateAbscissa { x: Rational },
    /// Interpolation needs at least one point.
    NoPoints,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DuplicateAbscissa { x } => write!(f, "duplicate interpolation abscissa {x}"),
            PolyError::NoPoints => f.write_str("interpolation needs at least one point"),
        }
    }
}

/// Polynomial stored low-to-high: `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial is
/// the empty vector and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, Rational::one())
    }

    /// `c · x^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(x)))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn common_denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coefficients of `c · self`, where `c` is
    /// [`common_denominator`](Self::common_denominator).
    pub fn integer_numerator(&self) -> (Vec<BigInt>, BigInt) {
        let c = self.common_denominator();
        let ints = self
            .coeffs
            .iter()
            .map(|a| a.numer() * (&c / a.denom()))
            .collect();
        (ints, c)
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Lagrange interpolation over the rationals.
///
/// Returns the unique polynomial of degree `< points.len()` through every
/// point.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Poly, PolyError> {
    if points.is_empty() {
        return Err(PolyError::NoPoints);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(PolyError::DuplicateAbscissa { x: xi.clone() });
        }
    }

    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if is_zero(yi) {
            continue;
        }
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &Poly::new(vec![-xj, Rational::one()]);
            denom *= xi - xj;
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn cancellation_to_constant() {
        let p = Poly::from_ints([1, 1]);
        let q = Poly::from_ints([1, -1]);
        assert_eq!(&p + &q, Poly::from_ints([2]));
        assert_eq!(&p + &Poly::zero(), p);
    }

    #[test]
    fn subtraction_to_zero_is_normalized() {
        let p = Poly::from_ints([3, 0, 2]);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn squares_and_annihilator() {
        let p = Poly::from_ints([1, 1]);
        assert_eq!(&p * &p, Poly::from_ints([1, 2, 1]));
        assert!((&p * &Poly::zero()).is_zero());
    }

    #[test]
    fn triangle_denominator_expansion() {
        let f = |b: usize| &Poly::one() - &Poly::monomial(b, Rational::one());
        let d = &(&f(2) * &f(3)) * &f(4);
        assert_eq!(d, Poly::from_ints([1, 0, -1, -1, -1, 1, 1, 1, 0, -1]));
        // (1-4)(1-8)(1-16) = -315
        assert_eq!(d.eval_int(2), r(-315));
        assert_eq!(d.eval_int(1), r(0));
    }

    #[test]
    fn evaluation_basics() {
        assert_eq!(Poly::from_ints([-1, 0, 1]).eval_int(3), r(8));
        assert_eq!(Poly::zero().eval_int(17), r(0));
    }

    #[test]
    fn interpolation_examples() {
        let pts = [(r(0), r(0)), (r(1), r(1)), (r(2), r(4))];
        assert_eq!(interpolate(&pts).unwrap(), Poly::from_ints([0, 0, 1]));
        assert_eq!(interpolate(&[(r(0), r(5))]).unwrap(), Poly::from_ints([5]));
    }

    #[test]
    fn interpolation_errors() {
        assert_eq!(interpolate(&[]), Err(PolyError::NoPoints));
        let pts = [(r(1), r(2)), (r(1), r(3))];
        assert_eq!(
            interpolate(&pts),
            Err(PolyError::DuplicateAbscissa { x: r(1) })
        );
    }

    #[test]
    fn integer_numerator_clears_denominators() {
        let p = Poly::new(vec![Rational::new(1.into(), 6.into()), Rational::new(3.into(), 4.into())]);
        let (ints, c) = p.integer_numerator();
        assert_eq!(c, BigInt::from(12));
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(9)]);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let p = Poly::from_ints([1, -1]);
        assert_eq!(p.pow(0), Poly::one());
        assert_eq!(p.pow(3), Poly::from_ints([1, -3, 3, -1]));
    }
}
