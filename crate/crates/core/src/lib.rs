//! Exact certification of identities between coefficient sequences of
//! rational generating functions `N(q) / ∏(1 − q^b)` and closed-form
//! quasi-polynomial expressions in `n`.
//!
//! Both sides of such an identity are quasi-polynomials of bounded degree
//! and period, so agreement on a finite window of `(D + 1) · P` consecutive
//! indices proves agreement everywhere past the onset. [`certify::certify`]
//! computes those bounds, runs the comparison, and returns a
//! [`certify::Certificate`].
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact:
//! integers are arbitrary precision and fractions are [`Rational`]s.
//!
//! The flagship instance lives in [`triangles`]: integer-sided triangles
//! counted by perimeter, their generating function
//! `q³ / ((1 − q²)(1 − q³)(1 − q⁴))`, and the closed form
//! `round(n²/12) − ⌊n/4⌋⌊(n+2)/4⌋`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod certify;
pub mod closedform;
pub mod genfunc;
pub mod polynomial;
pub mod quasipoly;
pub mod triangles;

pub use certify::{certify, fit_quasipoly, soundness_probe, Certificate, FitError, FitResult, Verdict};
pub use closedform::{parse, Expr, ParseError};
pub use genfunc::{GfError, RationalGF};
pub use polynomial::{interpolate, Poly, PolyError};
pub use quasipoly::{QuasiPoly, QuasiPolyError};

pub use num_bigint::BigInt;
/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
