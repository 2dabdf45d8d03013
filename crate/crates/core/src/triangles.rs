//! Integer-sided triangles counted by perimeter (Alcuin's sequence).
//!
//! Sorting the sides as `x ≥ y ≥ z`, every such triangle is
//! `(2a+b+t+1, a+b+t+1, a+t+1)` for a unique `a, b, t ≥ 0`, with perimeter
//! `4a + 2b + 3t + 3`. Summing `q^perimeter` over all `(a, b, t)` gives the
//! generating function `q³ / ((1 − q²)(1 − q³)(1 − q⁴))`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::closedform::{parse, Expr};
use crate::genfunc::RationalGF;

/// Side lengths sorted non-increasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl Triangle {
    pub fn new(x: u64, y: u64, z: u64) -> Result<Self, TriangleError> {
        let t = Triangle { x, y, z };
        if t.is_valid() {
            Ok(t)
        } else {
            Err(TriangleError::InvalidTriangle { x, y, z })
        }
    }

    /// `x ≥ y ≥ z ≥ 1` and `y + z > x`.
    pub fn is_valid(&self) -> bool {
        self.x >= self.y && self.y >= self.z && self.z >= 1 && self.y + self.z > self.x
    }

    pub fn perimeter(&self) -> u64 {
        self.x + self.y + self.z
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleParam {
    pub a: u64,
    pub b: u64,
    pub t: u64,
}

impl TriangleParam {
    pub fn perimeter(&self) -> u64 {
        4 * self.a + 2 * self.b + 3 * self.t + 3
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangleError {
    InvalidTriangle { x: u64, y: u64, z: u64 },
}

impl fmt::Display for TriangleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleError::InvalidTriangle { x, y, z } => write!(
                f,
                "({x},{y},{z}) is not a triangle with sides sorted non-increasing"
            ),
        }
    }
}

/// Largest `x` and the `y` range for each `x`, shared by the counter and
/// the lister. `y` runs over `⌈(n−x)/2⌉ ..= min(x, n−x−1)`.
fn side_ranges(n: u64) -> impl Iterator<Item = (u64, u64, u64)> {
    let x_lo = n.div_ceil(3).max(1);
    let x_hi = n.saturating_sub(1) / 2;
    (x_lo..=x_hi).filter_map(move |x| {
        let rest = n - x;
        let y_lo = rest.div_ceil(2);
        let y_hi = x.min(rest - 1);
        (y_lo <= y_hi).then_some((x, y_lo, y_hi))
    })
}

/// Number of triangles with integer sides and perimeter `n`.
pub fn count_bruteforce(n: u64) -> u64 {
    side_ranges(n).map(|(_, lo, hi)| hi - lo + 1).sum()
}

/// All triangles of perimeter `n`, in decreasing lexicographic `(x, y, z)`
/// order.
pub fn list_triangles(n: u64) -> Vec<Triangle> {
    let mut out: Vec<Triangle> = side_ranges(n)
        .flat_map(|(x, lo, hi)| (lo..=hi).map(move |y| Triangle { x, y, z: n - x - y }))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn param_to_triangle(p: TriangleParam) -> Triangle {
    let TriangleParam { a, b, t } = p;
    Triangle {
        x: 2 * a + b + t + 1,
        y: a + b + t + 1,
        z: a + t + 1,
    }
}

/// Inverse of [`param_to_triangle`]: `a = x−y`, `b = y−z`, `t = y+z−x−1`.
pub fn triangle_to_param(tri: Triangle) -> Result<TriangleParam, TriangleError> {
    if !tri.is_valid() {
        return Err(TriangleError::InvalidTriangle {
            x: tri.x,
            y: tri.y,
            z: tri.z,
        });
    }
    Ok(TriangleParam {
        a: tri.x - tri.y,
        b: tri.y - tri.z,
        t: tri.y + tri.z - tri.x - 1,
    })
}

/// `q³ / ((1 − q²)(1 − q³)(1 − q⁴))`.
pub fn triangle_gf() -> RationalGF {
    RationalGF::from_parts(&[2, 3, 4], 3).expect("non-empty positive parts")
}

pub const ANDREWS_FORMULA: &str = "round(n^2/12) - floor(n/4)*floor((n+2)/4)";

/// `round(n²/12) − ⌊n/4⌋·⌊(n+2)/4⌋`.
pub fn andrews_expr() -> Expr {
    parse(ANDREWS_FORMULA).expect("built-in formula parses")
}

/// Last index of the verbatim 37-value comparison.
pub const PAPER_CHECK_UPTO: usize = 36;

/// Coefficients and formula values for `n = 0..=upto`.
pub fn side_by_side(gf: &RationalGF, expr: &Expr, upto: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let coeffs = gf.coeffs(upto);
    let formula = (0..=upto as i64).map(|n| expr.eval_i64(n)).collect();
    (coeffs, formula)
}

/// The 37-value check: the triangle generating function and Andrews's
/// formula agree for `n = 0..=36`.
pub fn paper_check() -> bool {
    paper_check_with(&triangle_gf(), &andrews_expr())
}

pub fn paper_check_with(gf: &RationalGF, expr: &Expr) -> bool {
    let (lhs, rhs) = side_by_side(gf, expr, PAPER_CHECK_UPTO);
    lhs == rhs
}
