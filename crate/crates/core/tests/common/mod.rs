//! Independent oracles shared by the integration tests. Nothing here calls
//! into the recurrence, the quasi-polynomial machinery, or the refined
//! triangle counter.
#![allow(dead_code)]

use num_bigint::BigInt;

/// Triangles of perimeter `n` by looping over the two largest sides.
pub fn naive_triangle_count(n: u64) -> u64 {
    let mut c = 0;
    for x in 1..=n {
        for y in 1..=x {
            if x + y >= n {
                break;
            }
            let z = n - x - y;
            if z <= y && y + z > x {
                c += 1;
            }
        }
    }
    c
}

/// Sorted-descending triangles of perimeter `n` by the plain triple loop.
pub fn naive_triangles(n: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for x in 1..=n {
        for y in 1..=x {
            for z in 1..=y {
                if x + y + z == n && y + z > x {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// Coefficients of `numerator · ∏ Σ_j q^{b·j}`, all series truncated at
/// degree `upto`.
pub fn naive_series(numerator: &[i64], parts: &[u64], upto: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::from(0); upto + 1];
    for (i, c) in numerator.iter().enumerate() {
        if i <= upto {
            acc[i] = BigInt::from(*c);
        }
    }
    for &b in parts {
        let geometric: Vec<BigInt> = (0..=upto)
            .map(|k| BigInt::from((k as u64 % b == 0) as i64))
            .collect();
        let mut next = vec![BigInt::from(0); upto + 1];
        for (i, a) in acc.iter().enumerate() {
            if *a == BigInt::from(0) {
                continue;
            }
            for (j, g) in geometric.iter().enumerate().take(upto + 1 - i) {
                next[i + j] += a * g;
            }
        }
        acc = next;
    }
    acc
}

/// `round(n^2/12) - floor(n/4)*floor((n+2)/4)` in plain i128 arithmetic,
/// valid for n >= 0.
pub fn andrews_i128(n: i128) -> i128 {
    (2 * n * n + 12) / 24 - (n / 4) * ((n + 2) / 4)
}
