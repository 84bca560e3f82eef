//! Test-only oracles, independent of the chain walker.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Number of standard Young tableaux of a `rows x cols` rectangle by the hook
/// length formula, with the hook of every cell computed explicitly.
pub fn hook_length_rectangle(rows: usize, cols: usize) -> BigInt {
    let cells = rows * cols;
    let mut numerator = BigInt::one();
    for k in 2..=cells {
        numerator *= BigInt::from(k);
    }
    let mut hooks = BigInt::one();
    for i in 0..rows {
        for j in 0..cols {
            let arm = cols - j - 1;
            let leg = rows - i - 1;
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    assert!((&numerator % &hooks).is_zero());
    numerator / hooks
}

/// Standard Young tableaux of a `rows x cols` rectangle counted by brute force:
/// add cells one at a time, keeping row lengths a partition.
pub fn syt_by_filling(rows: usize, cols: usize) -> BigInt {
    fn go(shape: &mut Vec<usize>, cols: usize, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
        if shape.iter().all(|&l| l == cols) {
            return BigInt::one();
        }
        if let Some(v) = memo.get(shape) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..shape.len() {
            let can_grow = shape[i] < cols && (i == 0 || shape[i - 1] > shape[i]);
            if can_grow {
                shape[i] += 1;
                total += go(shape, cols, memo);
                shape[i] -= 1;
            }
        }
        memo.insert(shape.clone(), total.clone());
        total
    }
    go(&mut vec![0; rows], cols, &mut HashMap::new())
}

/// `g! prod_{i=0}^{r} i! / (g-d+r+i)!`, the closed form for unramified rigid series.
pub fn closed_form(g: i64, r: i64, d: i64) -> BigInt {
    let fact = |n: i64| -> BigInt { (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k)) };
    let mut num = fact(g);
    let mut den = BigInt::one();
    for i in 0..=r {
        num *= fact(i);
        den *= fact(g - d + r + i);
    }
    assert!((&num % &den).is_zero());
    num / den
}

/// Every `(g, r, d)` with `rho = 0`, `1 <= g <= g_max`, `r <= r_max`, `r <= d <= d_max`.
pub fn rigid_grid(g_max: i64, r_max: i64, d_max: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for g in 1..=g_max {
        for r in 0..=r_max {
            for d in r..=d_max {
                if g - (r + 1) * (g - d + r) == 0 {
                    out.push((g, r, d));
                }
            }
        }
    }
    out
}
