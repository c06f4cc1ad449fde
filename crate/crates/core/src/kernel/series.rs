use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::SeriesConfig;
use crate::error::{Error, Result};

/// Result of [`coefficient_tail_sum`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailSum {
    pub value: f64,
    /// Number of terms summed explicitly.
    pub terms: u64,
    /// Last explicitly summed index.
    pub last_index: u64,
    /// Bound on `|value - exact|`.
    pub tail_bound: f64,
}

/// `sum_{k > n} 1/k^2`.
pub fn zeta2_tail(n: u64) -> f64 {
    const EM_START: u64 = 50;
    let mut head = 0.0;
    let mut m = n + 1;
    while m < EM_START {
        head += 1.0 / (m as f64 * m as f64);
        m += 1;
    }
    // Euler-Maclaurin: 1/M + 1/(2M^2) + 1/(6M^3) - 1/(30M^5) + 1/(42M^7)
    let mf = m as f64;
    let inv = 1.0 / mf;
    let inv2 = inv * inv;
    let em = inv * (1.0 + inv * (0.5 + inv * (1.0 / 6.0 + inv2 * (-1.0 / 30.0 + inv2 / 42.0))));
    head + em
}

// 2 pi |c_k|^2 for the indicator of a band of width c.
fn term(c: f64, k: u64) -> f64 {
    let kf = k as f64;
    let s = (0.5 * kf * c).sin();
    2.0 * s * s / (kf * kf * PI)
}

// Bound on |sum_{k>n} cos(k c) / (k^2 pi)|: the trivial comparison with
// sum 1/k^2, and Abel summation with partial cosine sums <= 1/|sin(c/2)|.
fn oscillating_remainder_bound(c: f64, n: u64) -> f64 {
    let plain = zeta2_tail(n) / PI;
    let half_sin = (0.5 * c).sin().abs();
    if half_sin == 0.0 {
        return plain;
    }
    let next = (n + 1) as f64;
    plain.min(1.0 / (PI * half_sin * next * next))
}

/// `sum_{k >= from_index} 2 pi |c_k|^2 = sum (1 - cos(k c)) / (k^2 pi)` for the
/// indicator of a band of width `c` in `(0, 2 pi)`.
///
/// Terms are summed explicitly up to an index `K`, then the non-oscillating
/// part of the remainder, `sum_{k>K} 1/(k^2 pi)`, is added from its
/// Euler-Maclaurin expansion. What is left is `-sum_{k>K} cos(k c)/(k^2 pi)`,
/// whose bound is reported as `tail_bound`. `K` is the smallest index that
/// drives that bound below `cfg.tail_bound_target`.
pub fn coefficient_tail_sum(c: f64, from_index: u64, cfg: &SeriesConfig) -> Result<TailSum> {
    cfg.validate()?;
    if !(c > 0.0 && c < TAU) {
        return Err(Error::InvalidInterval(format!(
            "bandwidth must lie in (0, 2pi), got {c}"
        )));
    }
    if from_index == 0 {
        return Err(Error::InvalidConfig("from_index must be at least 1".into()));
    }
    let target = cfg.tail_bound_target;

    // smallest K meeting the target under either bound
    let plain_k = (1.0 / (PI * target)).ceil();
    let half_sin = (0.5 * c).sin().abs();
    let abel_k = if half_sin > 0.0 {
        ((1.0 / (PI * half_sin * target)).sqrt().ceil() - 1.0).max(0.0)
    } else {
        f64::INFINITY
    };
    let mut last = plain_k.min(abel_k).max((from_index - 1) as f64);
    // guard against bound rounding at the boundary
    while oscillating_remainder_bound(c, last as u64) > target {
        last += 1.0;
    }
    let needed = last - (from_index - 1) as f64;
    if needed > cfg.max_terms as f64 {
        let reached = from_index - 1 + cfg.max_terms;
        return Err(Error::BudgetExceeded {
            terms: cfg.max_terms,
            tail_bound: oscillating_remainder_bound(c, reached),
        });
    }
    let last = last as u64;

    // smallest terms first
    let mut sum = 0.0;
    let mut k = last;
    while k >= from_index {
        sum += term(c, k);
        k -= 1;
    }
    sum += zeta2_tail(last) / PI;

    Ok(TailSum {
        value: sum,
        terms: last + 1 - from_index,
        last_index: last,
        tail_bound: oscillating_remainder_bound(c, last),
    })
}
