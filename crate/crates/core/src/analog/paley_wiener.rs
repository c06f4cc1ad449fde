//! Numerical evidence for or against `int |log|H(xi)|| / (1 + xi^2) dxi < inf`.

use serde::{Deserialize, Serialize};

use super::TransferFunctionSamples;
use crate::kernel::QuadratureConfig;

/// Floors `1e-3, 1e-4, ..., 1e-12` used to clamp `|H|` from below.
pub const FLOOR_LADDER: [f64; 10] = [1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10, 1e-11, 1e-12];

/// `|H|` below this counts as vanishing.
pub const VANISHING_THRESHOLD: f64 = 1e-14;

/// Growth of the clamped integral per decade of floor above which the ladder
/// is judged not to level off.
pub const DIVERGENCE_SLOPE: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ConsistentWithRealizable,
    DivergenceEvidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LadderRung {
    pub floor: f64,
    pub integral: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaleyWienerReport {
    /// Clamped integral at the smallest floor.
    pub integral_estimate: f64,
    pub ladder: Vec<LadderRung>,
    /// Integral growth per decade between the last two floors.
    pub final_slope: f64,
    /// Maximal grid intervals on which `|H| < 1e-14`.
    pub vanishing_intervals: Vec<(f64, f64)>,
    pub verdict: Verdict,
}

fn runs_below(h: &TransferFunctionSamples, threshold: f64) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut start = None;
    for (j, v) in h.values().iter().enumerate() {
        match (v.norm() < threshold, start) {
            (true, None) => start = Some(j),
            (false, Some(s)) => {
                runs.push((s, j - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        runs.push((s, h.len() - 1));
    }
    runs
}

/// Clamps `|H|` at each floor of [`FLOOR_LADDER`] and integrates
/// `|log max(|H|, floor)| / (1 + xi^2)` by the trapezoid rule.
///
/// The verdict is `DivergenceEvidence` when `H` is exactly zero (below the
/// smallest normal double) on two or more consecutive samples, or when the
/// last rung still grows by more than [`DIVERGENCE_SLOPE`] per decade and by
/// at least 90% of the first rung's growth. A convergent integral levels off
/// once the floor drops below `min |H|`. `cfg` is not consulted; the
/// diagnostic never fails.
pub fn paley_wiener_diagnostic(
    h: &TransferFunctionSamples,
    _cfg: &QuadratureConfig,
) -> PaleyWienerReport {
    let ladder: Vec<LadderRung> = FLOOR_LADDER
        .iter()
        .map(|&floor| LadderRung {
            floor,
            integral: h.trapezoid(|xi, v| v.norm().max(floor).ln().abs() / (1.0 + xi * xi)),
        })
        .collect();

    let slope = |i: usize| {
        let (lo, hi) = (ladder[i], ladder[i + 1]);
        (hi.integral - lo.integral) / (lo.floor / hi.floor).log10()
    };
    let first_slope = slope(0);
    let final_slope = slope(ladder.len() - 2);

    let vanishing_intervals = runs_below(h, VANISHING_THRESHOLD)
        .into_iter()
        .filter(|(s, e)| e > s)
        .map(|(s, e)| (h.xi(s), h.xi(e)))
        .collect();
    let identically_zero = runs_below(h, f64::MIN_POSITIVE)
        .iter()
        .any(|(s, e)| e > s);
    let growing = final_slope > DIVERGENCE_SLOPE && final_slope >= 0.9 * first_slope;

    PaleyWienerReport {
        integral_estimate: ladder[ladder.len() - 1].integral,
        ladder,
        final_slope,
        vanishing_intervals,
        verdict: if identically_zero || growing {
            Verdict::DivergenceEvidence
        } else {
            Verdict::ConsistentWithRealizable
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::BandpassInterval;
    use approx::assert_abs_diff_eq;

    #[test]
    fn ideal_filter_diverges() {
        let band = BandpassInterval::analog(-1.0, 1.0).unwrap();
        let h = TransferFunctionSamples::ideal(&band, -5.0, 5.0, 1025).unwrap();
        let r = paley_wiener_diagnostic(&h, &QuadratureConfig::default());
        assert_eq!(r.verdict, Verdict::DivergenceEvidence);
        assert_eq!(r.vanishing_intervals.len(), 2);
        assert!(r.final_slope > 1.0);
    }

    #[test]
    fn gaussian_levels_off() {
        let h = TransferFunctionSamples::from_real_fn(-10.0, 10.0, 4097, |x| (-x * x).exp()).unwrap();
        let r = paley_wiener_diagnostic(&h, &QuadratureConfig::default());
        assert_eq!(r.verdict, Verdict::ConsistentWithRealizable);
        // exp(-xi^2) drops below 1e-14 near both ends of the window
        assert_eq!(r.vanishing_intervals.len(), 2);
        assert!(r.vanishing_intervals[0].1 < -5.0);
    }

    #[test]
    fn constant_one_is_zero() {
        let h = TransferFunctionSamples::from_real_fn(-3.0, 3.0, 101, |_| 1.0).unwrap();
        let r = paley_wiener_diagnostic(&h, &QuadratureConfig::default());
        assert_abs_diff_eq!(r.integral_estimate, 0.0);
        assert_eq!(r.verdict, Verdict::ConsistentWithRealizable);
    }

    #[test]
    fn isolated_zero_is_not_an_interval() {
        let h = TransferFunctionSamples::from_real_fn(-1.0, 1.0, 201, |x| x.abs()).unwrap();
        let r = paley_wiener_diagnostic(&h, &QuadratureConfig::default());
        assert!(r.vanishing_intervals.is_empty());
        assert_eq!(r.verdict, Verdict::ConsistentWithRealizable);
    }
}
