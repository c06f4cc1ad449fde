//! Brute-force reference computations.
//!
//! Nothing here goes through the sine integral, the adaptive quadrature or the
//! closed-form digital distances: the analog oracle is a left Riemann sum of
//! the impulse response written out in sines and cosines, and the digital one
//! sums `|c_k|^2` index by index.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::analog::{delayed_report, AnalogDelay};
use crate::digital::{delayed_report_digital, DigitalDelay};
use crate::error::{Error, Result};
use crate::kernel::{zeta2_tail, BandpassInterval, Mode, QuadratureConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleEstimate {
    /// Best estimate of the distance.
    pub value: f64,
    /// The raw finite sum, before any tail correction.
    pub partial: f64,
    /// Bound on the squared-distance mass outside the summed range.
    pub tail_bound: f64,
}

fn analog_kernel_literal(a: f64, b: f64, t: f64) -> f64 {
    let (sb, cb) = (b * t).sin_cos();
    let (sa, ca) = (a * t).sin_cos();
    let (re, im) = (sb - sa, cb - ca);
    (re * re + im * im) / (TAU * t * t)
}

/// `sqrt(dt * sum |h(t)|^2)` over the grid `t = -R + j dt < -T`.
///
/// The mass beyond `|t| > R` is at most `2/(pi R)`; it is reported, not added.
pub fn analog_distance_oracle(
    band: &BandpassInterval,
    delay: AnalogDelay,
    grid_radius: f64,
    dt: f64,
) -> Result<OracleEstimate> {
    if band.mode() != Mode::Analog {
        return Err(Error::InvalidInterval("expected an analog band".into()));
    }
    if !(dt > 0.0 && dt.is_finite() && grid_radius > 0.0 && grid_radius.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "need dt > 0 and R > 0, got dt = {dt}, R = {grid_radius}"
        )));
    }
    let (a, b) = (band.a(), band.b());
    let stop = -delay.seconds();
    let mut sum = 0.0;
    let mut j: u64 = 0;
    loop {
        let t = -grid_radius + j as f64 * dt;
        if t >= stop || t >= 0.0 {
            break;
        }
        sum += analog_kernel_literal(a, b, t);
        j += 1;
    }
    let value = (dt * sum).sqrt();
    Ok(OracleEstimate {
        value,
        partial: value,
        tail_bound: 2.0 / (PI * grid_radius),
    })
}

// |c_k|^2 from c_k = (1/2pi) int_a^b e^{-ikw} dw = (c/2pi) e^{-ik(a+b)/2} sinc(kc/2)
fn coefficient_power(c: f64, k: u64) -> f64 {
    let half = 0.5 * k as f64 * c;
    let sinc = if half == 0.0 { 1.0 } else { half.sin() / half };
    let m = c / TAU * sinc;
    m * m
}

/// `sqrt(sum_{k=N+1}^{K} |c_k|^2)`, each `c_k` taken from its defining integral.
///
/// `partial` is that finite sum. `value` adds the mean of the omitted
/// `(1 - cos kc)/(2 pi^2 k^2)` terms, `sum_{k>K} 1/(2 pi^2 k^2)`, which leaves
/// an error of order `1/K^2`. `tail_bound = 2/(K pi)/(2 pi)` bounds what the
/// partial sum omits.
pub fn digital_distance_oracle(
    band: &BandpassInterval,
    delay: DigitalDelay,
    max_index: u64,
) -> Result<OracleEstimate> {
    if band.mode() != Mode::Digital {
        return Err(Error::InvalidInterval("expected a digital band".into()));
    }
    if max_index <= delay.samples() {
        return Err(Error::InvalidConfig(format!(
            "K = {max_index} must exceed N = {}",
            delay.samples()
        )));
    }
    let c = band.bandwidth();
    let partial: f64 = (delay.samples() + 1..=max_index)
        .rev()
        .map(|k| coefficient_power(c, k))
        .sum();
    let mean_tail = zeta2_tail(max_index) / (2.0 * PI * PI);
    Ok(OracleEstimate {
        value: (partial + mean_tail).sqrt(),
        partial: partial.sqrt(),
        tail_bound: 2.0 / (max_index as f64 * PI) / TAU,
    })
}

/// Quantity evaluated along a [`limit_probe`] ladder.
///
/// Analog bands are `[0, c]`; digital bands are centred in `(0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "quantity", rename_all = "snake_case")]
pub enum LimitQuantity {
    /// `d(T)` against `T`.
    DistanceVsDelay { bandwidth: f64 },
    /// `theta(T)` against `T`.
    AngleVsDelay { bandwidth: f64 },
    /// `d(T)` against `c`.
    DistanceVsBandwidth { delay: f64 },
    /// `theta(T)` against `c`.
    AngleVsBandwidth { delay: f64 },
    /// Digital `theta(N)` against `N`.
    DigitalAngleVsDelay { bandwidth: f64 },
    /// Digital `theta(N)` against `c`.
    DigitalAngleVsBandwidth { delay: u64 },
    /// Digital distance against `c`.
    DigitalDistanceVsBandwidth { delay: u64 },
}

impl LimitQuantity {
    pub fn evaluate(&self, param: f64, cfg: &QuadratureConfig) -> Result<f64> {
        let analog = |c: f64, t: f64| {
            delayed_report(&BandpassInterval::analog(0.0, c)?, AnalogDelay::new(t)?, cfg)
        };
        let digital = |c: f64, n: u64| {
            delayed_report_digital(&BandpassInterval::digital_centered(c)?, DigitalDelay::new(n))
        };
        let samples = |p: f64| {
            if p < 0.0 || p.fract() != 0.0 {
                Err(Error::InvalidConfig(format!("delay {p} is not a sample count")))
            } else {
                Ok(p as u64)
            }
        };
        Ok(match *self {
            Self::DistanceVsDelay { bandwidth } => analog(bandwidth, param)?.distance,
            Self::AngleVsDelay { bandwidth } => analog(bandwidth, param)?.angle,
            Self::DistanceVsBandwidth { delay } => analog(param, delay)?.distance,
            Self::AngleVsBandwidth { delay } => analog(param, delay)?.angle,
            Self::DigitalAngleVsDelay { bandwidth } => digital(bandwidth, samples(param)?)?.angle,
            Self::DigitalAngleVsBandwidth { delay } => digital(param, delay)?.angle,
            Self::DigitalDistanceVsBandwidth { delay } => digital(param, delay)?.distance,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitRow {
    pub param: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitTable {
    pub quantity: LimitQuantity,
    pub rows: Vec<LimitRow>,
    /// `None` when the tail of the ladder neither converges geometrically nor
    /// has settled within the tolerance.
    pub fitted_limit: Option<f64>,
}

/// Default settling tolerance for [`fit_limit`].
pub const SETTLE_TOLERANCE: f64 = 1e-3;

/// Aitken extrapolation on the last three values.
///
/// For differences `d1, d2` of equal sign and ratio `r = d2/d1 < 1` the limit
/// is `v3 + d2 r/(1 - r)`. Otherwise, if both differences are within
/// `tolerance`, the sequence is taken as settled at `v3`; if not, no limit is
/// fitted.
pub fn fit_limit(values: &[f64], tolerance: f64) -> Option<f64> {
    let [v1, v2, v3] = values.get(values.len().checked_sub(3)?..)? else {
        return None;
    };
    let (d1, d2) = (v2 - v1, v3 - v2);
    let settled = d1.abs() <= tolerance && d2.abs() <= tolerance;
    if d2 == 0.0 {
        return Some(*v3);
    }
    if d1 * d2 > 0.0 {
        let r = d2 / d1;
        if r < 1.0 {
            return Some(v3 + d2 * r / (1.0 - r));
        }
    }
    settled.then_some(*v3)
}

/// Evaluates `quantity` along `ladder` and fits its limit.
pub fn limit_probe(
    quantity: LimitQuantity,
    ladder: &[f64],
    cfg: &QuadratureConfig,
) -> Result<LimitTable> {
    let increasing = ladder.windows(2).all(|w| w[0] < w[1]);
    let decreasing = ladder.windows(2).all(|w| w[0] > w[1]);
    if ladder.len() < 4 || !(increasing || decreasing) || ladder.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonMonotoneLadder);
    }
    let rows = ladder
        .iter()
        .map(|&param| {
            Ok(LimitRow {
                param,
                value: quantity.evaluate(param, cfg)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<f64> = rows.iter().map(|r| r.value).collect();
    Ok(LimitTable {
        quantity,
        fitted_limit: fit_limit(&values, SETTLE_TOLERANCE),
        rows,
    })
}
