//! Convolution filters on sampled signals and finitely supported sequences.
//!
//! A filter sending finite-energy inputs to bounded outputs is convolution
//! with a square-integrable kernel `h`, and its operator norm equals `||h||_2`.
//! This module applies such filters, certifies the norm identity with the
//! matched input `x[n] = conj(h[-n])`, and computes the orthogonal projection
//! onto delay-limited filters, which is plain support truncation.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::analog::AnalogDelay;
use crate::digital::DigitalDelay;
use crate::error::{Error, Result};

/// Samples `x(t0 + j dt)` of a complex signal on a uniform grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledSignal {
    t0: f64,
    dt: f64,
    values: Vec<Complex64>,
}

impl SampledSignal {
    pub fn new(t0: f64, dt: f64, values: Vec<Complex64>) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite() && t0.is_finite()) {
            return Err(Error::InvalidSignal(format!(
                "need finite t0 and dt > 0, got t0 = {t0}, dt = {dt}"
            )));
        }
        if values.is_empty() {
            return Err(Error::InvalidSignal("signal has no samples".into()));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidSignal("signal has non-finite samples".into()));
        }
        Ok(Self { t0, dt, values })
    }

    /// Samples `f` on `t = -radius + j dt` for `j = 0..=2 radius / dt`.
    ///
    /// The point count is rounded so that the grid is symmetric and, for an
    /// even number of steps, contains `t = 0` exactly.
    pub fn symmetric<F>(radius: f64, dt: f64, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        if !(radius > 0.0 && dt > 0.0) {
            return Err(Error::InvalidSignal(format!(
                "need radius > 0 and dt > 0, got {radius}, {dt}"
            )));
        }
        let half = (radius / dt).round() as i64;
        let values = (-half..=half).map(|j| f(j as f64 * dt)).collect();
        Self::new(-(half as f64) * dt, dt, values)
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn time(&self, j: usize) -> f64 {
        self.t0 + j as f64 * self.dt
    }

    /// Riemann-sum energy `dt * sum |x_j|^2`.
    pub fn energy(&self) -> f64 {
        self.dt * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    pub fn norm(&self) -> f64 {
        self.energy().sqrt()
    }

    /// `x(t) = conj(h(-t))` on the mirrored grid.
    pub fn conj_reflect(&self) -> Self {
        let end = self.time(self.len() - 1);
        Self {
            t0: -end,
            dt: self.dt,
            values: self.values.iter().rev().map(|v| v.conj()).collect(),
        }
    }

    // Samples with t < -delay, allowing for rounding in the grid times.
    fn before(&self, delay: f64) -> impl Iterator<Item = (usize, &Complex64)> + '_ {
        let cut = -delay - 1e-9 * self.dt;
        self.values
            .iter()
            .enumerate()
            .filter(move |(j, _)| self.time(*j) < cut)
    }
}

/// A finitely supported sequence `x[offset], ..., x[offset + len - 1]`;
/// every other index is zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DigitalSequence {
    offset: i64,
    values: Vec<Complex64>,
}

impl DigitalSequence {
    pub fn new(offset: i64, values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSignal("sequence has no samples".into()));
        }
        Ok(Self { offset, values })
    }

    pub fn from_real(offset: i64, values: &[f64]) -> Result<Self> {
        Self::new(offset, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn unit_impulse() -> Self {
        Self {
            offset: 0,
            values: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last_index(&self) -> i64 {
        self.offset + self.values.len() as i64 - 1
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<i64> {
        self.offset..=self.last_index()
    }

    pub fn get(&self, n: i64) -> Complex64 {
        let j = n - self.offset;
        if j < 0 || j >= self.values.len() as i64 {
            Complex64::new(0.0, 0.0)
        } else {
            self.values[j as usize]
        }
    }

    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.energy().sqrt()
    }

    pub fn shift(&self, m: i64) -> Self {
        Self {
            offset: self.offset + m,
            values: self.values.clone(),
        }
    }

    /// `x[n] = conj(h[-n])`.
    pub fn conj_reflect(&self) -> Self {
        Self {
            offset: -self.last_index(),
            values: self.values.iter().rev().map(|v| v.conj()).collect(),
        }
    }

    /// `sum_n self[n] conj(other[n])`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        let lo = self.offset.max(other.offset);
        let hi = self.last_index().min(other.last_index());
        (lo..=hi).map(|n| self.get(n) * other.get(n).conj()).sum()
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

fn convolve_values(x: &[Complex64], h: &[Complex64]) -> Vec<Complex64> {
    let mut y = vec![Complex64::new(0.0, 0.0); x.len() + h.len() - 1];
    for (i, xi) in x.iter().enumerate() {
        for (j, hj) in h.iter().enumerate() {
            y[i + j] += xi * hj;
        }
    }
    y
}

/// Exact finite convolution `y[n] = sum_k x[k] h[n - k]`.
pub fn convolve_digital(x: &DigitalSequence, h: &DigitalSequence) -> DigitalSequence {
    DigitalSequence {
        offset: x.offset + h.offset,
        values: convolve_values(&x.values, &h.values),
    }
}

/// Riemann-sum convolution `y(t) = sum_j x(s_j) h(t - s_j) dt` on the shared grid.
pub fn convolve_analog(x: &SampledSignal, h: &SampledSignal) -> Result<SampledSignal> {
    if (x.dt - h.dt).abs() > 1e-12 * x.dt.max(h.dt) {
        return Err(Error::GridMismatch {
            left: x.dt,
            right: h.dt,
        });
    }
    let values = convolve_values(&x.values, &h.values)
        .into_iter()
        .map(|v| v * x.dt)
        .collect();
    SampledSignal::new(x.t0 + h.t0, x.dt, values)
}

/// Bounds on `||L_h||` for `L_h: l^2 -> l^inf`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormEstimate {
    /// Best ratio `||x * h||_inf / ||x||_2` found, capped at `upper`.
    pub lower: f64,
    /// `||h||_2`, the Cauchy-Schwarz bound.
    pub upper: f64,
    /// Ratio attained by the matched input (trial 0).
    pub matched_ratio: f64,
    /// Ratios of the seeded random probes, in trial order.
    pub probe_ratios: Vec<f64>,
}

/// Estimates the operator norm of convolution with `h`.
///
/// Trial 0 is the matched input `conj(h[-n])`, which attains `||h||_2`; the
/// remaining `trials - 1` inputs are seeded complex Gaussian vectors on the
/// support of `h` widened by `len(h)` on each side, normalised to unit energy.
pub fn operator_norm_estimate(h: &DigitalSequence, trials: usize, seed: u64) -> Result<NormEstimate> {
    if trials == 0 {
        return Err(Error::InvalidConfig("need at least one trial".into()));
    }
    let upper = h.norm();
    if upper == 0.0 {
        return Err(Error::ZeroKernel);
    }

    let ratio = |x: &DigitalSequence| convolve_digital(x, h).sup_norm() / x.norm();
    let matched_ratio = ratio(&h.conj_reflect());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let margin = h.len() as i64;
    let width = h.len() + 2 * h.len();
    let mut probe_ratios = Vec::with_capacity(trials - 1);
    for _ in 1..trials {
        let mut values: Vec<Complex64> = (0..width)
            .map(|_| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                Complex64::new(re, im)
            })
            .collect();
        let scale = values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        values.iter_mut().for_each(|v| *v /= scale);
        let x = DigitalSequence::new(h.offset - margin, values)?;
        probe_ratios.push(ratio(&x));
    }

    let best = probe_ratios.iter().copied().fold(matched_ratio, f64::max);
    Ok(NormEstimate {
        lower: best.min(upper),
        upper,
        matched_ratio,
        probe_ratios,
    })
}

/// Projection onto filters realizable with delay `N`: zero every `h[n]`, `n < -N`.
pub fn truncate_to_delay(h: &DigitalSequence, delay: DigitalDelay) -> DigitalSequence {
    let cut = -(delay.samples() as i64);
    let values = h
        .values
        .iter()
        .enumerate()
        .map(|(j, v)| {
            if h.offset + (j as i64) < cut {
                Complex64::new(0.0, 0.0)
            } else {
                *v
            }
        })
        .collect();
    DigitalSequence {
        offset: h.offset,
        values,
    }
}

/// `sum_{n < -N} |h[n]|^2`, the squared distance from `L_h` to the delay-`N` filters.
pub fn delay_residual_energy(h: &DigitalSequence, delay: DigitalDelay) -> f64 {
    let cut = -(delay.samples() as i64);
    h.indices()
        .zip(&h.values)
        .filter(|(n, _)| *n < cut)
        .map(|(_, v)| v.norm_sqr())
        .sum()
}

/// Zeroes the samples at `t < -T`; the sample at `t = -T` is kept.
pub fn truncate_to_delay_analog(h: &SampledSignal, delay: AnalogDelay) -> SampledSignal {
    let mut out = h.clone();
    let zeroed: Vec<usize> = h.before(delay.seconds()).map(|(j, _)| j).collect();
    for j in zeroed {
        out.values[j] = Complex64::new(0.0, 0.0);
    }
    out
}

/// Riemann-sum energy `dt * sum_{t < -T} |h(t)|^2` discarded by the truncation.
pub fn delay_residual_energy_analog(h: &SampledSignal, delay: AnalogDelay) -> f64 {
    h.dt * h.before(delay.seconds()).map(|(_, v)| v.norm_sqr()).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn impulse_is_identity() {
        let h = DigitalSequence::new(-2, vec![c(1.0), Complex64::new(0.5, -2.0), c(3.0)]).unwrap();
        assert_eq!(convolve_digital(&DigitalSequence::unit_impulse(), &h), h);
    }

    #[test]
    fn hand_expansion() {
        let x = DigitalSequence::from_real(0, &[1.0, 1.0]).unwrap();
        let h = DigitalSequence::from_real(0, &[1.0, -1.0]).unwrap();
        let y = convolve_digital(&x, &h);
        assert_eq!(y.offset(), 0);
        assert_eq!(y.values(), &[c(1.0), c(0.0), c(-1.0)]);
    }

    #[test]
    fn matched_peak_is_energy() {
        let h = DigitalSequence::new(3, vec![Complex64::new(1.0, 2.0), c(-0.5), Complex64::new(0.0, 1.5)])
            .unwrap();
        let y = convolve_digital(&h.conj_reflect(), &h);
        assert_abs_diff_eq!(y.get(0).re, h.energy(), epsilon = 1e-14);
        assert_abs_diff_eq!(y.get(0).im, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn norm_estimate_small_kernels() {
        let e = operator_norm_estimate(&DigitalSequence::unit_impulse(), 5, 1).unwrap();
        assert_eq!(e.lower, 1.0);
        assert_eq!(e.upper, 1.0);
        let h = DigitalSequence::from_real(0, &[3.0, 4.0]).unwrap();
        let e = operator_norm_estimate(&h, 10, 2).unwrap();
        assert_abs_diff_eq!(e.upper, 5.0, epsilon = 1e-15);
        assert_abs_diff_eq!(e.lower, 5.0, epsilon = 1e-12);
        assert!(e.probe_ratios.iter().all(|&r| r <= 5.0 + 1e-12));
        assert_eq!(e.probe_ratios.len(), 9);
    }

    #[test]
    fn norm_estimate_errors() {
        let zero = DigitalSequence::from_real(0, &[0.0, 0.0]).unwrap();
        assert_eq!(operator_norm_estimate(&zero, 3, 0), Err(Error::ZeroKernel));
        assert!(operator_norm_estimate(&DigitalSequence::unit_impulse(), 0, 0).is_err());
    }

    #[test]
    fn seeded_probes_are_reproducible() {
        let h = DigitalSequence::from_real(-3, &[0.2, -1.0, 0.7, 0.1]).unwrap();
        let a = operator_norm_estimate(&h, 8, 42).unwrap();
        let b = operator_norm_estimate(&h, 8, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn truncation_digital() {
        let h = DigitalSequence::from_real(-3, &[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        let t = truncate_to_delay(&h, DigitalDelay::new(1));
        assert_eq!(t.values(), &[c(0.0), c(0.0), c(3.0), c(4.0), c(5.0)]);
        assert_eq!(delay_residual_energy(&h, DigitalDelay::new(1)), 5.0);
        // already causal
        let causal = DigitalSequence::from_real(0, &[1.0, -1.0]).unwrap();
        assert_eq!(truncate_to_delay(&causal, DigitalDelay::CAUSAL), causal);
        // nested subspaces
        assert!(
            delay_residual_energy(&h, DigitalDelay::new(0))
                >= delay_residual_energy(&h, DigitalDelay::new(2))
        );
    }

    #[test]
    fn truncation_analog_keeps_boundary() {
        let h = SampledSignal::symmetric(1.0, 0.25, |_| c(1.0)).unwrap();
        let t = truncate_to_delay_analog(&h, AnalogDelay::new(0.5).unwrap());
        let kept: Vec<f64> = t.values().iter().map(|v| v.re).collect();
        assert_eq!(kept, vec![0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0]);
        assert_abs_diff_eq!(
            delay_residual_energy_analog(&h, AnalogDelay::new(0.5).unwrap()),
            0.5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn analog_box_autoconvolution_is_triangle() {
        let dt = 1e-3;
        let n = (1.0 / dt) as usize;
        let b = SampledSignal::new(0.0, dt, vec![c(1.0); n]).unwrap();
        let y = convolve_analog(&b, &b).unwrap();
        let (peak_j, peak) = y
            .values()
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.re.total_cmp(&b.1.re))
            .unwrap();
        assert_abs_diff_eq!(peak.re, 1.0, epsilon = 2.0 * dt);
        assert_abs_diff_eq!(y.time(peak_j), 1.0, epsilon = 2.0 * dt);
        // triangle value at t = 0.5
        let j = (0.5 / dt).round() as usize;
        assert_abs_diff_eq!(y.values()[j].re, 0.5, epsilon = 2.0 * dt);
    }

    #[test]
    fn analog_grid_mismatch() {
        let a = SampledSignal::new(0.0, 0.1, vec![c(1.0)]).unwrap();
        let b = SampledSignal::new(0.0, 0.2, vec![c(1.0)]).unwrap();
        assert!(matches!(convolve_analog(&a, &b), Err(Error::GridMismatch { .. })));
    }

    #[test]
    fn analog_matched_peak() {
        let h = SampledSignal::symmetric(3.0, 0.01, |t| Complex64::new((-t * t).exp(), t.sin() * 0.3))
            .unwrap();
        let x = h.conj_reflect();
        let y = convolve_analog(&x, &h).unwrap();
        let j0 = ((0.0 - y.t0()) / y.dt()).round() as usize;
        assert_abs_diff_eq!(y.time(j0), 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(y.values()[j0].re, h.energy(), epsilon = 1e-12);
    }

    #[test]
    fn signal_validation() {
        assert!(SampledSignal::new(0.0, 0.0, vec![c(1.0)]).is_err());
        assert!(SampledSignal::new(0.0, 1.0, vec![]).is_err());
        assert!(DigitalSequence::new(0, vec![]).is_err());
    }
}
