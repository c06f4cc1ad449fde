//! Ideal digital bandpass filters against causal and delay-`N` filters.
//!
//! With the DTFT `X(w) = sum x[n] e^{-iwn}` (no normalisation) Parseval reads
//! `||X||^2_{L^2(0,2pi)} = 2 pi ||x||^2`, so every sequence-space norm below is
//! the frequency-domain norm divided by `sqrt(2 pi)`. The Fourier coefficients
//! are those of `chi_[a,b](w) = sum_k c_k e^{ikw}`, and the ideal impulse
//! response is `h[n] = c_{-n}`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{BandpassInterval, Mode};
use crate::operators::DigitalSequence;
use crate::report::{ApproximationReport, Method, Subspace};

/// Slack below zero tolerated in the distance radicand before it is treated
/// as an error.
pub const RADICAND_SLACK: f64 = 1e-12;

/// Delay in samples; `N = 0` is the causal case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DigitalDelay(u64);

impl DigitalDelay {
    pub const CAUSAL: DigitalDelay = DigitalDelay(0);

    pub fn new(samples: u64) -> Self {
        Self(samples)
    }

    pub fn samples(&self) -> u64 {
        self.0
    }
}

fn require_digital(band: &BandpassInterval) -> Result<()> {
    if band.mode() != Mode::Digital {
        return Err(Error::InvalidInterval(
            "expected a digital band (0 < a < b < 2pi)".into(),
        ));
    }
    Ok(())
}

/// `c_k = (1/2pi) int_a^b e^{-ikw} dw`.
pub fn fourier_coefficient(band: &BandpassInterval, k: i64) -> Complex64 {
    let (a, b) = (band.a(), band.b());
    if k == 0 {
        return Complex64::new((b - a) / TAU, 0.0);
    }
    let kf = k as f64;
    let ea = Complex64::from_polar(1.0, -kf * a);
    let eb = Complex64::from_polar(1.0, -kf * b);
    (ea - eb) / Complex64::new(0.0, TAU * kf)
}

/// Coefficients `c_k` of `chi_[a,b]` for `k` in `[-K, K]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierCoefficientTable {
    band: BandpassInterval,
    window: u64,
    coefficients: Vec<Complex64>,
}

impl FourierCoefficientTable {
    pub fn new(band: BandpassInterval, window: u64) -> Result<Self> {
        require_digital(&band)?;
        let k = window as i64;
        let coefficients = (-k..=k).map(|i| fourier_coefficient(&band, i)).collect();
        Ok(Self {
            band,
            window,
            coefficients,
        })
    }

    pub fn band(&self) -> &BandpassInterval {
        &self.band
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    pub fn get(&self, k: i64) -> Option<Complex64> {
        let w = self.window as i64;
        (-w..=w)
            .contains(&k)
            .then(|| self.coefficients[(k + w) as usize])
    }

    /// `(k, c_k)` pairs in ascending `k`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let w = self.window as i64;
        (-w..).zip(self.coefficients.iter().copied())
    }

    /// `2 pi sum_{|k| <= K} |c_k|^2`, which increases to `b - a`.
    pub fn parseval_partial(&self) -> f64 {
        TAU * self.coefficients.iter().map(|c| c.norm_sqr()).sum::<f64>()
    }
}

/// Ideal impulse response `h[n] = c_{-n}` on `[-K, K]`.
pub fn ideal_impulse_response(band: &BandpassInterval, window: u64) -> Result<DigitalSequence> {
    require_digital(band)?;
    let k = window as i64;
    DigitalSequence::new(-k, (-k..=k).map(|n| fourier_coefficient(band, -n)).collect())
}

fn kernel_norm(bandwidth: f64) -> f64 {
    (bandwidth / TAU).sqrt()
}

// 1/2 - c/(4pi) - sum_{k=1}^N (1 - cos(kc)) / (k^2 pi c)
fn radicand(bandwidth: f64, delay: DigitalDelay) -> f64 {
    let partial: f64 = (1..=delay.samples())
        .rev()
        .map(|k| {
            let kf = k as f64;
            let s = (0.5 * kf * bandwidth).sin();
            2.0 * s * s / (kf * kf * PI * bandwidth)
        })
        .sum();
    0.5 - bandwidth / (4.0 * PI) - partial
}

/// Distance and angle to the causal digital filters:
/// `d = sqrt((b-a)/2pi) sqrt(1/2 - (b-a)/4pi)`, `theta = asin sqrt(1/2 - (b-a)/4pi)`.
pub fn causal_report_digital(band: &BandpassInterval) -> Result<ApproximationReport> {
    require_digital(band)?;
    let c = band.bandwidth();
    let ratio = (0.5 - c / (4.0 * PI)).sqrt();
    let norm = kernel_norm(c);
    Ok(ApproximationReport {
        angle: ratio.asin(),
        ..ApproximationReport::from_distance(norm, norm * ratio, Subspace::Causal, Method::ClosedForm)
    })
}

/// Distance and angle to filters realizable after a delay of `N` samples.
///
/// The radicand is clamped to zero when rounding pushes it below zero by less
/// than [`RADICAND_SLACK`]; anything more negative is reported as
/// [`Error::NegativeRadicand`].
pub fn delayed_report_digital(
    band: &BandpassInterval,
    delay: DigitalDelay,
) -> Result<ApproximationReport> {
    require_digital(band)?;
    let c = band.bandwidth();
    let mut r = radicand(c, delay);
    if r < 0.0 {
        if r < -RADICAND_SLACK {
            return Err(Error::NegativeRadicand(r));
        }
        r = 0.0;
    }
    let ratio = r.sqrt();
    let norm = kernel_norm(c);
    let subspace = if delay.samples() == 0 {
        Subspace::Causal
    } else {
        Subspace::DigitalDelay {
            samples: delay.samples(),
        }
    };
    Ok(ApproximationReport {
        angle: ratio.asin(),
        ..ApproximationReport::from_distance(norm, norm * ratio, subspace, Method::ClosedForm)
    })
}

/// Impulse response of the best approximant from the delay-`N` filters,
/// `h[n] = c_{-n}` for `-N <= n <= K`.
pub fn best_causal_coefficients(
    band: &BandpassInterval,
    delay: DigitalDelay,
    window: u64,
) -> Result<DigitalSequence> {
    require_digital(band)?;
    if window < delay.samples() {
        return Err(Error::InvalidConfig(format!(
            "window {window} must be at least the delay {}",
            delay.samples()
        )));
    }
    let lo = -(delay.samples() as i64);
    let hi = window as i64;
    DigitalSequence::new(lo, (lo..=hi).map(|n| fourier_coefficient(band, -n)).collect())
}

/// Angle to the causal filters of a real transfer function whose `c_0`
/// carries the fraction `C = |c_0| sqrt(2 pi) / ||H||`: `asin sqrt((1 - C^2)/2)`.
pub fn c0_ratio_angle(ratio: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&ratio) {
        return Err(Error::DomainError(ratio));
    }
    Ok(((1.0 - ratio * ratio) / 2.0).sqrt().asin())
}
