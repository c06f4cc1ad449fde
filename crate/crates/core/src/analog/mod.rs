//! Ideal analog bandpass filters against causal and delay-`T` filters.
//!
//! The Fourier transform is the unitary one, `F(x)(w) = (2 pi)^{-1/2} int x(t)
//! e^{-iwt} dt`, so `||h||_2 = ||H||_2` and the ideal filter `chi_[a,b]` has
//! kernel energy `b - a`. The best delay-`T` approximant keeps `h` on
//! `[-T, inf)`; what is cut away has energy
//! `d(T)^2 = (b - a)/2 - int_0^T |h(t)|^2 dt`.

mod paley_wiener;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{
    integrate_adaptive, kernel_outer_integral, oscillatory_kernel, BandpassInterval, Estimate,
    Mode, QuadratureConfig,
};
use crate::operators::SampledSignal;
use crate::report::{angle_from_ratio, ApproximationReport, Method, Subspace};

pub use paley_wiener::{
    paley_wiener_diagnostic, LadderRung, PaleyWienerReport, Verdict, DIVERGENCE_SLOPE,
    FLOOR_LADDER, VANISHING_THRESHOLD,
};

/// Delay `T >= 0` in seconds; `T = 0` is the causal case.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct AnalogDelay(f64);

impl AnalogDelay {
    pub const CAUSAL: AnalogDelay = AnalogDelay(0.0);

    pub fn new(seconds: f64) -> Result<Self> {
        if !(seconds >= 0.0 && seconds.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "delay must be finite and >= 0, got {seconds}"
            )));
        }
        Ok(Self(seconds))
    }

    pub fn seconds(&self) -> f64 {
        self.0
    }
}

fn require_analog(band: &BandpassInterval) -> Result<()> {
    if band.mode() != Mode::Analog {
        return Err(Error::InvalidInterval("expected an analog band".into()));
    }
    Ok(())
}

/// `h = F^{-1}(chi_[a,b])`:
/// `h(t) = (sin(bt) - sin(at) - i(cos(bt) - cos(at))) / (t sqrt(2 pi))`,
/// with `h(0) = (b - a)/sqrt(2 pi)`.
pub fn impulse_response(band: &BandpassInterval, t: f64) -> Complex64 {
    // e^{imt} (2 sin(ct/2) / t) / sqrt(2 pi), m the band centre
    let c = band.bandwidth();
    let u = 0.5 * c * t;
    let sinc = if u.abs() < 1e-4 {
        1.0 - u * u / 6.0
    } else {
        u.sin() / u
    };
    let mid = 0.5 * (band.a() + band.b());
    Complex64::from_polar(c * sinc / TAU.sqrt(), mid * t)
}

/// The impulse response of an analog ideal filter as a value object.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalogImpulseResponse {
    band: BandpassInterval,
}

impl AnalogImpulseResponse {
    pub fn new(band: BandpassInterval) -> Result<Self> {
        require_analog(&band)?;
        Ok(Self { band })
    }

    pub fn band(&self) -> &BandpassInterval {
        &self.band
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        impulse_response(&self.band, t)
    }

    /// `|h(t)|^2`, computed from the oscillatory kernel.
    pub fn power(&self, t: f64) -> f64 {
        oscillatory_kernel(self.band.bandwidth(), t)
    }

    /// `||h||_2^2 = b - a`.
    pub fn energy(&self) -> f64 {
        self.band.bandwidth()
    }

    /// Samples on `[-radius, radius]` with spacing `dt`.
    pub fn sample(&self, radius: f64, dt: f64) -> Result<SampledSignal> {
        SampledSignal::symmetric(radius, dt, |t| self.eval(t))
    }
}

/// Distance and angle to the analog causal filters:
/// `d = sqrt((b - a)/2)` and `theta = pi/4` for every band.
pub fn causal_report(band: &BandpassInterval) -> Result<ApproximationReport> {
    require_analog(band)?;
    let c = band.bandwidth();
    Ok(ApproximationReport {
        angle: FRAC_PI_4,
        ..ApproximationReport::from_distance(
            c.sqrt(),
            (0.5 * c).sqrt(),
            Subspace::Causal,
            Method::ClosedForm,
        )
    })
}

// Error in sqrt(x) given an error bound on x.
fn sqrt_error(x: f64, err: f64) -> f64 {
    let root = x.max(0.0).sqrt();
    if root > 0.0 {
        (err / (2.0 * root)).min(err.sqrt())
    } else {
        err.sqrt()
    }
}

/// Distance and angle to filters realizable after a delay `T`.
///
/// `int_0^T |h|^2` is computed by adaptive quadrature and, independently,
/// through the sine integral; the quadrature distance is reported and the
/// other lands in `cross_check`. `error_estimate` covers both the quadrature
/// estimate and the disagreement between the two routes. A quadrature that
/// exhausts its subdivisions still yields a report, with `subdivision_limit`
/// set. At `T = 0` the causal report is returned as is.
pub fn delayed_report(
    band: &BandpassInterval,
    delay: AnalogDelay,
    cfg: &QuadratureConfig,
) -> Result<ApproximationReport> {
    require_analog(band)?;
    let c = band.bandwidth();
    let t = delay.seconds();
    if t == 0.0 {
        return Ok(ApproximationReport {
            method: Method::Quadrature,
            ..causal_report(band)?
        });
    }

    let (inner, limit_hit) =
        match integrate_adaptive(|s| oscillatory_kernel(c, s), 0.0, t, cfg) {
            Ok(e) => (e, false),
            Err(Error::SubdivisionLimit(e)) => (e, true),
            Err(other) => return Err(other),
        };
    let Estimate {
        value: half_energy,
        error_estimate: quad_err,
        ..
    } = inner;

    let d2_quad = (0.5 * c - half_energy).max(0.0);
    let d2_si = (0.5 * kernel_outer_integral(c, t)).max(0.0);
    let distance = d2_quad.sqrt();
    let cross = d2_si.sqrt();
    let error_estimate = sqrt_error(d2_quad, quad_err).max((distance - cross).abs());

    let subspace = Subspace::AnalogDelay { seconds: t };
    Ok(ApproximationReport {
        error_estimate,
        cross_check: Some(cross),
        subdivision_limit: limit_hit,
        ..ApproximationReport::from_distance(c.sqrt(), distance, subspace, Method::Quadrature)
    })
}

/// `d(T)` through the sine integral alone; no quadrature involved.
pub fn delayed_distance_closed_form(bandwidth: f64, delay: AnalogDelay) -> f64 {
    (0.5 * kernel_outer_integral(bandwidth, delay.seconds()))
        .max(0.0)
        .sqrt()
}

/// Samples of a transfer function `H(xi)` on a uniform frequency grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransferFunctionSamples {
    xi_min: f64,
    xi_max: f64,
    values: Vec<Complex64>,
}

impl TransferFunctionSamples {
    pub fn new(xi_min: f64, xi_max: f64, values: Vec<Complex64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidSignal("need at least two grid points".into()));
        }
        if !(xi_min < xi_max && xi_min.is_finite() && xi_max.is_finite()) {
            return Err(Error::InvalidSignal(format!(
                "grid must be strictly increasing, got [{xi_min}, {xi_max}]"
            )));
        }
        Ok(Self {
            xi_min,
            xi_max,
            values,
        })
    }

    pub fn from_fn<F>(xi_min: f64, xi_max: f64, n_points: usize, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        if n_points < 2 {
            return Err(Error::InvalidSignal("need at least two grid points".into()));
        }
        let step = (xi_max - xi_min) / (n_points - 1) as f64;
        let values = (0..n_points).map(|j| f(xi_min + j as f64 * step)).collect();
        Self::new(xi_min, xi_max, values)
    }

    pub fn from_real_fn<F>(xi_min: f64, xi_max: f64, n_points: usize, f: F) -> Result<Self>
    where
        F: Fn(f64) -> f64,
    {
        Self::from_fn(xi_min, xi_max, n_points, |xi| Complex64::new(f(xi), 0.0))
    }

    /// Samples of `chi_[a,b]`.
    pub fn ideal(band: &BandpassInterval, xi_min: f64, xi_max: f64, n_points: usize) -> Result<Self> {
        let (a, b) = (band.a(), band.b());
        Self::from_real_fn(xi_min, xi_max, n_points, |xi| {
            if (a..=b).contains(&xi) {
                1.0
            } else {
                0.0
            }
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn step(&self) -> f64 {
        (self.xi_max - self.xi_min) / (self.values.len() - 1) as f64
    }

    pub fn xi(&self, j: usize) -> f64 {
        self.xi_min + j as f64 * self.step()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Trapezoid rule for `int g(xi, H(xi)) dxi` over the grid.
    pub(crate) fn trapezoid<G>(&self, g: G) -> f64
    where
        G: Fn(f64, Complex64) -> f64,
    {
        let n = self.values.len();
        let inner: f64 = (1..n - 1).map(|j| g(self.xi(j), self.values[j])).sum();
        let ends = 0.5 * (g(self.xi_min, self.values[0]) + g(self.xi_max, self.values[n - 1]));
        self.step() * (inner + ends)
    }

    /// `||H||_2` by the trapezoid rule.
    pub fn l2_norm(&self) -> f64 {
        self.trapezoid(|_, v| v.norm_sqr()).sqrt()
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Report for a real-valued transfer function: `d = ||H||/sqrt(2)`, angle `pi/4`.
///
/// `|h|^2` is even whenever `H` is real, so the causal truncation always
/// discards exactly half the energy. Samples whose imaginary part exceeds
/// `1e-14 ||H||_inf` are rejected.
/// Norms use the trapezoid rule on the grid; `cfg` is accepted for interface
/// uniformity and not consulted.
pub fn real_transfer_report(
    h: &TransferFunctionSamples,
    _cfg: &QuadratureConfig,
) -> Result<ApproximationReport> {
    let sup = h.sup_norm();
    if let Some((index, v)) = h
        .values
        .iter()
        .enumerate()
        .find(|(_, v)| v.im.abs() > 1e-14 * sup)
    {
        return Err(Error::NonRealInput { index, imag: v.im });
    }
    let norm = h.l2_norm();
    if norm == 0.0 {
        return Ok(ApproximationReport::from_distance(
            0.0,
            0.0,
            Subspace::Causal,
            Method::ClosedForm,
        ));
    }
    Ok(ApproximationReport {
        angle: FRAC_PI_4,
        ..ApproximationReport::from_distance(
            norm,
            norm / 2f64.sqrt(),
            Subspace::Causal,
            Method::ClosedForm,
        )
    })
}

/// Angle between `L_h` and the causal filters, `asin(||h_-|| / ||h||)` with
/// `h_-` the part of `h` on `t < 0`.
///
/// Returns exactly `pi/2` when the energy on `t >= 0` is at most `1e-12` of
/// the total (a memoryless filter), and exactly `0` when the same holds for
/// `t < 0` (a causal one).
pub fn memoryless_angle_check(h: &SampledSignal) -> Result<f64> {
    let mut negative = 0.0;
    let mut rest = 0.0;
    let cut = -1e-9 * h.dt();
    for (j, v) in h.values().iter().enumerate() {
        if h.time(j) < cut {
            negative += v.norm_sqr();
        } else {
            rest += v.norm_sqr();
        }
    }
    let total = negative + rest;
    if total == 0.0 {
        return Err(Error::ZeroKernel);
    }
    if rest <= 1e-12 * total {
        return Ok(FRAC_PI_2);
    }
    if negative <= 1e-12 * total {
        return Ok(0.0);
    }
    Ok(angle_from_ratio(negative.sqrt(), total.sqrt()))
}

/// `lim_{c -> inf} d(T)` suggested by the large-argument behaviour of `Si`.
pub fn wide_band_distance_candidate(delay: AnalogDelay) -> f64 {
    1.0 / (PI * delay.seconds()).sqrt()
}
