//! Numeric primitives shared by the analog and digital modules.
//!
//! The frequency band type lives here together with the oscillatory kernel
//! `(1 - cos(c t)) / (pi t^2)`, which is `|h(t)|^2` for the ideal filter of
//! bandwidth `c`, the sine integral used to integrate that kernel in closed
//! form, a global adaptive Gauss-Kronrod integrator, and the tail sum of the
//! squared Fourier coefficients of an indicator function on the circle.

mod quadrature;
mod series;
mod si;

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use quadrature::{integrate_adaptive, kernel_energy, Estimate};
pub use series::{coefficient_tail_sum, zeta2_tail, TailSum};
pub use si::{sine_integral, sine_integral_complement};

/// Below this value of `|c t|` the kernel is evaluated from its Taylor expansion.
pub const TAYLOR_SWITCH: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Frequencies in rad/s on the real line.
    Analog,
    /// Frequencies in rad/sample inside `(0, 2 pi)`.
    Digital,
}

/// A frequency band `[a, b]` with `a < b`.
///
/// Digital bands must additionally satisfy `0 < a < b < 2 pi`; the degenerate
/// widths `0` and `2 pi` are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandpassInterval {
    a: f64,
    b: f64,
    mode: Mode,
}

impl BandpassInterval {
    pub fn analog(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, Mode::Analog)
    }

    pub fn digital(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, Mode::Digital)
    }

    pub fn new(a: f64, b: f64, mode: Mode) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidInterval(format!(
                "endpoints must be finite, got [{a}, {b}]"
            )));
        }
        if a >= b {
            return Err(Error::InvalidInterval(format!(
                "need a < b, got [{a}, {b}]"
            )));
        }
        if mode == Mode::Digital && (a <= 0.0 || b >= TAU) {
            return Err(Error::InvalidInterval(format!(
                "digital band needs 0 < a < b < 2pi, got [{a}, {b}]"
            )));
        }
        Ok(Self { a, b, mode })
    }

    /// Digital band of width `bandwidth` centred in `(0, 2 pi)`.
    pub fn digital_centered(bandwidth: f64) -> Result<Self> {
        if !(bandwidth > 0.0 && bandwidth < TAU) {
            return Err(Error::InvalidInterval(format!(
                "digital bandwidth must lie in (0, 2pi), got {bandwidth}"
            )));
        }
        let a = 0.5 * (TAU - bandwidth);
        Self::digital(a, a + bandwidth)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn bandwidth(&self) -> f64 {
        self.b - self.a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tolerance: f64,
    pub rel_tolerance: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tolerance: 1e-10,
            rel_tolerance: 1e-10,
            max_subdivisions: 1 << 16,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tolerance > 0.0 && self.rel_tolerance > 0.0) {
            return Err(Error::InvalidConfig(
                "quadrature tolerances must be strictly positive".into(),
            ));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::InvalidConfig(
                "max_subdivisions must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub tail_bound_target: f64,
    pub max_terms: u64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            tail_bound_target: 1e-12,
            max_terms: 10_000_000,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tail_bound_target.is_nan() || self.tail_bound_target <= 0.0 {
            return Err(Error::InvalidConfig(
                "tail_bound_target must be strictly positive".into(),
            ));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidConfig("max_terms must be at least 1".into()));
        }
        Ok(())
    }
}

/// `(1 - cos(c t)) / (pi t^2)`, with the removable singularity at `t = 0`
/// filled in by its limit `c^2 / (2 pi)`.
///
/// Evaluated through `2 sin^2(c t / 2)` to avoid cancellation, and through the
/// Taylor series `c^2/(2 pi) (1 - u^2/12 + u^4/360)` once `u = |c t| < 1e-4`.
/// The result is even in `t` bit for bit.
pub fn oscillatory_kernel(c: f64, t: f64) -> f64 {
    let t = t.abs();
    let u = c * t;
    if u < TAYLOR_SWITCH {
        let u2 = u * u;
        c * c / (2.0 * PI) * (1.0 - u2 / 12.0 + u2 * u2 / 360.0)
    } else {
        let s = (0.5 * u).sin();
        2.0 * s * s / (PI * t * t)
    }
}

/// `int_0^T (1 - cos(c t)) / (pi t^2) dt = (c Si(cT) - (1 - cos(cT)) / T) / pi`.
///
/// Closed-form counterpart of integrating [`oscillatory_kernel`] adaptively.
pub fn kernel_half_integral(c: f64, half_width: f64) -> f64 {
    if half_width <= 0.0 {
        return 0.0;
    }
    let u = c * half_width;
    if u < TAYLOR_SWITCH {
        // c^2 T / (2 pi) (1 - u^2/36)
        return c * c * half_width / (2.0 * PI) * (1.0 - u * u / 36.0);
    }
    let s = (0.5 * u).sin();
    (c * sine_integral(u) - 2.0 * s * s / half_width) / PI
}

/// `int_{|t| > T} (1 - cos(c t)) / (pi t^2) dt`, i.e. `c - 2 int_0^T`, evaluated
/// without the cancellation that the difference would suffer for large `c T`.
pub fn kernel_outer_integral(c: f64, half_width: f64) -> f64 {
    if half_width <= 0.0 {
        return c;
    }
    let u = c * half_width;
    if u < TAYLOR_SWITCH {
        return c - 2.0 * kernel_half_integral(c, half_width);
    }
    let s = (0.5 * u).sin();
    2.0 * (c * sine_integral_complement(u) + 2.0 * s * s / half_width) / PI
}
