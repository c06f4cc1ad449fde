//! Distances and angles between ideal bandpass filters and the spaces of
//! causal and delay-limited filters, analog and digital.
//!
//! Every filter is identified with its impulse response `h`, and the operator
//! norm of `x -> x * h` equals `||h||_2`. The nearest causal (or delay-`T`)
//! filter is the truncation of `h` to `[0, inf)` (or `[-T, inf)`), so each
//! distance is the energy of what the truncation removes.
//!
//! ```
//! use causalgap::{analog, digital, BandpassInterval};
//!
//! let band = BandpassInterval::analog(0.0, 2.0)?;
//! let r = analog::causal_report(&band)?;
//! assert_eq!(r.distance, 1.0);
//!
//! let band = BandpassInterval::digital_centered(std::f64::consts::PI)?;
//! let r = digital::causal_report_digital(&band)?;
//! assert!((r.angle - std::f64::consts::FRAC_PI_6).abs() < 1e-15);
//! # Ok::<(), causalgap::Error>(())
//! ```

pub mod analog;
pub mod cli;
pub mod digital;
pub mod error;
pub mod kernel;
pub mod operators;
pub mod oracle;
pub mod report;

pub use analog::AnalogDelay;
pub use digital::DigitalDelay;
pub use error::{Error, Result};
pub use kernel::{BandpassInterval, Mode, QuadratureConfig, SeriesConfig};
pub use operators::{DigitalSequence, SampledSignal};
pub use report::{ApproximationReport, Method, Subspace};
