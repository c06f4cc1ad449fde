use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

/// Filter subspace a report measures against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subspace {
    Causal,
    AnalogDelay { seconds: f64 },
    DigitalDelay { samples: u64 },
    Memoryless,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Quadrature,
    SeriesSum,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Quadrature => "quadrature",
            Method::SeriesSum => "series_sum",
        }
    }
}

/// Distance and angle between a filter and a subspace of filters.
///
/// `angle = asin(distance / kernel_norm)`, in `[0, pi/2]`. A zero kernel has
/// distance 0 and, by convention, angle 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApproximationReport {
    pub kernel_norm: f64,
    pub distance: f64,
    pub angle: f64,
    pub subspace: Subspace,
    pub method: Method,
    pub error_estimate: f64,
    /// Distance from an independent evaluation route, when one was run.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cross_check: Option<f64>,
    /// Set when quadrature ran out of subdivisions; values are best effort.
    #[serde(default)]
    pub subdivision_limit: bool,
}

impl ApproximationReport {
    pub(crate) fn from_distance(
        kernel_norm: f64,
        distance: f64,
        subspace: Subspace,
        method: Method,
    ) -> Self {
        Self {
            kernel_norm,
            distance,
            angle: angle_from_ratio(distance, kernel_norm),
            subspace,
            method,
            error_estimate: 0.0,
            cross_check: None,
            subdivision_limit: false,
        }
    }

    pub fn angle_degrees(&self) -> f64 {
        self.angle.to_degrees()
    }

    /// `|distance - kernel_norm * sin(angle)|`.
    pub fn consistency_gap(&self) -> f64 {
        (self.distance - self.kernel_norm * self.angle.sin()).abs()
    }
}

pub(crate) fn angle_from_ratio(distance: f64, kernel_norm: f64) -> f64 {
    if kernel_norm <= 0.0 {
        return 0.0;
    }
    (distance / kernel_norm).clamp(0.0, 1.0).asin().min(FRAC_PI_2)
}
