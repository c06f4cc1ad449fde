use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{oscillatory_kernel, QuadratureConfig};
use crate::error::{Error, Result};

/// Integral value with an error estimate and the number of subintervals used.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

// 21-point Kronrod rule with the embedded 10-point Gauss rule; error scaled
// the QUADPACK way.
fn gauss_kronrod_21<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let f_center = f(center);

    let mut kronrod = f_center * WGK[10];
    let mut gauss = 0.0;
    let mut res_abs = kronrod.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];

    for j in 0..10 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = kronrod * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

/// Globally adaptive Gauss-Kronrod quadrature of `f` over `[lo, hi]`.
///
/// The subinterval with the largest error estimate is bisected until the
/// summed estimate falls below `max(abs_tolerance, rel_tolerance * |value|)`.
/// Running out of subdivisions yields [`Error::SubdivisionLimit`] carrying the
/// best value found.
pub fn integrate_adaptive<F>(f: F, lo: f64, hi: f64, cfg: &QuadratureConfig) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    if !(lo <= hi && lo.is_finite() && hi.is_finite()) {
        return Err(Error::InvalidInterval(format!(
            "quadrature needs finite lo <= hi, got [{lo}, {hi}]"
        )));
    }
    if lo == hi {
        return Ok(Estimate {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 0,
        });
    }

    let (value, error) = gauss_kronrod_21(&f, lo, hi);
    let mut heap = BinaryHeap::new();
    heap.push(Segment { lo, hi, value, error });
    let mut total_value = value;
    let mut total_error = error;

    let tolerance = |v: f64| cfg.abs_tolerance.max(cfg.rel_tolerance * v.abs());
    let mut exhausted = false;

    while total_error > tolerance(total_value) {
        if heap.len() >= cfg.max_subdivisions {
            exhausted = true;
            break;
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            // cannot split further in floating point
            heap.push(worst);
            exhausted = true;
            break;
        }
        let (v1, e1) = gauss_kronrod_21(&f, worst.lo, mid);
        let (v2, e2) = gauss_kronrod_21(&f, mid, worst.hi);
        total_value += v1 + v2 - worst.value;
        total_error += e1 + e2 - worst.error;
        heap.push(Segment { lo: worst.lo, hi: mid, value: v1, error: e1 });
        heap.push(Segment { lo: mid, hi: worst.hi, value: v2, error: e2 });

        // the running error sum drifts; resum when it looks converged
        if total_error <= tolerance(total_value) {
            total_value = heap.iter().map(|s| s.value).sum();
            total_error = heap.iter().map(|s| s.error).sum();
        }
    }

    let estimate = Estimate {
        value: heap.iter().map(|s| s.value).sum(),
        error_estimate: heap.iter().map(|s| s.error).sum(),
        subdivisions: heap.len(),
    };
    if exhausted {
        Err(Error::SubdivisionLimit(estimate))
    } else {
        Ok(estimate)
    }
}

/// Energy of the ideal impulse response of bandwidth `c` over `[-radius, radius]`
/// with the analytic tail `int_{|t|>R} <= 4 / (pi R)` folded into the error.
///
/// The value converges to `c` as the radius grows.
pub fn kernel_energy(c: f64, radius: f64, cfg: &QuadratureConfig) -> Result<Estimate> {
    let tail = 4.0 / (PI * radius);
    let widen = |mut e: Estimate| {
        e.error_estimate += tail;
        e
    };
    match integrate_adaptive(|t| oscillatory_kernel(c, t), -radius, radius, cfg) {
        Ok(e) => Ok(widen(e)),
        Err(Error::SubdivisionLimit(e)) => Err(Error::SubdivisionLimit(widen(e))),
        Err(other) => Err(other),
    }
}
