use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

/// Power series below this argument, continued fraction above.
const SERIES_LIMIT: f64 = 4.0;
const CF_EPS: f64 = 1e-17;
const CF_MAX_ITER: usize = 10_000;

/// Sine integral `Si(x) = int_0^x sin(u)/u du`.
///
/// Odd by construction: negative arguments are reflected before evaluation.
pub fn sine_integral(x: f64) -> f64 {
    if x < 0.0 {
        return -sine_integral(-x);
    }
    if x.is_infinite() {
        return FRAC_PI_2;
    }
    if x <= SERIES_LIMIT {
        series(x)
    } else {
        FRAC_PI_2 - complement_cf(x)
    }
}

/// `pi/2 - Si(x)` for `x >= 0`, accurate in absolute terms for large `x` where
/// the plain difference would lose digits.
pub fn sine_integral_complement(x: f64) -> f64 {
    if x < 0.0 {
        return std::f64::consts::PI - sine_integral_complement(-x);
    }
    if x.is_infinite() {
        return 0.0;
    }
    if x <= SERIES_LIMIT {
        FRAC_PI_2 - series(x)
    } else {
        complement_cf(x)
    }
}

// sum_{n>=0} (-1)^n x^(2n+1) / ((2n+1) (2n+1)!)
fn series(x: f64) -> f64 {
    let x2 = x * x;
    let mut power = x; // x^(2n+1) / (2n+1)!
    let mut sum = x;
    let mut n = 0.0;
    while n < 100.0 {
        n += 1.0;
        let k = 2.0 * n + 1.0;
        power *= -x2 / ((k - 1.0) * k);
        let term = power / k;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

// Lentz evaluation of the continued fraction for E1(i x); returns -Im part,
// which equals pi/2 - Si(x).
fn complement_cf(x: f64) -> f64 {
    let tiny = f64::MIN_POSITIVE / f64::EPSILON;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 2..CF_MAX_ITER {
        let a = -((i - 1) as f64).powi(2);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < CF_EPS {
            break;
        }
    }
    let rotated = Complex64::new(x.cos(), -x.sin()) * h;
    -rotated.im
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{integrate_adaptive, QuadratureConfig};
    use approx::assert_abs_diff_eq;

    // 40-digit reference values, rounded to f64.
    #[allow(clippy::excessive_precision)]
    const REFERENCE: &[(f64, f64)] = &[
        (0.5, 0.493_107_418_043_066_69),
        (1.0, 0.946_083_070_367_183_01),
        (2.0, 1.605_412_976_802_694_8),
        (3.9, 1.776_501_360_447_805_5),
        (4.0, 1.758_203_138_949_053_1),
        (4.1, 1.738_743_626_491_769_0),
        (5.0, 1.549_931_244_944_674_1),
        (10.0, 1.658_347_594_218_874_0),
        (16.0, 1.631_302_268_270_032_9),
        (20.0, 1.548_241_701_043_439_8),
        (50.0, 1.551_617_072_485_935_9),
        (100.0, 1.562_225_466_889_056_3),
        (1000.0, 1.570_233_121_968_771_2),
        (10000.0, 1.570_891_545_385_961_9),
    ];

    #[test]
    fn matches_reference_table() {
        for &(x, expected) in REFERENCE {
            assert_abs_diff_eq!(sine_integral(x), expected, epsilon = 1e-14);
            assert_abs_diff_eq!(
                sine_integral_complement(x),
                FRAC_PI_2 - expected,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn zero_and_oddness() {
        assert_eq!(sine_integral(0.0), 0.0);
        for &x in &[1e-8, 0.3, 3.99, 4.0, 4.01, 17.5, 123.4, 9999.0] {
            assert_eq!(sine_integral(-x), -sine_integral(x));
        }
    }

    #[test]
    fn approaches_half_pi() {
        assert!((sine_integral(1e4) - FRAC_PI_2).abs() < 1e-3);
        // pi/2 - Si(x) ~ cos(x)/x
        let x = 1e4;
        assert_abs_diff_eq!(sine_integral_complement(x), x.cos() / x, epsilon = 1e-8);
    }

    #[test]
    fn agrees_with_quadrature_of_sinc() {
        let cfg = QuadratureConfig {
            abs_tolerance: 1e-13,
            rel_tolerance: 1e-13,
            ..Default::default()
        };
        let sinc = |u: f64| if u == 0.0 { 1.0 } else { u.sin() / u };
        for &x in &[1.0, 3.0, 4.5, 12.0, 40.0] {
            let q = integrate_adaptive(sinc, 0.0, x, &cfg).unwrap();
            assert_abs_diff_eq!(sine_integral(x), q.value, epsilon = 1e-12);
        }
    }
}
