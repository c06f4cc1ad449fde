//! Digital ideal filters: Fourier coefficients, the causal and delay-`N`
//! distances, and the best approximant's impulse response.
//!
//! Run with `cargo run --example digital_delay`.

use std::f64::consts::PI;

use causalgap::digital::{
    best_causal_coefficients, causal_report_digital, delayed_report_digital, fourier_coefficient,
};
use causalgap::{BandpassInterval, DigitalDelay};

fn main() -> causalgap::Result<()> {
    let band = BandpassInterval::digital(PI / 2.0, 3.0 * PI / 2.0)?;
    for k in 0..4 {
        let c = fourier_coefficient(&band, k);
        println!("c_{k} = {:+.6} {:+.6}i  |c_{k}| = {:.6}", c.re, c.im, c.norm());
    }

    let r = causal_report_digital(&band)?;
    println!("causal: d = {:.10}, angle = {:.10} (pi/6 = {:.10})", r.distance, r.angle, PI / 6.0);

    println!("{:>4} {:>14} {:>14}", "N", "d(N)", "theta(N)");
    for n in [0, 1, 2, 3, 4, 10, 50, 200] {
        let r = delayed_report_digital(&band, DigitalDelay::new(n))?;
        println!("{n:>4} {:>14.10} {:>14.10}", r.distance, r.angle);
    }

    let h = best_causal_coefficients(&band, DigitalDelay::new(2), 6)?;
    println!("best delay-2 approximant, h[n] for n = -2..=6:");
    for n in h.indices() {
        let v = h.get(n);
        println!("  h[{n:>2}] = {:+.6} {:+.6}i", v.re, v.im);
    }
    Ok(())
}
