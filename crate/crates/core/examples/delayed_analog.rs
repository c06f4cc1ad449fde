//! How much a delay `T` buys: `d(T)` and `theta(T)` for the band `[0, 2]`,
//! by adaptive quadrature next to the sine-integral closed form.
//!
//! Run with `cargo run --example delayed_analog`.

use causalgap::analog::{delayed_report, AnalogDelay};
use causalgap::{BandpassInterval, QuadratureConfig};

fn main() -> causalgap::Result<()> {
    let band = BandpassInterval::analog(0.0, 2.0)?;
    let cfg = QuadratureConfig::default();
    println!("{:>8} {:>20} {:>20} {:>12}", "T", "d(T) quadrature", "d(T) via Si", "theta(T)");
    for t in [0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1000.0] {
        let r = delayed_report(&band, AnalogDelay::new(t)?, &cfg)?;
        let si = r.cross_check.unwrap_or(r.distance);
        println!("{t:>8} {:>20.15} {:>20.15} {:>12.8}", r.distance, si, r.angle);
    }
    Ok(())
}
