//! Distance and angle from ideal analog filters to the causal filters.
//!
//! Run with `cargo run --example causal_distance`.

use causalgap::analog::causal_report;
use causalgap::BandpassInterval;

fn main() -> causalgap::Result<()> {
    for (a, b) in [(0.0, 2.0), (-1.0, 1.0), (5.0, 5.0 + 1e-8), (10.0, 400.0)] {
        let band = BandpassInterval::analog(a, b)?;
        let r = causal_report(&band)?;
        println!(
            "[{a:>5}, {b:>10}]  ||h|| = {:.6}  d = {:.6}  angle = {:.6} rad",
            r.kernel_norm, r.distance, r.angle
        );
    }
    println!("the angle is pi/4 = {:.6} for every band", std::f64::consts::FRAC_PI_4);
    Ok(())
}
