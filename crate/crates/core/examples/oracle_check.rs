//! Closed forms against brute-force sums.
//!
//! Run with `cargo run --release --example oracle_check`.

use std::f64::consts::PI;

use causalgap::analog::{delayed_report, AnalogDelay};
use causalgap::digital::delayed_report_digital;
use causalgap::oracle::{analog_distance_oracle, digital_distance_oracle};
use causalgap::{BandpassInterval, DigitalDelay, QuadratureConfig};

fn main() -> causalgap::Result<()> {
    let cfg = QuadratureConfig::default();
    let band = BandpassInterval::analog(0.0, PI)?;
    for t in [0.0, 0.5, 2.0] {
        let delay = AnalogDelay::new(t)?;
        let d = delayed_report(&band, delay, &cfg)?.distance;
        let o = analog_distance_oracle(&band, delay, 2e3, 1e-3)?;
        println!("analog T = {t}: closed {d:.8}  riemann {:.8}  tail <= {:.1e}", o.value, o.tail_bound);
    }

    let band = BandpassInterval::digital_centered(PI)?;
    for n in [0, 1, 5, 50] {
        let d = delayed_report_digital(&band, DigitalDelay::new(n))?.distance;
        let o = digital_distance_oracle(&band, DigitalDelay::new(n), 1_000_000)?;
        println!(
            "digital N = {n}: closed {d:.12}  summed {:.12}  partial {:.12}",
            o.value, o.partial
        );
    }
    Ok(())
}
