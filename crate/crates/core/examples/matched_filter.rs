//! The operator norm of `x -> x * h` equals `||h||_2`, and the matched input
//! `conj(h[-n])` attains it.
//!
//! Run with `cargo run --example matched_filter`.

use causalgap::digital::best_causal_coefficients;
use causalgap::operators::{convolve_digital, operator_norm_estimate};
use causalgap::{BandpassInterval, DigitalDelay, DigitalSequence};

fn main() -> causalgap::Result<()> {
    let h = DigitalSequence::from_real(0, &[3.0, 4.0])?;
    let y = convolve_digital(&h.conj_reflect(), &h);
    println!("h = [3, 4]: matched output peak y[0] = {} = ||h||^2", y.get(0).re);

    let band = BandpassInterval::digital_centered(std::f64::consts::PI)?;
    let h = best_causal_coefficients(&band, DigitalDelay::CAUSAL, 64)?;
    let est = operator_norm_estimate(&h, 20, 42)?;
    let best_probe = est.probe_ratios.iter().copied().fold(0.0, f64::max);
    println!("causal truncation of the half-band filter, 65 taps:");
    println!("  ||h||_2           = {:.15}", est.upper);
    println!("  matched ratio     = {:.15}", est.matched_ratio);
    println!("  best random probe = {:.15}", best_probe);
    Ok(())
}
