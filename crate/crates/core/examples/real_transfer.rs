//! Any real transfer function sits at angle pi/4 from the causal filters;
//! memoryless kernels sit at pi/2.
//!
//! Run with `cargo run --example real_transfer`.

use causalgap::analog::{memoryless_angle_check, real_transfer_report, TransferFunctionSamples};
use causalgap::{QuadratureConfig, SampledSignal};
use num_complex::Complex64;

fn main() -> causalgap::Result<()> {
    let cfg = QuadratureConfig::default();
    let tri = TransferFunctionSamples::from_real_fn(-1.0, 1.0, 2001, |x| 1.0 - x.abs())?;
    let r = real_transfer_report(&tri, &cfg)?;
    println!(
        "triangle: ||H|| = {:.6}, d = {:.6}, angle = {:.6}",
        r.kernel_norm, r.distance, r.angle
    );

    let anticausal = SampledSignal::symmetric(3.0, 0.01, |t| {
        Complex64::new(if t < -0.005 { (t * 2.0).exp() } else { 0.0 }, 0.0)
    })?;
    let causal = SampledSignal::symmetric(3.0, 0.01, |t| {
        Complex64::new(if t >= 0.0 { (-t).exp() } else { 0.0 }, 0.0)
    })?;
    println!("anticausal kernel: angle {}", memoryless_angle_check(&anticausal)?);
    println!("causal kernel:     angle {}", memoryless_angle_check(&causal)?);
    Ok(())
}
