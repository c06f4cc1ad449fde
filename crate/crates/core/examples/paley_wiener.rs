//! Log-integrability evidence for three transfer functions.
//!
//! Run with `cargo run --example paley_wiener`.

use causalgap::analog::{paley_wiener_diagnostic, TransferFunctionSamples};
use causalgap::{BandpassInterval, QuadratureConfig};

fn main() -> causalgap::Result<()> {
    let cfg = QuadratureConfig::default();
    let band = BandpassInterval::analog(-1.0, 1.0)?;
    let cases = [
        ("ideal [-1, 1]", TransferFunctionSamples::ideal(&band, -5.0, 5.0, 2049)?),
        (
            "exp(-xi^2)",
            TransferFunctionSamples::from_real_fn(-10.0, 10.0, 4097, |x| (-x * x).exp())?,
        ),
        (
            "1/(1 + xi^2)",
            TransferFunctionSamples::from_real_fn(-50.0, 50.0, 4001, |x| 1.0 / (1.0 + x * x))?,
        ),
    ];
    for (name, h) in &cases {
        let r = paley_wiener_diagnostic(h, &cfg);
        println!("{name}: {:?}", r.verdict);
        for rung in &r.ladder {
            println!("  floor {:e}: {:.6}", rung.floor, rung.integral);
        }
        println!("  vanishing intervals: {:?}", r.vanishing_intervals);
    }
    Ok(())
}
