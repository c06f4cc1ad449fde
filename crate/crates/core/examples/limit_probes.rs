//! Limits along parameter ladders, including the wide-band limit of `d(T)`.
//!
//! Run with `cargo run --example limit_probes`.

use std::f64::consts::PI;

use causalgap::analog::{wide_band_distance_candidate, AnalogDelay};
use causalgap::oracle::{limit_probe, LimitQuantity};
use causalgap::QuadratureConfig;

fn main() -> causalgap::Result<()> {
    let cfg = QuadratureConfig::default();
    let probes = [
        (LimitQuantity::AngleVsDelay { bandwidth: 2.0 }, vec![10.0, 1e2, 1e3, 1e4]),
        (LimitQuantity::AngleVsBandwidth { delay: 1.0 }, vec![1e-1, 1e-2, 1e-3, 1e-4]),
        (LimitQuantity::DigitalAngleVsDelay { bandwidth: PI }, vec![10.0, 1e2, 1e3, 1e4]),
        (LimitQuantity::DigitalAngleVsBandwidth { delay: 0 }, vec![1e-1, 1e-2, 1e-3, 1e-4]),
    ];
    for (q, ladder) in probes {
        let t = limit_probe(q, &ladder, &cfg)?;
        println!("{q:?}: fitted limit {:?}", t.fitted_limit);
    }

    println!("wide-band limit of d(T):");
    for t in [0.5, 1.0, 2.0] {
        let table = limit_probe(
            LimitQuantity::DistanceVsBandwidth { delay: t },
            &[10.0, 1e2, 1e3, 1e4, 1e5],
            &cfg,
        )?;
        println!(
            "  T = {t}: fitted {:?}, 1/sqrt(pi T) = {:.6}, bracket [0, {:.6}]",
            table.fitted_limit,
            wide_band_distance_candidate(AnalogDelay::new(t)?),
            2.0 * PI / t
        );
    }
    Ok(())
}
