//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::f64::consts::{FRAC_PI_4, FRAC_PI_6, PI, TAU};
use std::time::{Duration, Instant};

use causalgap::analog::{
    causal_report, delayed_report, paley_wiener_diagnostic, wide_band_distance_candidate,
    AnalogDelay, TransferFunctionSamples, Verdict,
};
use causalgap::digital::{causal_report_digital, delayed_report_digital, DigitalDelay};
use causalgap::kernel::{
    integrate_adaptive, kernel_half_integral, oscillatory_kernel, BandpassInterval,
    QuadratureConfig,
};
use causalgap::operators::{operator_norm_estimate, DigitalSequence};
use causalgap::oracle::{
    analog_distance_oracle, digital_distance_oracle, limit_probe, LimitQuantity,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn lib<T>(r: causalgap::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn analog_causal_constants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut angle_err, mut dist_err) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let x: f64 = rng.random_range(-50.0..50.0);
        let y: f64 = rng.random_range(-50.0..50.0);
        let band = lib(BandpassInterval::analog(x.min(y), x.max(y)))?;
        let r = lib(causal_report(&band))?;
        angle_err = angle_err.max((r.angle - FRAC_PI_4).abs());
        dist_err = dist_err.max((r.distance - ((band.b() - band.a()) / 2.0).sqrt()).abs());
    }
    check(
        angle_err <= 1e-15 && dist_err <= 1e-15,
        format!("200 intervals, angle err {angle_err:.1e}, distance err {dist_err:.1e}"),
    )
}

fn digital_closed_forms() -> Outcome {
    let band = lib(BandpassInterval::digital(PI / 2.0, 3.0 * PI / 2.0))?;
    let r = lib(causal_report_digital(&band))?;
    let d_err = (r.distance - 1.0 / (2.0 * 2f64.sqrt())).abs();
    let a_err = (r.angle - FRAC_PI_6).abs();
    check(
        d_err <= 1e-15 && a_err <= 1e-15,
        format!("distance err {d_err:.1e}, angle err {a_err:.1e}"),
    )
}

fn digital_oracle() -> Outcome {
    const K: u64 = 1_000_000;
    let tol = 2.0 / (K as f64 * PI) / TAU + 1e-9;
    let mut worst = 0.0f64;
    let mut bracket = true;
    let mut points = 0;
    for c in [0.1, 1.0, PI, 5.0, 6.2] {
        let band = lib(BandpassInterval::digital_centered(c))?;
        for n in [0u64, 1, 5, 50] {
            let d = lib(delayed_report_digital(&band, DigitalDelay::new(n)))?.distance;
            let o = lib(digital_distance_oracle(&band, DigitalDelay::new(n), K))?;
            worst = worst.max((d - o.value).abs());
            let missing = d * d - o.partial * o.partial;
            bracket &= (-1e-15..=o.tail_bound + 1e-15).contains(&missing);
            points += 1;
        }
    }
    check(
        worst <= tol && bracket,
        format!("{points} points, max |d - oracle| {worst:.2e} <= {tol:.2e}, partial-sum bracket holds: {bracket}"),
    )
}

fn analog_oracle() -> Outcome {
    let (r, dt) = (1e4, 1e-3);
    let cfg = QuadratureConfig::default();
    let mut worst_margin = f64::NEG_INFINITY;
    let mut worst = 0.0f64;
    let mut points = 0;
    for (a, b) in [(0.0, 1.0), (0.0, PI), (-2.0, 3.0)] {
        let band = lib(BandpassInterval::analog(a, b))?;
        for t in [0.0, 0.5, 2.0, 10.0] {
            let delay = lib(AnalogDelay::new(t))?;
            let d = lib(delayed_report(&band, delay, &cfg))?.distance;
            let o = lib(analog_distance_oracle(&band, delay, r, dt))?;
            let gap = (d - o.value).abs();
            worst = worst.max(gap);
            worst_margin = worst_margin.max(gap - (o.tail_bound + 5.0 * dt));
            points += 1;
        }
    }
    check(
        worst_margin <= 0.0,
        format!("{points} points, max |d - oracle| {worst:.2e} <= tail bound + 5 dt"),
    )
}

fn quadrature_vs_si() -> Outcome {
    let cfg = QuadratureConfig::default();
    let mut worst = 0.0f64;
    for c in [0.5, 1.0, PI, 6.0] {
        for t in [0.1, 1.0, 10.0] {
            let q = lib(integrate_adaptive(|s| oscillatory_kernel(c, s), 0.0, t, &cfg))?;
            worst = worst.max((q.value - kernel_half_integral(c, t)).abs());
            let band = lib(BandpassInterval::analog(0.0, c))?;
            let r = lib(delayed_report(&band, lib(AnalogDelay::new(t))?, &cfg))?;
            let si = r.cross_check.ok_or("no cross-check")?;
            worst = worst.max((r.distance - si).abs());
        }
    }
    check(worst <= 1e-8, format!("12 (c, T) pairs, max disagreement {worst:.2e}"))
}

fn norm_isometry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut lower_err, mut probe_excess) = (0.0f64, f64::NEG_INFINITY);
    for i in 0..50u64 {
        let len = rng.random_range(1..=256usize);
        let values = (0..len)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let h = lib(DigitalSequence::new(rng.random_range(-100..100), values))?;
        let est = lib(operator_norm_estimate(&h, 16, 1000 + i))?;
        lower_err = lower_err.max((est.lower - h.norm()).abs());
        for p in &est.probe_ratios {
            probe_excess = probe_excess.max(p - h.norm());
        }
    }
    check(
        lower_err <= 1e-12 && probe_excess <= 1e-12,
        format!("50 kernels, |lower - ||h||| {lower_err:.1e}, max probe excess {probe_excess:.2e}"),
    )
}

fn limit_suites() -> Outcome {
    let cfg = QuadratureConfig::default();
    let large = [10.0, 1e2, 1e3, 1e4];
    let small = [1e-1, 1e-2, 1e-3, 1e-4];
    let near_full: Vec<f64> = small.iter().map(|e| TAU - e).collect();
    let probes: Vec<(&str, LimitQuantity, Vec<f64>, f64)> = vec![
        ("d(T), T -> inf", LimitQuantity::DistanceVsDelay { bandwidth: 2.0 }, large.to_vec(), 0.0),
        ("theta(T), T -> inf", LimitQuantity::AngleVsDelay { bandwidth: 2.0 }, large.to_vec(), 0.0),
        ("d(T), c -> 0", LimitQuantity::DistanceVsBandwidth { delay: 1.0 }, small.to_vec(), 0.0),
        ("theta(T), c -> 0", LimitQuantity::AngleVsBandwidth { delay: 1.0 }, small.to_vec(), FRAC_PI_4),
        ("digital theta, c -> 0", LimitQuantity::DigitalAngleVsBandwidth { delay: 0 }, small.to_vec(), FRAC_PI_4),
        ("digital theta, c -> 2pi", LimitQuantity::DigitalAngleVsBandwidth { delay: 0 }, near_full.clone(), 0.0),
        ("digital d, c -> 0", LimitQuantity::DigitalDistanceVsBandwidth { delay: 0 }, small.to_vec(), 0.0),
        ("digital d, c -> 2pi", LimitQuantity::DigitalDistanceVsBandwidth { delay: 0 }, near_full.clone(), 0.0),
        ("theta(N=5), c -> 0", LimitQuantity::DigitalAngleVsBandwidth { delay: 5 }, small.to_vec(), FRAC_PI_4),
        ("theta(N=5), c -> 2pi", LimitQuantity::DigitalAngleVsBandwidth { delay: 5 }, near_full.clone(), 0.0),
        ("d(N=5), c -> 0", LimitQuantity::DigitalDistanceVsBandwidth { delay: 5 }, small.to_vec(), 0.0),
        ("d(N=5), c -> 2pi", LimitQuantity::DigitalDistanceVsBandwidth { delay: 5 }, near_full, 0.0),
        ("theta(N), N -> inf, c = pi", LimitQuantity::DigitalAngleVsDelay { bandwidth: PI }, large.to_vec(), 0.0),
        ("theta(N), N -> inf, c = 1", LimitQuantity::DigitalAngleVsDelay { bandwidth: 1.0 }, large.to_vec(), 0.0),
    ];
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for (name, q, ladder, expected) in &probes {
        let table = lib(limit_probe(*q, ladder, &cfg))?;
        match table.fitted_limit {
            Some(l) if (l - expected).abs() <= 1e-3 => worst = worst.max((l - expected).abs()),
            other => failures.push(format!("{name}: fitted {other:?}, expected {expected}")),
        }
    }

    // theta(N) along N = 0..=200: strict where the added term is nonzero,
    // equal where k c is a multiple of 2 pi
    let mut strict = 0;
    let mut equal = 0;
    for c in [PI, TAU / 3.0, 1.0, 5.5] {
        let band = lib(BandpassInterval::digital_centered(c))?;
        let mut prev = lib(delayed_report_digital(&band, DigitalDelay::CAUSAL))?.angle;
        for n in 1..=200u64 {
            let theta = lib(delayed_report_digital(&band, DigitalDelay::new(n)))?.angle;
            let added = 1.0 - (n as f64 * c).cos();
            if added > 1e-12 {
                if theta >= prev {
                    failures.push(format!("c = {c}: theta({n}) >= theta({})", n - 1));
                }
                strict += 1;
            } else {
                if (theta - prev).abs() > 1e-15 {
                    failures.push(format!("c = {c}: theta({n}) != theta({})", n - 1));
                }
                equal += 1;
            }
            prev = theta;
        }
    }
    let detail = format!(
        "{} ladder probes, max limit err {worst:.1e}; theta(N) steps: {strict} strict, {equal} equal",
        probes.len()
    );
    if failures.is_empty() && equal > 0 {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", failures.join("; ")))
    }
}

fn paley_wiener() -> Outcome {
    let cfg = QuadratureConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bad = Vec::new();
    for _ in 0..20 {
        let x: f64 = rng.random_range(-4.0..4.0);
        let y: f64 = rng.random_range(-4.0..4.0);
        if (x - y).abs() < 0.1 {
            continue;
        }
        let band = lib(BandpassInterval::analog(x.min(y), x.max(y)))?;
        let h = lib(TransferFunctionSamples::ideal(&band, -5.0, 5.0, 2049))?;
        let r = paley_wiener_diagnostic(&h, &cfg);
        if r.verdict != Verdict::DivergenceEvidence || r.vanishing_intervals.is_empty() {
            bad.push(format!("chi[{:.3}, {:.3}] -> {:?}", band.a(), band.b(), r.verdict));
        }
    }
    for _ in 0..20 {
        let mu: f64 = rng.random_range(-1.0..1.0);
        let sigma: f64 = rng.random_range(0.7..2.0);
        let h = lib(TransferFunctionSamples::from_real_fn(-10.0, 10.0, 4097, |x| {
            (-((x - mu) / sigma).powi(2)).exp()
        }))?;
        let r = paley_wiener_diagnostic(&h, &cfg);
        if r.verdict != Verdict::ConsistentWithRealizable {
            bad.push(format!("gaussian mu {mu:.3} sigma {sigma:.3} -> {:?}", r.verdict));
        }
    }
    check(
        bad.is_empty(),
        if bad.is_empty() {
            "20 ideal bands diverge, 20 gaussians level off".into()
        } else {
            bad.join("; ")
        },
    )
}

fn wide_band_limit() -> Outcome {
    let cfg = QuadratureConfig::default();
    let ladder = [10.0, 1e2, 1e3, 1e4, 1e5];
    let mut parts = Vec::new();
    let mut ok = true;
    for t in [0.5, 1.0, 2.0] {
        let table = lib(limit_probe(LimitQuantity::DistanceVsBandwidth { delay: t }, &ladder, &cfg))?;
        let candidate = wide_band_distance_candidate(lib(AnalogDelay::new(t))?);
        match table.fitted_limit {
            Some(l) if l.is_finite() => parts.push(format!(
                "T={t}: fitted {l:.6}, stated bracket [0, {:.6}], 1/sqrt(pi T) = {candidate:.6}",
                TAU / t
            )),
            other => {
                ok = false;
                parts.push(format!("T={t}: no finite fit ({other:?})"));
            }
        }
    }
    check(ok, parts.join("; "))
}

fn cli_contract() -> Outcome {
    use common::{causalgap, golden_cases, matches_golden};
    let mut failures = Vec::new();
    let cases = golden_cases();
    for (name, args) in &cases {
        let out = causalgap(args);
        if out.code != 0 {
            failures.push(format!("{name}: exit {}", out.code));
        } else if let Err(e) = matches_golden(name, &out.stdout) {
            failures.push(e);
        }
    }
    let dir = std::env::temp_dir().join("causalgap-acceptance-missing-dir");
    let _ = std::fs::remove_dir_all(&dir);
    let bad_path = dir.join("x.csv");
    let bad_path = bad_path.to_str().unwrap_or("/nonexistent/x.csv");
    let codes: [(&[&str], i32); 5] = [
        (&["verify", "--suite", "all"], 0),
        (&["verify", "--suite", "operators", "--force-fail", "operators.pythagoras"], 1),
        (&["digital", "--a", "0", "--b", "1"], 2),
        (&["analog", "--a", "0", "--b", "2", "--delay", "100", "--max-subdivisions", "1"], 3),
        (
            &["sweep", "--mode", "digital", "--vary", "delay", "--from", "0", "--to", "3", "--steps", "4", "--out", bad_path],
            4,
        ),
    ];
    for (args, expected) in codes {
        let out = causalgap(args);
        if out.code != expected {
            failures.push(format!("{args:?}: exit {} (expected {expected})", out.code));
        }
    }
    check(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} golden files, exit codes 0/1/2/3/4", cases.len())
        } else {
            failures.join("; ")
        },
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "analog causal constants", analog_causal_constants, Some(Duration::from_secs(1))),
        (2, "digital closed forms", digital_closed_forms, Some(Duration::from_secs(1))),
        (3, "digital oracle agreement", digital_oracle, Some(Duration::from_secs(60))),
        (4, "analog oracle agreement", analog_oracle, Some(Duration::from_secs(120))),
        (5, "quadrature vs sine integral", quadrature_vs_si, Some(Duration::from_secs(5))),
        (6, "operator norm isometry", norm_isometry, Some(Duration::from_secs(10))),
        (7, "limit suites", limit_suites, Some(Duration::from_secs(30))),
        (8, "Paley-Wiener diagnostic", paley_wiener, None),
        (9, "wide-band limit of d(T)", wide_band_limit, Some(Duration::from_secs(30))),
        (10, "CLI contract", cli_contract, None),
    ];
    let mut failed = 0;
    for (id, title, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = budget.is_some_and(|b| elapsed > b);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over runtime budget {budget:?}")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} criterion {id:>2} {title}: {detail} [{:.2} s]", elapsed.as_secs_f64());
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
