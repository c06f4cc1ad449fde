use std::f64::consts::TAU;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use super::render::{num, write_report};
use super::verify::{run_suite, Suite};
use super::{
    AnalogArgs, Command, DigitalArgs, ImpulseArgs, ModeArg, QuadArgs, SuiteArg, SweepArgs, Vary,
    VerifyArgs, EXIT_OK, EXIT_SUBDIVISION_LIMIT, EXIT_UNWRITABLE, EXIT_VERIFY_FAILED,
    EXIT_INVALID,
};
use crate::analog::{causal_report, delayed_report, AnalogDelay, AnalogImpulseResponse};
use crate::digital::{
    causal_report_digital, delayed_report_digital, ideal_impulse_response, DigitalDelay,
    FourierCoefficientTable,
};
use crate::error::Error;
use crate::kernel::{BandpassInterval, QuadratureConfig};
use crate::operators::{truncate_to_delay, truncate_to_delay_analog};
use crate::report::ApproximationReport;

#[derive(Debug, thiserror::Error)]
pub(crate) enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Unwritable { path: String, source: io::Error },
}

impl CliError {
    pub(crate) fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Library(_) => EXIT_INVALID,
            CliError::Unwritable { .. } => EXIT_UNWRITABLE,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn stdout_error(source: io::Error) -> CliError {
    CliError::Unwritable {
        path: "<stdout>".into(),
        source,
    }
}

pub(crate) fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Analog(args) => analog(args, out),
        Command::Digital(args) => digital(args, out),
        Command::Sweep(args) => sweep(args, out),
        Command::Impulse(args) => impulse(args, out),
        Command::Verify(args) => verify(args, out),
    }
}

fn quad_config(q: &QuadArgs) -> CliResult<QuadratureConfig> {
    let cfg = QuadratureConfig {
        abs_tolerance: q.quad_tol,
        rel_tolerance: q.quad_tol,
        max_subdivisions: q.max_subdivisions,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn limit_code(flagged: bool) -> i32 {
    if flagged {
        EXIT_SUBDIVISION_LIMIT
    } else {
        EXIT_OK
    }
}

fn analog(args: AnalogArgs, out: &mut dyn Write) -> CliResult<i32> {
    let band = BandpassInterval::analog(args.a, args.b)?;
    let cfg = quad_config(&args.quad)?;
    let report = match args.delay {
        None => causal_report(&band)?,
        Some(t) => delayed_report(&band, AnalogDelay::new(t)?, &cfg)?,
    };
    write_report(out, &band, &report, args.format).map_err(stdout_error)?;
    Ok(limit_code(report.subdivision_limit))
}

/// Opens `path` for writing, `-` meaning `out`.
fn with_sink<F>(path: &str, out: &mut dyn Write, body: F) -> CliResult<()>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    let unwritable = |source| CliError::Unwritable {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        return body(out).map_err(stdout_error);
    }
    let file = File::create(Path::new(path)).map_err(unwritable)?;
    let mut w = BufWriter::new(file);
    body(&mut w).and_then(|_| w.flush()).map_err(unwritable)
}

fn csv_writer(w: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

fn io_err(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    }
}

fn write_complex_rows<I>(w: &mut dyn Write, header: &str, rows: I) -> io::Result<()>
where
    I: IntoIterator<Item = (String, num_complex::Complex64)>,
{
    let mut csv = csv_writer(w);
    csv.write_record([header, "re", "im"]).map_err(io_err)?;
    for (key, v) in rows {
        csv.write_record([key, num(v.re), num(v.im)]).map_err(io_err)?;
    }
    csv.flush()
}

fn digital(args: DigitalArgs, out: &mut dyn Write) -> CliResult<i32> {
    let band = BandpassInterval::digital(args.a, args.b)?;
    let report = match args.delay_samples {
        None => causal_report_digital(&band)?,
        Some(n) => delayed_report_digital(&band, DigitalDelay::new(n))?,
    };
    if let Some(k) = args.coeffs {
        let table = FourierCoefficientTable::new(band, k)?;
        let rows = || table.iter().map(|(k, c)| (k.to_string(), c)).collect::<Vec<_>>();
        match &args.coeffs_out {
            Some(path) => with_sink(&path.to_string_lossy(), out, |w| {
                write_complex_rows(w, "k", rows())
            })?,
            None => {
                with_sink("-", out, |w| write_complex_rows(w, "k", rows()))?;
                return Ok(EXIT_OK);
            }
        }
    }
    write_report(out, &band, &report, args.format).map_err(stdout_error)?;
    Ok(EXIT_OK)
}

fn sweep_params(args: &SweepArgs) -> CliResult<Vec<f64>> {
    if args.steps < 2 {
        return Err(CliError::Invalid("--steps must be at least 2".into()));
    }
    if !(args.from < args.to && args.from.is_finite() && args.to.is_finite()) {
        return Err(CliError::Invalid(format!(
            "range must satisfy from < to, got [{}, {}]",
            args.from, args.to
        )));
    }
    let n = args.steps - 1;
    let params: Vec<f64> = (0..=n)
        .map(|i| {
            if i == n {
                args.to
            } else {
                args.from + (args.to - args.from) * i as f64 / n as f64
            }
        })
        .collect();
    if args.mode == ModeArg::Digital && args.vary == Vary::Delay {
        if args.from < 0.0 {
            return Err(CliError::Invalid("delay samples must be >= 0".into()));
        }
        let mut rounded: Vec<f64> = params.iter().map(|p| p.round()).collect();
        rounded.dedup();
        return Ok(rounded);
    }
    Ok(params)
}

fn digital_samples(delay: f64) -> CliResult<DigitalDelay> {
    if delay < 0.0 || delay.fract() != 0.0 || !delay.is_finite() {
        return Err(CliError::Invalid(format!(
            "digital delay must be a whole number of samples, got {delay}"
        )));
    }
    Ok(DigitalDelay::new(delay as u64))
}

fn sweep(args: SweepArgs, out: &mut dyn Write) -> CliResult<i32> {
    let cfg = quad_config(&args.quad)?;
    let params = sweep_params(&args)?;
    let bandwidth = args.bandwidth.unwrap_or(match args.mode {
        ModeArg::Analog => 2.0,
        ModeArg::Digital => std::f64::consts::PI,
    });

    let row = |p: f64| -> CliResult<ApproximationReport> {
        Ok(match (args.mode, args.vary) {
            (ModeArg::Analog, Vary::Delay) => delayed_report(
                &BandpassInterval::analog(0.0, bandwidth)?,
                AnalogDelay::new(p)?,
                &cfg,
            )?,
            (ModeArg::Analog, Vary::Bandwidth) => delayed_report(
                &BandpassInterval::analog(0.0, p)?,
                AnalogDelay::new(args.delay)?,
                &cfg,
            )?,
            (ModeArg::Digital, Vary::Delay) => delayed_report_digital(
                &BandpassInterval::digital_centered(bandwidth)?,
                DigitalDelay::new(p as u64),
            )?,
            (ModeArg::Digital, Vary::Bandwidth) => {
                if !(p > 0.0 && p < TAU) {
                    return Err(CliError::Invalid(format!(
                        "digital bandwidth {p} outside (0, 2pi)"
                    )));
                }
                delayed_report_digital(
                    &BandpassInterval::digital_centered(p)?,
                    digital_samples(args.delay)?,
                )?
            }
        })
    };
    let rows = params
        .iter()
        .map(|&p| row(p).map(|r| (p, r)))
        .collect::<CliResult<Vec<_>>>()?;
    let flagged = rows.iter().any(|(_, r)| r.subdivision_limit);

    with_sink(&args.out, out, |w| {
        let mut csv = csv_writer(w);
        csv.write_record(["param", "distance", "angle", "kernel_norm", "method", "error_estimate"])
            .map_err(io_err)?;
        for (p, r) in &rows {
            csv.write_record([
                num(*p),
                num(r.distance),
                num(r.angle),
                num(r.kernel_norm),
                r.method.as_str().to_string(),
                num(r.error_estimate),
            ])
            .map_err(io_err)?;
        }
        csv.flush()
    })?;
    Ok(limit_code(flagged))
}

fn impulse(args: ImpulseArgs, out: &mut dyn Write) -> CliResult<i32> {
    match args.mode {
        ModeArg::Analog => {
            if !(args.radius > 0.0 && args.step > 0.0) {
                return Err(CliError::Invalid(
                    "--radius and --step must be positive".into(),
                ));
            }
            let band = BandpassInterval::analog(args.a, args.b)?;
            let mut h = AnalogImpulseResponse::new(band)?.sample(args.radius, args.step)?;
            if let Some(t) = args.delay {
                h = truncate_to_delay_analog(&h, AnalogDelay::new(t)?);
            }
            let rows: Vec<_> = h
                .values()
                .iter()
                .enumerate()
                .map(|(j, v)| (num(h.time(j)), *v))
                .collect();
            with_sink(&args.out, out, |w| write_complex_rows(w, "index_or_time", rows))?;
        }
        ModeArg::Digital => {
            if args.window == 0 {
                return Err(CliError::Invalid("--window must be positive".into()));
            }
            let band = BandpassInterval::digital(args.a, args.b)?;
            let mut h = ideal_impulse_response(&band, args.window)?;
            if let Some(n) = args.delay {
                h = truncate_to_delay(&h, digital_samples(n)?);
            }
            let rows: Vec<_> = h.indices().map(|n| (n.to_string(), h.get(n))).collect();
            with_sink(&args.out, out, |w| write_complex_rows(w, "index_or_time", rows))?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let suite = match args.suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Analog => Suite::Analog,
        SuiteArg::Digital => Suite::Digital,
        SuiteArg::Operators => Suite::Operators,
    };
    let mut outcomes = run_suite(suite, args.seed);
    if let Some(name) = &args.force_fail {
        match outcomes.iter_mut().find(|o| &o.name == name) {
            Some(o) => {
                o.passed = false;
                o.detail = format!("{} [forced]", o.detail);
            }
            None => return Err(CliError::Invalid(format!("no check named {name}"))),
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let write = |out: &mut dyn Write| -> io::Result<()> {
        writeln!(out, "suite {} seed {}", suite.as_str(), args.seed)?;
        for o in &outcomes {
            let tag = if o.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{tag} {} {}", o.name, o.detail)?;
        }
        writeln!(out, "{} passed, {} failed", outcomes.len() - failed, failed)
    };
    write(out).map_err(stdout_error)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
