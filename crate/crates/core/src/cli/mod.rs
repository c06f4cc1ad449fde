//! The `causalgap` command line.
//!
//! Exit codes: 0 success, 1 a `verify` check failed, 2 invalid input,
//! 3 quadrature hit its subdivision limit (output still written),
//! 4 an output path could not be written.

mod commands;
mod render;
mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use verify::{run_suite, CheckOutcome, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_SUBDIVISION_LIMIT: i32 = 3;
pub const EXIT_UNWRITABLE: i32 = 4;

/// Version of the JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "causalgap",
    version,
    about = "Distance and angle between ideal bandpass filters and causal or delayed filters"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report for an analog band [a, b] in rad/s.
    Analog(AnalogArgs),
    /// Report for a digital band 0 < a < b < 2pi in rad/sample.
    Digital(DigitalArgs),
    /// Tabulate a report along a bandwidth or delay range as CSV.
    Sweep(SweepArgs),
    /// Export the ideal impulse response, optionally truncated to a delay.
    Impulse(ImpulseArgs),
    /// Run the built-in cross-checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Analog,
    Digital,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Vary {
    Bandwidth,
    Delay,
}

#[derive(Debug, Clone, Args)]
pub struct QuadArgs {
    /// Absolute and relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    pub quad_tol: f64,
    #[arg(long, default_value_t = 1 << 16)]
    pub max_subdivisions: usize,
}

#[derive(Debug, Args)]
pub struct AnalogArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: f64,
    /// Delay T in seconds; omitted means causal.
    #[arg(long, allow_negative_numbers = true)]
    pub delay: Option<f64>,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DigitalArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long)]
    pub delay_samples: Option<u64>,
    /// Emit c_{-K}..c_K as CSV instead of the report.
    #[arg(long, value_name = "K")]
    pub coeffs: Option<u64>,
    /// Write the coefficient table here and print the report as usual.
    #[arg(long, value_name = "PATH", requires = "coeffs")]
    pub coeffs_out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[arg(long, value_enum)]
    pub vary: Vary,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long)]
    pub steps: usize,
    /// Fixed bandwidth when varying the delay (analog band [0, c], digital
    /// band centred in (0, 2pi)); defaults to 2 (analog) or pi (digital).
    #[arg(long)]
    pub bandwidth: Option<f64>,
    /// Fixed delay when varying the bandwidth (seconds or samples).
    #[arg(long, default_value_t = 0.0)]
    pub delay: f64,
    /// Output CSV path; `-` for stdout.
    #[arg(long)]
    pub out: String,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Debug, Args)]
pub struct ImpulseArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: f64,
    /// Analog grid half-width in seconds.
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    pub radius: f64,
    /// Analog grid spacing in seconds.
    #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
    pub step: f64,
    /// Digital index window K, giving n in [-K, K].
    #[arg(long, default_value_t = 32)]
    pub window: u64,
    /// Zero the response before -delay (seconds or samples).
    #[arg(long, allow_negative_numbers = true)]
    pub delay: Option<f64>,
    /// Output CSV path; `-` for stdout.
    #[arg(long, default_value = "-")]
    pub out: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Analog,
    Digital,
    Operators,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, env = "CAUSALGAP_SEED", default_value_t = 7)]
    pub seed: u64,
    /// Mark the named check as failed after running it.
    #[arg(long, hide = true)]
    pub force_fail: Option<String>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match commands::dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
