use std::io::{self, Write};

use serde::Serialize;

use super::{Format, SCHEMA_VERSION};
use crate::kernel::{BandpassInterval, Mode};
use crate::report::{ApproximationReport, Subspace};

/// Shortest decimal that parses back to the same double.
pub(crate) fn num(x: f64) -> String {
    format!("{x:?}")
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    schema: u32,
    mode: Mode,
    a: f64,
    b: f64,
    #[serde(flatten)]
    report: &'a ApproximationReport,
    angle_degrees: f64,
}

pub(crate) fn subspace_label(s: &Subspace) -> String {
    match s {
        Subspace::Causal => "causal".into(),
        Subspace::AnalogDelay { seconds } => format!("delay {} s", num(*seconds)),
        Subspace::DigitalDelay { samples } => format!("delay {samples} samples"),
        Subspace::Memoryless => "memoryless".into(),
    }
}

pub(crate) fn report_json(band: &BandpassInterval, r: &ApproximationReport) -> String {
    let doc = ReportDocument {
        schema: SCHEMA_VERSION,
        mode: band.mode(),
        a: band.a(),
        b: band.b(),
        report: r,
        angle_degrees: r.angle_degrees(),
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

pub(crate) fn write_report(
    out: &mut dyn Write,
    band: &BandpassInterval,
    r: &ApproximationReport,
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", report_json(band, r)),
        Format::Csv => {
            writeln!(
                out,
                "a,b,kernel_norm,distance,angle,angle_degrees,subspace,method,error_estimate,subdivision_limit"
            )?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                num(band.a()),
                num(band.b()),
                num(r.kernel_norm),
                num(r.distance),
                num(r.angle),
                num(r.angle_degrees()),
                subspace_label(&r.subspace),
                r.method.as_str(),
                num(r.error_estimate),
                r.subdivision_limit
            )
        }
        Format::Text => {
            let mode = match band.mode() {
                Mode::Analog => "analog",
                Mode::Digital => "digital",
            };
            writeln!(out, "band           [{}, {}] ({mode})", num(band.a()), num(band.b()))?;
            writeln!(out, "subspace       {}", subspace_label(&r.subspace))?;
            writeln!(out, "kernel_norm    {}", num(r.kernel_norm))?;
            writeln!(out, "distance       {}", num(r.distance))?;
            writeln!(
                out,
                "angle          {} rad ({} deg)",
                num(r.angle),
                num(r.angle_degrees())
            )?;
            writeln!(out, "method         {}", r.method.as_str())?;
            writeln!(out, "error_estimate {}", num(r.error_estimate))?;
            if let Some(x) = r.cross_check {
                writeln!(out, "cross_check    {}", num(x))?;
            }
            if r.subdivision_limit {
                writeln!(out, "warning: quadrature subdivision limit reached")?;
            }
            Ok(())
        }
    }
}
