#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn causalgap(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_causalgap"))
        .args(args)
        .env_remove("CAUSALGAP_SEED")
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name)
}

/// Compares `actual` with the stored golden file; `UPDATE_GOLDEN=1` rewrites it.
pub fn matches_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| format!("missing golden {}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{name} differs from golden\n--- expected\n{expected}\n--- actual\n{actual}"
        ))
    }
}

pub const HALF_BAND: [&str; 4] = ["--a", "1.5707963267948966", "--b", "4.71238898038469"];

/// Golden cases: file name and arguments. Every case exits 0.
pub fn golden_cases() -> Vec<(&'static str, Vec<&'static str>)> {
    let half = HALF_BAND.to_vec();
    let with = |head: &[&'static str], tail: &[&'static str]| -> Vec<&'static str> {
        head.iter().chain(half.iter()).chain(tail.iter()).copied().collect()
    };
    vec![
        ("analog_causal.json", vec!["analog", "--a", "0", "--b", "2", "--format", "json"]),
        (
            "analog_delay.json",
            vec!["analog", "--a", "0", "--b", "2", "--delay", "1", "--format", "json"],
        ),
        ("analog_text.txt", vec!["analog", "--a", "-3", "--b", "-1"]),
        ("digital_half.json", with(&["digital"], &["--format", "json"])),
        ("digital_delay.csv", with(&["digital"], &["--delay-samples", "1", "--format", "csv"])),
        ("digital_coeffs.csv", with(&["digital"], &["--coeffs", "4"])),
        (
            "sweep_digital_delay.csv",
            vec![
                "sweep", "--mode", "digital", "--vary", "delay", "--from", "0", "--to", "10",
                "--steps", "21", "--out", "-",
            ],
        ),
        (
            "sweep_analog_delay.csv",
            vec![
                "sweep", "--mode", "analog", "--vary", "delay", "--from", "0", "--to", "100",
                "--steps", "11", "--bandwidth", "2", "--out", "-",
            ],
        ),
        (
            "sweep_digital_bandwidth.csv",
            vec![
                "sweep", "--mode", "digital", "--vary", "bandwidth", "--from", "0.01", "--to",
                "6.27", "--steps", "8", "--out", "-",
            ],
        ),
        ("impulse_digital.csv", with(&["impulse", "--mode", "digital"], &["--window", "8", "--delay", "0"])),
        (
            "impulse_analog.csv",
            vec![
                "impulse", "--mode", "analog", "--a", "0", "--b", "2", "--radius", "0.1",
                "--step", "0.01",
            ],
        ),
        ("verify_operators.txt", vec!["verify", "--suite", "operators", "--seed", "7"]),
    ]
}
