//! Text formats: CSV tables with `#` comment headers and one-line
//! `key=value` records.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::lifshitz::{ForceBand, ForceCurve};

/// Fixed scientific notation with 9 significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.8e}")
}

/// Compact rendering for `key=value` records, rounded to 9 significant digits.
pub fn record_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = sci(x).parse().expect("round trip through scientific notation");
    let magnitude = rounded.abs();
    if (1e-3..1e7).contains(&magnitude) {
        let s = rounded.to_string();
        if s.contains('.') {
            s
        } else {
            format!("{s}.0")
        }
    } else {
        let s = format!("{rounded:e}");
        match s.split_once('e') {
            Some((mantissa, exp)) if !mantissa.contains('.') => format!("{mantissa}.0e{exp}"),
            _ => s,
        }
    }
}

/// Space-separated `key=value` line.
pub fn record(fields: &[(&str, String)]) -> String {
    let parts: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
    parts.join(" ")
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Comment block written at the top of every output file.
#[derive(Debug, Clone, Default)]
pub struct Header {
    lines: Vec<String>,
}

impl Header {
    pub fn new(command: &str, config_hash: &str) -> Self {
        let mut h = Self::default();
        h.push(format!("{} {} {command}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION")));
        h.push(format!("config_sha256={config_hash}"));
        h
    }

    pub fn push(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn render(&self) -> String {
        self.lines.iter().map(|l| format!("# {l}\n")).collect()
    }
}

fn csv_label(label: &str) -> String {
    label.replace(',', ";")
}

pub fn curves_csv(header: &Header, curves: &[ForceCurve]) -> String {
    let mut out = header.render();
    out.push_str("distance_nm,force_pN,model_label\n");
    for curve in curves {
        let label = csv_label(curve.model_label());
        for (d, f) in curve.distances().iter().zip(curve.forces()) {
            let _ = writeln!(out, "{},{},{label}", sci(d * 1e9), sci(f * 1e12));
        }
    }
    out
}

pub fn band_csv(header: &Header, band: &ForceBand) -> String {
    let mut out = header.render();
    out.push_str("distance_nm,f_min_pN,f_max_pN\n");
    for ((d, lo), hi) in band.distances.iter().zip(&band.f_min).zip(&band.f_max) {
        let _ = writeln!(out, "{},{},{}", sci(d * 1e9), sci(lo * 1e12), sci(hi * 1e12));
    }
    out
}

/// Two-column sweep table, values already in output units.
pub fn sweep_csv(header: &Header, columns: (&str, &str), rows: &[(f64, f64)]) -> String {
    let mut out = header.render();
    let _ = writeln!(out, "{},{}", columns.0, columns.1);
    for (x, y) in rows {
        let _ = writeln!(out, "{},{}", sci(*x), sci(*y));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scientific_has_nine_digits() {
        assert_eq!(sci(40.0), "4.00000000e1");
        assert_eq!(sci(-1.2345678912e-10), "-1.23456789e-10");
    }

    #[test]
    fn record_numbers() {
        assert_eq!(record_number(0.0), "0");
        assert_eq!(record_number(1.0), "1.0");
        assert_eq!(record_number(8.0), "8.0");
        assert_eq!(record_number(-243e-12 / 24.3), "-1.0e-11");
        assert_eq!(record_number(0.013_349_063_426), "0.0133490634");
        assert_eq!(record_number(-3.162_277_660_168_379), "-3.16227766");
        assert_eq!(record_number(2.4e-8), "2.4e-8");
    }

    #[test]
    fn records_join() {
        assert_eq!(record(&[("t", "1.0".into()), ("p", "0.5".into())]), "t=1.0 p=0.5");
    }

    #[test]
    fn hash_is_stable() {
        assert_eq!(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
