//! Tabulated absorption data and its Kramers–Kronig continuation to the
//! imaginary frequency axis.
//!
//! `ε(iξ) = 1 + (2/π) ∫₀^∞ ω ε″(ω) / (ω² + ξ²) dω` is split in three:
//! the attached Drude model below the first tabulated energy (closed form),
//! the table itself (linear interpolation, adaptive Gauss–Kronrod with the
//! table energies as breakpoints), and an `ε″ ∝ ω⁻³` tail above the last
//! point (closed form).

use std::f64::consts::FRAC_2_PI;
use std::fmt::Write as _;

use super::DrudeModel;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_partitioned, Tolerance};

/// Absolute tolerance on ε(iξ) for the tabulated part of the integral.
pub const KK_ABS_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpticsPoint {
    /// Photon energy, eV.
    pub energy: f64,
    pub eps2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedOptics {
    points: Vec<OpticsPoint>,
    source_label: String,
    low_energy_extension: Option<DrudeModel>,
}

impl TabulatedOptics {
    /// Points must have strictly increasing positive energies and `ε″ ≥ 0`.
    pub fn new(
        points: Vec<OpticsPoint>,
        source_label: impl Into<String>,
        low_energy_extension: Option<DrudeModel>,
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Data("optical table is empty".into()));
        }
        for p in &points {
            if !(p.energy > 0.0 && p.energy.is_finite()) {
                return Err(Error::Data(format!("photon energy must be positive, got {} eV", p.energy)));
            }
            if !(p.eps2 >= 0.0 && p.eps2.is_finite()) {
                return Err(Error::Data(format!(
                    "negative or non-finite eps2 = {} at {} eV violates passivity",
                    p.eps2, p.energy
                )));
            }
        }
        if let Some(w) = points.windows(2).find(|w| !(w[1].energy > w[0].energy)) {
            return Err(Error::Data(format!(
                "photon energies must be strictly increasing ({} eV then {} eV)",
                w[0].energy, w[1].energy
            )));
        }
        Ok(Self { points, source_label: source_label.into(), low_energy_extension })
    }

    /// Samples the Drude absorption `ε″(ω)` on a log-spaced grid and attaches
    /// the same model as low-energy extension.
    pub fn from_drude(model: DrudeModel, min_energy: f64, max_energy: f64, count: usize) -> Result<Self> {
        if count < 2 || !(min_energy > 0.0 && max_energy > min_energy) {
            return Err(Error::Input("need count >= 2 and 0 < min < max for a synthesized table".into()));
        }
        let ratio = (max_energy / min_energy).ln() / (count - 1) as f64;
        let points = (0..count)
            .map(|i| {
                let energy = if i == count - 1 { max_energy } else { min_energy * (ratio * i as f64).exp() };
                OpticsPoint { energy, eps2: model.eps2(energy) }
            })
            .collect();
        Self::new(points, "drude-synthesized", Some(model))
    }

    pub fn points(&self) -> &[OpticsPoint] {
        &self.points
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn low_energy_extension(&self) -> Option<&DrudeModel> {
        self.low_energy_extension.as_ref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.source_label = label.into();
        self
    }

    pub fn with_extension(mut self, extension: Option<DrudeModel>) -> Self {
        self.low_energy_extension = extension;
        self
    }

    fn interpolate(&self, omega: f64) -> f64 {
        let i = self.points.partition_point(|p| p.energy <= omega);
        if i == 0 {
            return self.points[0].eps2;
        }
        if i == self.points.len() {
            return self.points[i - 1].eps2;
        }
        let (lo, hi) = (self.points[i - 1], self.points[i]);
        let t = (omega - lo.energy) / (hi.energy - lo.energy);
        lo.eps2 + t * (hi.eps2 - lo.eps2)
    }

    /// Dispersion integral `(2/π) ∫ ω ε″/(ω² + ξ²)`; `xi = 0` is allowed
    /// only when there is no Drude extension.
    pub(crate) fn dispersion_integral(&self, xi: f64) -> Result<f64> {
        let first = self.points[0].energy;
        let last = self.points[self.points.len() - 1];

        let below = match &self.low_energy_extension {
            Some(drude) => drude.dispersion_below(first, xi)?,
            None => 0.0,
        };

        let table = if self.points.len() > 1 && self.points.iter().any(|p| p.eps2 > 0.0) {
            let xi2 = xi * xi;
            let breaks: Vec<f64> = self.points.iter().map(|p| p.energy).collect();
            let tol = Tolerance::absolute(KK_ABS_TOL / FRAC_2_PI).with_max_intervals(4 * breaks.len() + 10_000);
            let r = integrate_partitioned(|w| w * self.interpolate(w) / (w * w + xi2), &breaks, tol)?;
            FRAC_2_PI * r.value
        } else {
            0.0
        };

        // ε″(ω) = ε″_last (ω_last/ω)³ beyond the table:
        // ∫ dω / (ω²(ω²+ξ²)) from ω_last to ∞ = (1/ξ²)(1/ω_last − atan(ξ/ω_last)/ξ)
        let tail = if last.eps2 > 0.0 {
            let wm = last.energy;
            let x = xi / wm;
            let shape = if x < 1e-3 {
                (1.0 / 3.0 - x * x / 5.0 + x.powi(4) / 7.0) / wm.powi(3)
            } else {
                (1.0 / wm - x.atan() / xi) / (xi * xi)
            };
            FRAC_2_PI * last.eps2 * wm.powi(3) * shape
        } else {
            0.0
        };

        Ok(below + table + tail)
    }

    /// Static permittivity of a table without Drude extension.
    pub(crate) fn static_permittivity(&self) -> Result<Option<f64>> {
        match self.low_energy_extension {
            Some(_) => Ok(None),
            None => Ok(Some(1.0 + self.dispersion_integral(0.0)?)),
        }
    }

    /// Two-column text form accepted by [`parse_optics_file`].
    pub fn to_optics_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.source_label);
        let _ = writeln!(out, "# energy_eV eps2");
        for p in &self.points {
            let _ = writeln!(out, "{} {}", p.energy, p.eps2);
        }
        out
    }
}

/// `ε(iξ)` from tabulated absorption data via the Kramers–Kronig relation.
pub fn kk_eps_imag(data: &TabulatedOptics, xi: f64) -> Result<f64> {
    if !(xi > 0.0) {
        return Err(Error::Domain(format!("xi must be positive, got {xi} eV")));
    }
    Ok(1.0 + data.dispersion_integral(xi)?)
}

/// Parses whitespace-delimited optical data: `energy_eV eps2` or
/// `energy_eV n k` per line, `#` starting a comment line.
pub fn parse_optics_file(content: &str) -> Result<TabulatedOptics> {
    let mut points = Vec::new();
    let mut columns = None;
    for (idx, raw) in content.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields = line
            .split_whitespace()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| Error::Parse { line: line_no, message: format!("cannot parse '{f}' as a number") })
            })
            .collect::<Result<Vec<f64>>>()?;
        match (columns, fields.len()) {
            (_, n) if n != 2 && n != 3 => {
                return Err(Error::Parse { line: line_no, message: format!("expected 2 or 3 columns, found {n}") })
            }
            (Some(c), n) if c != n => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected {c} columns as on earlier rows, found {n}"),
                })
            }
            _ => columns = Some(fields.len()),
        }
        let eps2 = if fields.len() == 3 { 2.0 * fields[1] * fields[2] } else { fields[1] };
        if !fields.iter().all(|v| v.is_finite()) {
            return Err(Error::Parse { line: line_no, message: "non-finite value".into() });
        }
        if eps2 < 0.0 {
            return Err(Error::Data(format!("line {line_no}: eps2 = {eps2} < 0 violates passivity")));
        }
        points.push(OpticsPoint { energy: fields[0], eps2 });
    }
    points.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    if let Some(w) = points.windows(2).find(|w| w[0].energy == w[1].energy) {
        return Err(Error::Data(format!("duplicate photon energy {} eV", w[0].energy)));
    }
    TabulatedOptics::new(points, "unnamed", None)
}
