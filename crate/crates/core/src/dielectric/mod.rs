//! Dielectric response on the imaginary frequency axis.
//!
//! All energies (ξ, ωp, γ, oscillator resonances, tabulated photon energies)
//! are in eV. Every model is immutable once built and safe to share across
//! threads.

mod drude;
mod manifest;
mod oscillator;
mod tabulated;

pub use drude::{drude_eps_imag, DrudeModel};
pub use manifest::{load_manifest, DrudeSpec, ManifestFile, ModelSpec};
pub use oscillator::{OscillatorModel, OscillatorTerm};
pub use tabulated::{kk_eps_imag, parse_optics_file, OpticsPoint, TabulatedOptics, KK_ABS_TOL};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum PermittivityModel {
    Drude(DrudeModel),
    Tabulated(TabulatedOptics),
    Oscillator(OscillatorModel),
    Vacuum,
    /// Perfect mirror, the ε → ∞ limit. Evaluates to `f64::INFINITY`.
    IdealConductor,
}

/// Behaviour of a model as ξ → 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StaticLimit {
    /// Finite static permittivity.
    Dielectric(f64),
    /// Conductor with the given plasma frequency (eV); ε(iξ) diverges as ξ → 0.
    Metal {
        plasma_frequency: f64,
    },
    IdealConductor,
}

impl PermittivityModel {
    pub fn static_limit(&self) -> Result<StaticLimit> {
        Ok(match self {
            PermittivityModel::Drude(d) => StaticLimit::Metal { plasma_frequency: d.plasma_frequency() },
            PermittivityModel::Tabulated(t) => match t.low_energy_extension() {
                Some(d) => StaticLimit::Metal { plasma_frequency: d.plasma_frequency() },
                None => StaticLimit::Dielectric(t.static_permittivity()?.unwrap_or(1.0)),
            },
            PermittivityModel::Oscillator(o) => StaticLimit::Dielectric(o.static_permittivity()),
            PermittivityModel::Vacuum => StaticLimit::Dielectric(1.0),
            PermittivityModel::IdealConductor => StaticLimit::IdealConductor,
        })
    }

    /// Short comma-free description, used as the model label in outputs.
    pub fn label(&self) -> String {
        match self {
            PermittivityModel::Drude(d) => {
                format!("drude wp={} gamma={}", d.plasma_frequency(), d.relaxation_rate())
            }
            PermittivityModel::Tabulated(t) => t.source_label().replace(',', ";"),
            PermittivityModel::Oscillator(o) => {
                let terms: Vec<String> = o.terms().iter().map(|t| format!("{}@{}", t.strength, t.resonance)).collect();
                format!("oscillator {}", terms.join(" "))
            }
            PermittivityModel::Vacuum => "vacuum".into(),
            PermittivityModel::IdealConductor => "ideal-conductor".into(),
        }
    }
}

/// Evaluates `ε(iξ)` for any model; `xi` in eV.
pub fn eval_eps_imag(model: &PermittivityModel, xi: f64) -> Result<f64> {
    if !(xi > 0.0) {
        return Err(Error::Domain(format!("xi must be positive, got {xi} eV")));
    }
    match model {
        PermittivityModel::Drude(d) => d.eps_imag_axis(xi),
        PermittivityModel::Tabulated(t) => kk_eps_imag(t, xi),
        PermittivityModel::Oscillator(o) => Ok(o.eps_imag_axis(xi)),
        PermittivityModel::Vacuum => Ok(1.0),
        PermittivityModel::IdealConductor => Ok(f64::INFINITY),
    }
}

/// A labelled, non-empty set of alternative models for one material.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelEnsemble {
    label: String,
    members: Vec<PermittivityModel>,
}

impl ModelEnsemble {
    pub fn new(label: impl Into<String>, members: Vec<PermittivityModel>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Input("model ensemble must have at least one member".into()));
        }
        Ok(Self { label: label.into(), members })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn members(&self) -> &[PermittivityModel] {
        &self.members
    }
}
