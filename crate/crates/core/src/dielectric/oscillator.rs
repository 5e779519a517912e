use crate::error::{Error, Result};

/// One term `C / (1 + (ξ/ω)²)` of an oscillator permittivity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorTerm {
    pub strength: f64,
    /// Resonance energy, eV.
    pub resonance: f64,
}

/// `ε(iξ) = 1 + Σ Cj / (1 + (ξ/ωj)²)`
#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorModel {
    terms: Vec<OscillatorTerm>,
}

impl OscillatorModel {
    pub fn new(terms: Vec<OscillatorTerm>) -> Result<Self> {
        for t in &terms {
            if !(t.strength >= 0.0 && t.strength.is_finite()) {
                return Err(Error::Input(format!("oscillator strength must be >= 0, got {}", t.strength)));
            }
            if !(t.resonance > 0.0 && t.resonance.is_finite()) {
                return Err(Error::Input(format!("oscillator resonance must be > 0, got {} eV", t.resonance)));
            }
        }
        Ok(Self { terms })
    }

    /// Default ethanol: a microwave relaxation term carrying the static
    /// response (ε(0) = 24.3) and one UV term giving n² ≈ 1.85 in the visible.
    ///
    /// The relaxation term sits at ħ/τ for τ ≈ 160 ps; the UV term at the
    /// typical 3.0×10¹⁵ Hz electronic absorption frequency of simple liquids.
    pub fn ethanol() -> Self {
        Self {
            terms: vec![
                OscillatorTerm { strength: 22.45, resonance: 4.1e-6 },
                OscillatorTerm { strength: 0.85, resonance: 12.4 },
            ],
        }
    }

    pub fn terms(&self) -> &[OscillatorTerm] {
        &self.terms
    }

    pub fn eps_imag_axis(&self, xi: f64) -> f64 {
        1.0 + self.terms.iter().map(|t| t.strength / (1.0 + (xi / t.resonance).powi(2))).sum::<f64>()
    }

    pub fn static_permittivity(&self) -> f64 {
        1.0 + self.terms.iter().map(|t| t.strength).sum::<f64>()
    }
}
