use std::f64::consts::FRAC_2_PI;

use crate::error::{Error, Result};

/// Free-electron permittivity `ε(ω) = 1 − ωp²/(ω(ω + iγ))`, parameters in eV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrudeModel {
    plasma_frequency: f64,
    relaxation_rate: f64,
}

impl DrudeModel {
    pub fn new(plasma_frequency: f64, relaxation_rate: f64) -> Result<Self> {
        if !(plasma_frequency > 0.0 && plasma_frequency.is_finite()) {
            return Err(Error::Input(format!("Drude plasma frequency must be positive, got {plasma_frequency} eV")));
        }
        if !(relaxation_rate >= 0.0 && relaxation_rate.is_finite()) {
            return Err(Error::Input(format!("Drude relaxation rate must be non-negative, got {relaxation_rate} eV")));
        }
        Ok(Self { plasma_frequency, relaxation_rate })
    }

    /// Gold with ωp = 9.0 eV, γ = 0.035 eV.
    pub fn gold() -> Self {
        Self { plasma_frequency: 9.0, relaxation_rate: 0.035 }
    }

    pub fn plasma_frequency(&self) -> f64 {
        self.plasma_frequency
    }

    pub fn relaxation_rate(&self) -> f64 {
        self.relaxation_rate
    }

    /// `ε(iξ) = 1 + ωp²/(ξ(ξ + γ))`.
    pub fn eps_imag_axis(&self, xi: f64) -> Result<f64> {
        if !(xi > 0.0) {
            return Err(Error::Domain(format!("Drude permittivity diverges at xi = {xi} eV; need xi > 0")));
        }
        Ok(1.0 + self.plasma_frequency.powi(2) / (xi * (xi + self.relaxation_rate)))
    }

    /// Absorptive part on the real axis, `ε″(ω) = ωp²γ / (ω(ω² + γ²))`.
    pub fn eps2(&self, omega: f64) -> f64 {
        let g = self.relaxation_rate;
        self.plasma_frequency.powi(2) * g / (omega * (omega * omega + g * g))
    }

    /// Contribution of `ε″` on `(0, upper]` to the dispersion integral
    /// `(2/π) ∫ ω ε″(ω) / (ω² + ξ²) dω`, in closed form.
    pub(crate) fn dispersion_below(&self, upper: f64, xi: f64) -> Result<f64> {
        let wp2 = self.plasma_frequency.powi(2);
        let g = self.relaxation_rate;
        let denom = xi * xi - g * g;
        if denom.abs() > 1e-8 * xi * xi {
            // Partial fractions of γ/((ω²+γ²)(ω²+ξ²)); atan(a/γ) keeps γ → 0 finite.
            let gamma_part = (upper / g).atan();
            let xi_part = if xi > 0.0 { g * (upper / xi).atan() / xi } else { g / upper };
            return Ok(FRAC_2_PI * wp2 * (gamma_part - xi_part) / denom);
        }
        // ξ ≈ γ: ∫₀^a dω/(ω²+γ²)² = a/(2γ²(a²+γ²)) + atan(a/γ)/(2γ³)
        let ratio = if upper.is_infinite() { 0.0 } else { upper / (2.0 * g * g * (upper * upper + g * g)) };
        let integral = ratio + (upper / g).atan() / (2.0 * g.powi(3));
        Ok(FRAC_2_PI * wp2 * g * integral)
    }
}

/// Evaluates a Drude model on the imaginary frequency axis (energies in eV).
pub fn drude_eps_imag(model: &DrudeModel, xi: f64) -> Result<f64> {
    model.eps_imag_axis(xi)
}
