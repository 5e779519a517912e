//! Non-Casimir contributions in a sphere–plate measurement in a fluid:
//! residual electrostatics (with optional double-layer screening), the
//! air-to-fluid scaling rules, salt-residue screening lengths, and
//! lubrication drag.
//!
//! The electrostatic model is an ideal-geometry estimate, not a prediction of
//! a measured residual force.

use std::f64::consts::PI;

use crate::constants::{AVOGADRO, BOLTZMANN, ELEMENTARY_CHARGE, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};

/// Static relative permittivity of ethanol.
pub const ETHANOL_STATIC_PERMITTIVITY: f64 = 24.3;
/// Ethanol density, kg/m³.
pub const ETHANOL_DENSITY: f64 = 789.0;
/// Ethanol dynamic viscosity at room temperature, Pa·s.
pub const ETHANOL_VISCOSITY: f64 = 1.074e-3;
/// NaCl molar mass, kg/mol.
pub const NACL_MOLAR_MASS: f64 = 58.44e-3;
/// Evaporation residue of high-purity ethanol, mass fraction.
pub const ETHANOL_RESIDUE_FRACTION: f64 = 3.6e-6;
/// Temperature for screening estimates, K.
pub const DEFAULT_DEBYE_TEMPERATURE: f64 = 298.0;

fn check_distance(d: f64) -> Result<()> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::Domain(format!("separation must be positive, got {d} m")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectrostaticScenario {
    sphere_radius: f64,
    potential: f64,
    eps_medium_static: f64,
    debye_length: Option<f64>,
}

impl ElectrostaticScenario {
    /// `potential` is the residual potential difference V₀ in volts;
    /// `debye_length` in m, `None` for an unscreened medium.
    pub fn new(sphere_radius: f64, potential: f64, eps_medium_static: f64, debye_length: Option<f64>) -> Result<Self> {
        if !(sphere_radius > 0.0 && sphere_radius.is_finite()) {
            return Err(Error::Input(format!("sphere radius must be positive, got {sphere_radius} m")));
        }
        if !potential.is_finite() {
            return Err(Error::Input("potential must be finite".into()));
        }
        if !(eps_medium_static >= 1.0 && eps_medium_static.is_finite()) {
            return Err(Error::Input(format!("static permittivity must be >= 1, got {eps_medium_static}")));
        }
        if let Some(l) = debye_length {
            if !(l > 0.0) {
                return Err(Error::Input(format!("Debye length must be positive, got {l} m")));
            }
        }
        Ok(Self { sphere_radius, potential, eps_medium_static, debye_length })
    }

    pub fn unscreened(&self) -> Self {
        Self { debye_length: None, ..*self }
    }

    pub fn sphere_radius(&self) -> f64 {
        self.sphere_radius
    }

    pub fn potential(&self) -> f64 {
        self.potential
    }

    pub fn eps_medium_static(&self) -> f64 {
        self.eps_medium_static
    }

    pub fn debye_length(&self) -> Option<f64> {
        self.debye_length
    }
}

/// `F = −(π R ε ε₀ V₀² / d) e^{−d/λ}`, always attractive.
pub fn electrostatic_force(scen: &ElectrostaticScenario, d: f64) -> Result<f64> {
    check_distance(d)?;
    let screening = scen.debye_length.map_or(1.0, |l| (-d / l).exp());
    Ok(-PI * scen.sphere_radius * scen.eps_medium_static * VACUUM_PERMITTIVITY * scen.potential.powi(2) / d * screening)
}

/// Where a residual electrostatic force measured in air comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeOrigin {
    /// Contact potential between the surfaces: the fluid multiplies the force by ε.
    WorkFunction,
    /// Trapped charge or stray external fields: the fluid divides the force by ε.
    TrappedChargeOrExternalField,
}

/// Scales an electrostatic force measured in air to the fluid.
pub fn fluid_scaling(force_in_air: f64, eps_medium_static: f64, origin: ChargeOrigin) -> Result<f64> {
    if !(eps_medium_static >= 1.0 && eps_medium_static.is_finite()) {
        return Err(Error::Domain(format!("static permittivity must be >= 1, got {eps_medium_static}")));
    }
    Ok(match origin {
        ChargeOrigin::WorkFunction => force_in_air * eps_medium_static,
        ChargeOrigin::TrappedChargeOrExternalField => force_in_air / eps_medium_static,
    })
}

/// Dissolved salt left as evaporation residue in a solvent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IonicSolution {
    pub residue_mass_fraction: f64,
    /// kg/mol
    pub salt_molar_mass: f64,
    /// kg/m³
    pub solvent_density: f64,
    pub ion_valence: u32,
    pub eps_static: f64,
    /// K
    pub temperature: f64,
}

impl IonicSolution {
    /// NaCl residue in ethanol at the default temperature.
    pub fn ethanol_nacl(residue_mass_fraction: f64) -> Self {
        Self {
            residue_mass_fraction,
            salt_molar_mass: NACL_MOLAR_MASS,
            solvent_density: ETHANOL_DENSITY,
            ion_valence: 1,
            eps_static: ETHANOL_STATIC_PERMITTIVITY,
            temperature: DEFAULT_DEBYE_TEMPERATURE,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = self.residue_mass_fraction >= 0.0
            && self.residue_mass_fraction.is_finite()
            && self.salt_molar_mass > 0.0
            && self.solvent_density > 0.0
            && self.ion_valence >= 1
            && self.eps_static >= 1.0
            && self.temperature > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::Input(format!("invalid ionic solution {self:?}")))
        }
    }

    /// Debye length of the solution, m.
    pub fn debye_length(&self) -> Result<f64> {
        debye_length(concentration_from_residue(self)?, self.ion_valence, self.eps_static, self.temperature)
    }
}

/// Salt concentration in mol/L if all residue is dissolved salt.
pub fn concentration_from_residue(sol: &IonicSolution) -> Result<f64> {
    sol.validate()?;
    let mol_per_m3 = sol.residue_mass_fraction * sol.solvent_density / sol.salt_molar_mass;
    Ok(mol_per_m3 * 1e-3)
}

/// Debye length `λ = √(ε_r ε₀ k_B T / (2 N_A e² z² c))` of a symmetric z:z
/// electrolyte, `concentration` in mol/L; returns metres.
pub fn debye_length(concentration: f64, valence: u32, eps_static: f64, temperature: f64) -> Result<f64> {
    if !(concentration > 0.0 && concentration.is_finite()) {
        return Err(Error::Domain(format!("concentration must be positive, got {concentration} mol/L")));
    }
    if valence == 0 {
        return Err(Error::Domain("ion valence must be >= 1".into()));
    }
    if !(eps_static >= 1.0 && temperature > 0.0) {
        return Err(Error::Domain(format!("need eps >= 1 and T > 0, got eps = {eps_static}, T = {temperature}")));
    }
    let c = concentration * 1e3;
    let z = valence as f64;
    let numerator = eps_static * VACUUM_PERMITTIVITY * BOLTZMANN * temperature;
    let denominator = 2.0 * AVOGADRO * (ELEMENTARY_CHARGE * z).powi(2) * c;
    Ok((numerator / denominator).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HydroScenario {
    sphere_radius: f64,
    viscosity: f64,
    approach_speed: f64,
}

impl HydroScenario {
    /// Radius in m, viscosity in Pa·s, approach speed in m/s.
    pub fn new(sphere_radius: f64, viscosity: f64, approach_speed: f64) -> Result<Self> {
        if !(sphere_radius > 0.0 && viscosity > 0.0 && approach_speed >= 0.0)
            || !(sphere_radius.is_finite() && viscosity.is_finite() && approach_speed.is_finite())
        {
            return Err(Error::Input(format!(
                "need R > 0, viscosity > 0 and speed >= 0, got R = {sphere_radius}, eta = {viscosity}, v = {approach_speed}"
            )));
        }
        Ok(Self { sphere_radius, viscosity, approach_speed })
    }

    pub fn approach_speed(&self) -> f64 {
        self.approach_speed
    }
}

/// Lubrication drag `6π η R² v / d` on a sphere approaching a plate; positive
/// (repulsive) because it opposes the approach.
pub fn hydrodynamic_force(scen: &HydroScenario, d: f64) -> Result<f64> {
    check_distance(d)?;
    Ok(6.0 * PI * scen.viscosity * scen.sphere_radius.powi(2) * scen.approach_speed / d)
}

/// Approach speed at which the drag at `d` has magnitude `force`.
pub fn approach_speed_for_force(sphere_radius: f64, viscosity: f64, d: f64, force: f64) -> Result<f64> {
    check_distance(d)?;
    if !(sphere_radius > 0.0 && viscosity > 0.0) {
        return Err(Error::Domain("need R > 0 and viscosity > 0".into()));
    }
    Ok(force.abs() * d / (6.0 * PI * viscosity * sphere_radius.powi(2)))
}
