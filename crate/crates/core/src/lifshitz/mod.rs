//! Finite-temperature Lifshitz interaction between two half-spaces across a
//! fluid gap, and its proximity-force mapping to a sphere above a plate.
//!
//! Attraction is negative everywhere: energies per area in J/m², forces in N.

mod band;
mod reflection;

pub use band::{force_band, force_curve, BandGeometry, ForceBand, ForceCurve};
pub use reflection::reflection_coeffs;

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::Mutex;

use crate::constants::{rad_per_s_to_ev, BOLTZMANN, HBAR, SPEED_OF_LIGHT};
use crate::dielectric::{eval_eps_imag, PermittivityModel, StaticLimit};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Tolerance};

/// Sphere radius assumed when none is given, m.
pub const DEFAULT_SPHERE_RADIUS: f64 = 19.9e-6;
/// Temperature assumed when none is given, K.
pub const DEFAULT_TEMPERATURE: f64 = 300.0;

/// How the transverse-electric reflection of a metal is taken at ξ = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TeZeroPrescription {
    /// `r_TE(0) = 0`, the ξ → 0 limit of the Drude model.
    #[default]
    Drude,
    /// `r_TE(0)` from a dissipationless plasma with the metal's ωp.
    Plasma,
}

impl TeZeroPrescription {
    pub fn name(&self) -> &'static str {
        match self {
            TeZeroPrescription::Drude => "drude",
            TeZeroPrescription::Plasma => "plasma",
        }
    }
}

/// Numerical controls for the Lifshitz sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LifshitzSettings {
    /// Relative tolerance of each transverse-wavevector integral.
    pub k_rel_tol: f64,
    /// A Matsubara term is "small" when |term| ≤ cutoff·|running sum|.
    pub matsubara_cutoff: f64,
    /// Number of consecutive small terms that ends the sum.
    pub consecutive_small: usize,
    /// Hard cap on the number of Matsubara terms.
    pub max_terms: usize,
    /// Sum exactly `n = 0..=n_max` instead of using the stopping rule.
    pub fixed_terms: Option<usize>,
    pub te_zero: TeZeroPrescription,
}

impl Default for LifshitzSettings {
    fn default() -> Self {
        Self {
            k_rel_tol: 1e-7,
            matsubara_cutoff: 1e-8,
            consecutive_small: 3,
            max_terms: 100_000,
            fixed_terms: None,
            te_zero: TeZeroPrescription::Drude,
        }
    }
}

/// Sphere of radius `R` above a plate, both separated by a fluid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePlateSystem {
    sphere_radius: f64,
    temperature: f64,
    pub sphere_material: PermittivityModel,
    pub plate_material: PermittivityModel,
    pub medium: PermittivityModel,
}

impl SpherePlateSystem {
    pub fn new(
        sphere_radius: f64,
        temperature: f64,
        sphere_material: PermittivityModel,
        plate_material: PermittivityModel,
        medium: PermittivityModel,
    ) -> Result<Self> {
        if !(sphere_radius > 0.0 && sphere_radius.is_finite()) {
            return Err(Error::Input(format!("sphere radius must be positive, got {sphere_radius} m")));
        }
        check_temperature(temperature)?;
        Ok(Self { sphere_radius, temperature, sphere_material, plate_material, medium })
    }

    pub fn sphere_radius(&self) -> f64 {
        self.sphere_radius
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }
}

fn check_temperature(temperature: f64) -> Result<()> {
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::Input(format!("temperature must be positive, got {temperature} K")));
    }
    Ok(())
}

/// Matsubara frequencies `ξn = 2πn k_B T / ħ`, n = 0…n_max.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatsubaraGrid {
    pub temperature: f64,
    pub n_max: usize,
}

impl MatsubaraGrid {
    /// ξn in rad/s.
    pub fn frequency(&self, n: usize) -> f64 {
        matsubara_frequency(self.temperature, n)
    }

    pub fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.n_max).map(|n| self.frequency(n))
    }
}

fn matsubara_frequency(temperature: f64, n: usize) -> f64 {
    2.0 * PI * n as f64 * BOLTZMANN * temperature / HBAR
}

/// A converged Lifshitz energy together with the Matsubara grid it used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergySum {
    /// J/m²
    pub energy: f64,
    pub grid: MatsubaraGrid,
}

/// Memoized ε(iξn) of one material at one temperature. Shared between
/// concurrent distance evaluations; values are pure so races only cost time.
pub(crate) struct Spectrum<'a> {
    model: &'a PermittivityModel,
    temperature: f64,
    values: Mutex<HashMap<usize, f64>>,
}

impl<'a> Spectrum<'a> {
    pub(crate) fn new(model: &'a PermittivityModel, temperature: f64) -> Self {
        Self { model, temperature, values: Mutex::new(HashMap::new()) }
    }

    fn at(&self, n: usize) -> Result<f64> {
        if let Some(v) = self.values.lock().expect("spectrum cache poisoned").get(&n) {
            return Ok(*v);
        }
        let xi_ev = rad_per_s_to_ev(matsubara_frequency(self.temperature, n));
        let v = eval_eps_imag(self.model, xi_ev)?;
        self.values.lock().expect("spectrum cache poisoned").insert(n, v);
        Ok(v)
    }
}

/// The three materials of a plate / fluid / plate stack at one temperature.
pub(crate) struct LayerStack<'a> {
    temperature: f64,
    first: Spectrum<'a>,
    second: Spectrum<'a>,
    medium: Spectrum<'a>,
    static_limits: [StaticLimit; 3],
}

impl<'a> LayerStack<'a> {
    pub(crate) fn new(
        temperature: f64,
        first: &'a PermittivityModel,
        second: &'a PermittivityModel,
        medium: &'a PermittivityModel,
    ) -> Result<Self> {
        check_temperature(temperature)?;
        if matches!(medium, PermittivityModel::IdealConductor) {
            return Err(Error::Domain("the gap medium cannot be an ideal conductor".into()));
        }
        Ok(Self {
            temperature,
            static_limits: [first.static_limit()?, second.static_limit()?, medium.static_limit()?],
            first: Spectrum::new(first, temperature),
            second: Spectrum::new(second, temperature),
            medium: Spectrum::new(medium, temperature),
        })
    }

    /// `∫₀^∞ k dk Σ_p ln(1 − r_p¹ r_p² e^{−2qd})` for Matsubara index `n`, in 1/m².
    fn matsubara_term(&self, n: usize, distance: f64, settings: &LifshitzSettings) -> Result<f64> {
        if n == 0 {
            return self.zero_frequency_term(distance, settings);
        }
        let xi = matsubara_frequency(self.temperature, n);
        let eps1 = self.first.at(n)?;
        let eps2 = self.second.at(n)?;
        let eps_m = self.medium.at(n)?;
        let xi_c2 = (xi / SPEED_OF_LIGHT).powi(2);
        let q0 = (eps_m * xi_c2).sqrt();
        let products = |q: f64| {
            let (tm1, te1) = reflection::from_medium_wavevector(eps1, eps_m, xi_c2, q);
            let (tm2, te2) = reflection::from_medium_wavevector(eps2, eps_m, xi_c2, q);
            [tm1 * tm2, te1 * te2]
        };
        wavevector_integral(q0, distance, products, settings.k_rel_tol)
    }

    fn zero_frequency_term(&self, distance: f64, settings: &LifshitzSettings) -> Result<f64> {
        let [first, second, medium] = self.static_limits;
        let plasma_wavenumber = |limit: StaticLimit| match (limit, settings.te_zero) {
            (StaticLimit::Metal { plasma_frequency }, TeZeroPrescription::Plasma) => {
                crate::constants::ev_to_rad_per_s(plasma_frequency) / SPEED_OF_LIGHT
            }
            _ => 0.0,
        };
        let tm = |layer: StaticLimit| static_tm(layer, medium);
        let omega_m = plasma_wavenumber(medium);
        let (tm1, tm2) = (tm(first), tm(second));
        let (om1, om2) = (plasma_wavenumber(first), plasma_wavenumber(second));
        let te = move |layer: StaticLimit, omega_l: f64, q: f64| {
            if layer == StaticLimit::IdealConductor {
                return -1.0;
            }
            if omega_l == omega_m {
                return 0.0;
            }
            // κ² = k² + Ω², with k² = q² − Ω_m²
            let kappa_l = (q * q - omega_m * omega_m + omega_l * omega_l).sqrt();
            (q - kappa_l) / (q + kappa_l)
        };
        let products = move |q: f64| [tm1 * tm2, te(first, om1, q) * te(second, om2, q)];
        wavevector_integral(omega_m, distance, products, settings.k_rel_tol)
    }
}

fn static_tm(layer: StaticLimit, medium: StaticLimit) -> f64 {
    let value = |l: StaticLimit| match l {
        StaticLimit::Dielectric(e) => Some(e),
        _ => None,
    };
    match (value(layer), value(medium)) {
        (Some(l), Some(m)) => (l - m) / (l + m),
        (None, Some(_)) => 1.0,
        (Some(_), None) => -1.0,
        (None, None) => 0.0,
    }
}

/// Integrates `q ln(1 − R_p(q) e^{−2qd})` over `q ∈ [q0, ∞)`, summed over
/// both polarizations, using `q = q0 + y/(2d)`, `y = t/(1 − t)`.
fn wavevector_integral<F>(q0: f64, distance: f64, products: F, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> [f64; 2],
{
    let scale = 0.5 / distance;
    let damping = (-2.0 * q0 * distance).exp();
    let integrand = |t: f64| {
        let one_minus = 1.0 - t;
        let y = t / one_minus;
        let q = q0 + y * scale;
        let decay = damping * (-y).exp();
        if decay == 0.0 {
            return 0.0;
        }
        let log_sum: f64 = products(q).iter().map(|r| (-r * decay).ln_1p()).sum();
        q * scale * log_sum / (one_minus * one_minus)
    };
    let r = integrate(integrand, 0.0, 1.0, Tolerance::relative(rel_tol))?;
    Ok(r.value)
}

/// Lifshitz free energy per unit area between two half-spaces, J/m².
///
/// `materials` is (first body, second body, gap medium).
pub fn plate_plate_energy(
    distance: f64,
    temperature: f64,
    materials: (&PermittivityModel, &PermittivityModel, &PermittivityModel),
    settings: &LifshitzSettings,
) -> Result<f64> {
    plate_plate_energy_detailed(distance, temperature, materials, settings).map(|s| s.energy)
}

/// Same as [`plate_plate_energy`], also reporting the Matsubara grid used.
pub fn plate_plate_energy_detailed(
    distance: f64,
    temperature: f64,
    materials: (&PermittivityModel, &PermittivityModel, &PermittivityModel),
    settings: &LifshitzSettings,
) -> Result<EnergySum> {
    let stack = LayerStack::new(temperature, materials.0, materials.1, materials.2)?;
    energy_sum(&stack, distance, settings)
}

pub(crate) fn energy_sum(stack: &LayerStack<'_>, distance: f64, settings: &LifshitzSettings) -> Result<EnergySum> {
    if !(distance > 0.0 && distance.is_finite()) {
        return Err(Error::Domain(format!("separation must be positive, got {distance} m")));
    }
    let mut sum = 0.5 * stack.matsubara_term(0, distance, settings)?;
    let mut small_run = 0;
    let mut n = 0;
    loop {
        match settings.fixed_terms {
            Some(n_max) if n >= n_max => break,
            Some(_) => {}
            None if small_run >= settings.consecutive_small => break,
            None => {}
        }
        n += 1;
        if n > settings.max_terms {
            return Err(Error::Numerical(format!(
                "Matsubara sum not converged after {} terms at d = {distance:e} m, T = {} K (running sum {sum:e})",
                settings.max_terms, stack.temperature
            )));
        }
        let term = stack.matsubara_term(n, distance, settings)?;
        sum += term;
        if term.abs() <= settings.matsubara_cutoff * sum.abs() {
            small_run += 1;
        } else {
            small_run = 0;
        }
    }
    let energy = BOLTZMANN * stack.temperature / (2.0 * PI) * sum;
    Ok(EnergySum { energy, grid: MatsubaraGrid { temperature: stack.temperature, n_max: n } })
}

pub(crate) fn warn_if_outside_pfa(radius: f64, distance: f64) {
    if distance / radius > 0.01 {
        log::warn!("d/R = {:.3e} exceeds 0.01; proximity-force approximation loses accuracy", distance / radius);
    }
}

/// Sphere–plate force in the proximity-force approximation, `F = 2πR·E(d)`.
pub fn pfa_sphere_plate_force(system: &SpherePlateSystem, distance: f64, settings: &LifshitzSettings) -> Result<f64> {
    warn_if_outside_pfa(system.sphere_radius, distance);
    let energy = plate_plate_energy(
        distance,
        system.temperature,
        (&system.sphere_material, &system.plate_material, &system.medium),
        settings,
    )?;
    Ok(2.0 * PI * system.sphere_radius * energy)
}
