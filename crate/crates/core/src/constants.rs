//! Physical constants (CODATA 2018 exact/recommended values) and unit conversions.
//!
//! Energies are carried in eV throughout the dielectric code; the Lifshitz
//! sums work in rad/s. All conversions between the two go through here.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Elementary charge, C.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// Avogadro constant, 1/mol.
pub const AVOGADRO: f64 = 6.022_140_76e23;
/// Vacuum permittivity, F/m.
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Angular frequency (rad/s) corresponding to a photon energy in eV.
pub fn ev_to_rad_per_s(energy_ev: f64) -> f64 {
    energy_ev * ELEMENTARY_CHARGE / HBAR
}

/// Photon energy in eV corresponding to an angular frequency in rad/s.
pub fn rad_per_s_to_ev(omega: f64) -> f64 {
    omega * HBAR / ELEMENTARY_CHARGE
}

/// Ideal-conductor Casimir energy per unit area at zero temperature, J/m².
///
/// `-π² ħ c / (720 d³)`
pub fn ideal_casimir_energy(distance: f64) -> f64 {
    -std::f64::consts::PI.powi(2) * HBAR * SPEED_OF_LIGHT / (720.0 * distance.powi(3))
}
