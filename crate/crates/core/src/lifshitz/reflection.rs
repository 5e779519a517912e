use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};

/// Fresnel coefficients `(r_TM, r_TE)` of a half-space seen from the gap
/// medium at imaginary frequency `xi` (rad/s) and transverse wavevector `k` (1/m).
///
/// An infinite `eps_layer` stands for an ideal conductor and gives `(1, −1)`.
pub fn reflection_coeffs(eps_layer: f64, eps_medium: f64, xi: f64, k: f64) -> Result<(f64, f64)> {
    if !(xi >= 0.0 && k >= 0.0) || !xi.is_finite() || !k.is_finite() {
        return Err(Error::Domain(format!("need finite xi >= 0 and k >= 0, got xi = {xi}, k = {k}")));
    }
    if xi == 0.0 && k == 0.0 {
        return Err(Error::Domain("reflection undefined at xi = k = 0".into()));
    }
    if !(eps_layer >= 1.0) {
        return Err(Error::Domain(format!("layer permittivity must be >= 1, got {eps_layer}")));
    }
    if !(eps_medium >= 1.0 && eps_medium.is_finite()) {
        return Err(Error::Domain(format!("medium permittivity must be finite and >= 1, got {eps_medium}")));
    }
    let xi_c2 = (xi / SPEED_OF_LIGHT).powi(2);
    let q = (eps_medium * xi_c2 + k * k).sqrt();
    Ok(from_medium_wavevector(eps_layer, eps_medium, xi_c2, q))
}

/// Same coefficients parameterized by the medium's normal wavevector
/// `q = √(ε_m ξ²/c² + k²)`; the layer's is `κ = √(q² + (ε_l − ε_m) ξ²/c²)`.
pub(crate) fn from_medium_wavevector(eps_layer: f64, eps_medium: f64, xi_c2: f64, q: f64) -> (f64, f64) {
    if eps_layer.is_infinite() {
        return (1.0, -1.0);
    }
    let kappa = (q * q + (eps_layer - eps_medium) * xi_c2).sqrt();
    let tm = (eps_layer * q - eps_medium * kappa) / (eps_layer * q + eps_medium * kappa);
    let te = (q - kappa) / (q + kappa);
    (tm, te)
}
