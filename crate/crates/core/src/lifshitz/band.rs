use std::f64::consts::PI;

use rayon::prelude::*;

use super::{energy_sum, warn_if_outside_pfa, LayerStack, LifshitzSettings, SpherePlateSystem};
use crate::dielectric::{ModelEnsemble, PermittivityModel};
use crate::error::{Error, Result};

/// Force against distance for one material model.
#[derive(Debug, Clone, PartialEq)]
pub struct ForceCurve {
    distances: Vec<f64>,
    forces: Vec<f64>,
    model_label: String,
}

impl ForceCurve {
    pub fn new(distances: Vec<f64>, forces: Vec<f64>, model_label: impl Into<String>) -> Result<Self> {
        if distances.len() != forces.len() {
            return Err(Error::Input("distance and force lists differ in length".into()));
        }
        check_distances(&distances)?;
        Ok(Self { distances, forces, model_label: model_label.into() })
    }

    /// m
    pub fn distances(&self) -> &[f64] {
        &self.distances
    }

    /// N, negative for attraction.
    pub fn forces(&self) -> &[f64] {
        &self.forces
    }

    pub fn model_label(&self) -> &str {
        &self.model_label
    }
}

/// Per-distance envelope of an ensemble of force curves.
#[derive(Debug, Clone, PartialEq)]
pub struct ForceBand {
    pub distances: Vec<f64>,
    pub f_min: Vec<f64>,
    pub f_max: Vec<f64>,
    pub members: Vec<ForceCurve>,
}

impl ForceBand {
    /// `(f_max − f_min) / max(|f_min|, |f_max|)` at each distance.
    pub fn relative_width(&self) -> Vec<f64> {
        self.f_min
            .iter()
            .zip(&self.f_max)
            .map(|(lo, hi)| {
                let scale = lo.abs().max(hi.abs());
                if scale == 0.0 {
                    0.0
                } else {
                    (hi - lo) / scale
                }
            })
            .collect()
    }
}

/// Everything a band needs besides the ensemble, which supplies both the
/// sphere and the plate material.
#[derive(Debug, Clone, PartialEq)]
pub struct BandGeometry {
    pub sphere_radius: f64,
    pub temperature: f64,
    pub medium: PermittivityModel,
}

fn check_distances(distances: &[f64]) -> Result<()> {
    if distances.is_empty() {
        return Err(Error::Input("distance list is empty".into()));
    }
    if distances.iter().any(|d| !(*d > 0.0 && d.is_finite())) {
        return Err(Error::Input("distances must be positive".into()));
    }
    if distances.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Input("distances must be strictly increasing".into()));
    }
    Ok(())
}

/// PFA force at each distance; distances are evaluated in parallel and
/// returned in input order.
pub fn force_curve(system: &SpherePlateSystem, distances: &[f64], settings: &LifshitzSettings) -> Result<ForceCurve> {
    check_distances(distances)?;
    let stack = LayerStack::new(system.temperature(), &system.sphere_material, &system.plate_material, &system.medium)?;
    let radius = system.sphere_radius();
    let forces = distances
        .par_iter()
        .map(|&d| {
            warn_if_outside_pfa(radius, d);
            energy_sum(&stack, d, settings).map(|s| 2.0 * PI * radius * s.energy)
        })
        .collect::<Result<Vec<f64>>>()?;
    let label = if system.sphere_material == system.plate_material {
        system.sphere_material.label()
    } else {
        format!("{} / {}", system.sphere_material.label(), system.plate_material.label())
    };
    ForceCurve::new(distances.to_vec(), forces, label)
}

/// Force curves for every ensemble member (used for both sphere and plate)
/// and their per-distance min/max envelope.
pub fn force_band(
    ensemble: &ModelEnsemble,
    geometry: &BandGeometry,
    distances: &[f64],
    settings: &LifshitzSettings,
) -> Result<ForceBand> {
    check_distances(distances)?;
    if !(geometry.sphere_radius > 0.0) {
        return Err(Error::Input(format!("sphere radius must be positive, got {}", geometry.sphere_radius)));
    }
    let member_error = |index: usize, model: &PermittivityModel, source: Error| Error::Member {
        index,
        label: model.label(),
        source: Box::new(source),
    };
    let stacks = ensemble
        .members()
        .iter()
        .enumerate()
        .map(|(i, m)| LayerStack::new(geometry.temperature, m, m, &geometry.medium).map_err(|e| member_error(i, m, e)))
        .collect::<Result<Vec<_>>>()?;

    let jobs: Vec<(usize, f64)> = (0..stacks.len()).flat_map(|i| distances.iter().map(move |&d| (i, d))).collect();
    for &d in distances {
        warn_if_outside_pfa(geometry.sphere_radius, d);
    }
    let forces = jobs
        .par_iter()
        .map(|&(i, d)| {
            energy_sum(&stacks[i], d, settings)
                .map(|s| 2.0 * PI * geometry.sphere_radius * s.energy)
                .map_err(|e| member_error(i, &ensemble.members()[i], e))
        })
        .collect::<Result<Vec<f64>>>()?;

    let members = ensemble
        .members()
        .iter()
        .zip(forces.chunks(distances.len()))
        .map(|(m, f)| ForceCurve::new(distances.to_vec(), f.to_vec(), m.label()))
        .collect::<Result<Vec<_>>>()?;

    let mut f_min = vec![f64::INFINITY; distances.len()];
    let mut f_max = vec![f64::NEG_INFINITY; distances.len()];
    for curve in &members {
        for (j, &f) in curve.forces().iter().enumerate() {
            f_min[j] = f_min[j].min(f);
            f_max[j] = f_max[j].max(f);
        }
    }
    Ok(ForceBand { distances: distances.to_vec(), f_min, f_max, members })
}
