//! Run configuration: a TOML file with optional sections, resolved against
//! the built-in defaults only when `--assume-defaults` is given.
//!
//! ```toml
//! [geometry]
//! sphere_radius_um = 19.9
//! temperature_k = 300.0
//!
//! [materials]
//! sphere = { kind = "drude", plasma_ev = 9.0, damping_ev = 0.035 }
//! plate = { kind = "drude", plasma_ev = 9.0, damping_ev = 0.035 }
//! medium = { kind = "ethanol" }
//!
//! [distances]
//! start_nm = 20.0
//! stop_nm = 100.0
//! count = 9
//! spacing = "linear"
//!
//! [ensemble]
//! manifest = "gold.toml"
//!
//! [output]
//! path = "force.csv"
//!
//! [numerics]
//! k_rel_tol = 1e-7
//! matsubara_cutoff = 1e-8
//! max_terms = 100000
//! te_zero = "drude"
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::dielectric::{ModelSpec, PermittivityModel};
use crate::error::{Error, Result};
use crate::lifshitz::{LifshitzSettings, TeZeroPrescription, DEFAULT_SPHERE_RADIUS, DEFAULT_TEMPERATURE};

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub geometry: GeometrySection,
    #[serde(default)]
    pub materials: MaterialsSection,
    pub distances: Option<DistanceGrid>,
    pub ensemble: Option<EnsembleSection>,
    #[serde(default)]
    pub output: OutputSection,
    #[serde(default)]
    pub numerics: NumericsSection,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySection {
    pub sphere_radius_um: Option<f64>,
    pub temperature_k: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialsSection {
    pub sphere: Option<ModelSpec>,
    pub plate: Option<ModelSpec>,
    pub medium: Option<ModelSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistanceGrid {
    pub start_nm: f64,
    pub stop_nm: f64,
    pub count: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

impl DistanceGrid {
    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::Config("distances.count must be >= 1".into()));
        }
        if !(self.start_nm > 0.0 && self.start_nm.is_finite()) {
            return Err(Error::Config(format!("distances.start_nm must be positive, got {}", self.start_nm)));
        }
        if self.count > 1 && !(self.stop_nm > self.start_nm && self.stop_nm.is_finite()) {
            return Err(Error::Config("distances.stop_nm must exceed distances.start_nm".into()));
        }
        Ok(())
    }

    /// Grid points in metres.
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start_nm / 1e9];
        }
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                let f = i as f64 / last;
                let nm = if i + 1 == self.count {
                    self.stop_nm
                } else {
                    match self.spacing {
                        Spacing::Linear => self.start_nm + f * (self.stop_nm - self.start_nm),
                        Spacing::Log => self.start_nm * (self.stop_nm / self.start_nm).powf(f),
                    }
                };
                nm / 1e9
            })
            .collect()
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleSection {
    pub manifest: PathBuf,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub path: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericsSection {
    pub k_rel_tol: Option<f64>,
    pub matsubara_cutoff: Option<f64>,
    pub max_terms: Option<usize>,
    pub te_zero: Option<String>,
}

/// A value together with whether it came from the built-in defaults.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sourced<T> {
    pub value: T,
    pub assumed: bool,
}

/// Fully resolved configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub sphere_radius_m: Sourced<f64>,
    pub temperature_k: Sourced<f64>,
    /// Absent when neither the config nor the defaults supply it; only
    /// `force-curve` needs the sphere and plate materials.
    pub sphere: Option<Sourced<ModelSpec>>,
    pub plate: Option<Sourced<ModelSpec>>,
    pub medium: Sourced<ModelSpec>,
    pub distances: Sourced<DistanceGrid>,
    pub ensemble_manifest: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub k_rel_tol: f64,
    pub matsubara_cutoff: f64,
    pub max_terms: usize,
    pub te_zero: String,
    #[serde(skip)]
    pub base_dir: PathBuf,
}

fn default_gold() -> ModelSpec {
    ModelSpec::Drude { plasma_ev: 9.0, damping_ev: 0.035 }
}

fn default_grid() -> DistanceGrid {
    DistanceGrid { start_nm: 20.0, stop_nm: 100.0, count: 9, spacing: Spacing::Linear }
}

fn pick<T>(value: Option<T>, default: impl FnOnce() -> T, assume: bool, key: &str) -> Result<Sourced<T>> {
    match value {
        Some(value) => Ok(Sourced { value, assumed: false }),
        None if assume => Ok(Sourced { value: default(), assumed: true }),
        None => Err(Error::Config(format!("missing `{key}` (give it in the config or pass --assume-defaults)"))),
    }
}

impl RunConfig {
    pub fn load(path: Option<&Path>, assume_defaults: bool) -> Result<Self> {
        let (file, base_dir) = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Error::Config(format!("cannot read config {}: {e}", p.display())))?;
                let base = p.parent().map(Path::to_path_buf).unwrap_or_default();
                (Self::parse_file(&text)?, base)
            }
            None => (ConfigFile::default(), PathBuf::new()),
        };
        Self::resolve(file, base_dir, assume_defaults)
    }

    pub fn parse_file(text: &str) -> Result<ConfigFile> {
        toml::from_str(text).map_err(|e| Error::Config(format!("invalid config: {e}")))
    }

    pub fn resolve(file: ConfigFile, base_dir: PathBuf, assume: bool) -> Result<Self> {
        let radius_um =
            pick(file.geometry.sphere_radius_um, || DEFAULT_SPHERE_RADIUS * 1e6, assume, "geometry.sphere_radius_um")?;
        let sphere_radius_m = Sourced { value: radius_um.value * 1e-6, assumed: radius_um.assumed };
        let temperature_k =
            pick(file.geometry.temperature_k, || DEFAULT_TEMPERATURE, assume, "geometry.temperature_k")?;
        if !(sphere_radius_m.value > 0.0 && temperature_k.value > 0.0) {
            return Err(Error::Config("sphere radius and temperature must be positive".into()));
        }
        let sphere = pick(file.materials.sphere, default_gold, assume, "materials.sphere").ok();
        let plate = pick(file.materials.plate, default_gold, assume, "materials.plate").ok();
        let medium = pick(file.materials.medium, || ModelSpec::Ethanol, assume, "materials.medium")?;
        let distances = pick(file.distances, default_grid, assume, "distances")?;
        distances.value.validate()?;

        let te_zero = file.numerics.te_zero.unwrap_or_else(|| "drude".into());
        parse_te_zero(&te_zero)?;
        let defaults = LifshitzSettings::default();
        let config = Self {
            sphere_radius_m,
            temperature_k,
            sphere,
            plate,
            medium,
            distances,
            ensemble_manifest: file.ensemble.map(|e| base_dir.join(e.manifest)),
            output: file.output.path.map(|p| base_dir.join(p)),
            k_rel_tol: file.numerics.k_rel_tol.unwrap_or(defaults.k_rel_tol),
            matsubara_cutoff: file.numerics.matsubara_cutoff.unwrap_or(defaults.matsubara_cutoff),
            max_terms: file.numerics.max_terms.unwrap_or(defaults.max_terms),
            te_zero,
            base_dir,
        };
        if !(config.k_rel_tol > 0.0 && config.matsubara_cutoff > 0.0 && config.max_terms > 0) {
            return Err(Error::Config("numerics tolerances and max_terms must be positive".into()));
        }
        config.check_referenced_files()?;
        Ok(config)
    }

    fn check_referenced_files(&self) -> Result<()> {
        let specs = [self.sphere.as_ref(), self.plate.as_ref(), Some(&self.medium)];
        for spec in specs.into_iter().flatten().map(|s| &s.value) {
            if let ModelSpec::Tabulated { path, .. } = spec {
                let full = self.base_dir.join(path);
                if !full.is_file() {
                    return Err(Error::Config(format!("optical data file {} does not exist", full.display())));
                }
            }
        }
        if let Some(m) = &self.ensemble_manifest {
            if !m.is_file() {
                return Err(Error::Config(format!("ensemble manifest {} does not exist", m.display())));
            }
        }
        Ok(())
    }

    pub fn settings(&self) -> LifshitzSettings {
        LifshitzSettings {
            k_rel_tol: self.k_rel_tol,
            matsubara_cutoff: self.matsubara_cutoff,
            max_terms: self.max_terms,
            te_zero: parse_te_zero(&self.te_zero).expect("validated at load"),
            ..LifshitzSettings::default()
        }
    }

    pub fn build_model(&self, spec: &ModelSpec) -> Result<PermittivityModel> {
        spec.build(&self.base_dir)
    }

    /// Sphere and plate specs, required for a single force curve.
    pub fn body_materials(&self) -> Result<(&Sourced<ModelSpec>, &Sourced<ModelSpec>)> {
        match (&self.sphere, &self.plate) {
            (Some(s), Some(p)) => Ok((s, p)),
            _ => Err(Error::Config(
                "missing `materials.sphere` or `materials.plate` (give them in the config or pass --assume-defaults)"
                    .into(),
            )),
        }
    }

    /// Canonical text used for the config hash.
    pub fn canonical(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }
}

fn parse_te_zero(s: &str) -> Result<TeZeroPrescription> {
    match s {
        "drude" => Ok(TeZeroPrescription::Drude),
        "plasma" => Ok(TeZeroPrescription::Plasma),
        other => Err(Error::Config(format!("numerics.te_zero must be \"drude\" or \"plasma\", got {other:?}"))),
    }
}
