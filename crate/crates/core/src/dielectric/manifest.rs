//! Model specifications as they appear in configuration files and ensemble
//! manifests (TOML).
//!
//! ```toml
//! label = "gold"
//!
//! [[members]]
//! kind = "drude"
//! plasma_ev = 9.0
//! damping_ev = 0.035
//!
//! [[members]]
//! kind = "tabulated"
//! path = "palik_gold.txt"
//! label = "Palik"
//! extension = { plasma_ev = 9.0, damping_ev = 0.035 }
//! ```
//!
//! Relative data paths are resolved against the directory of the file that
//! names them.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{parse_optics_file, DrudeModel, ModelEnsemble, OscillatorModel, OscillatorTerm, PermittivityModel};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrudeSpec {
    pub plasma_ev: f64,
    pub damping_ev: f64,
}

impl DrudeSpec {
    pub fn build(&self) -> Result<DrudeModel> {
        DrudeModel::new(self.plasma_ev, self.damping_ev)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelSpec {
    Drude {
        plasma_ev: f64,
        damping_ev: f64,
    },
    Tabulated {
        path: PathBuf,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        extension: Option<DrudeSpec>,
    },
    /// `terms = [[strength, resonance_ev], ...]`
    Oscillator {
        terms: Vec<[f64; 2]>,
    },
    Ethanol,
    Vacuum,
    IdealConductor,
}

impl ModelSpec {
    pub fn build(&self, base_dir: &Path) -> Result<PermittivityModel> {
        Ok(match self {
            ModelSpec::Drude { plasma_ev, damping_ev } => {
                PermittivityModel::Drude(DrudeModel::new(*plasma_ev, *damping_ev)?)
            }
            ModelSpec::Tabulated { path, label, extension } => {
                let full = base_dir.join(path);
                let content = std::fs::read_to_string(&full)
                    .map_err(|e| Error::Config(format!("cannot read optical data file {}: {e}", full.display())))?;
                let extension = extension.as_ref().map(DrudeSpec::build).transpose()?;
                let label = label
                    .clone()
                    .unwrap_or_else(|| full.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
                let table = parse_optics_file(&content).map_err(|e| match e {
                    Error::Parse { line, message } => {
                        Error::Parse { line, message: format!("{}: {message}", full.display()) }
                    }
                    Error::Data(m) => Error::Data(format!("{}: {m}", full.display())),
                    other => other,
                })?;
                PermittivityModel::Tabulated(table.with_label(label).with_extension(extension))
            }
            ModelSpec::Oscillator { terms } => PermittivityModel::Oscillator(OscillatorModel::new(
                terms.iter().map(|&[strength, resonance]| OscillatorTerm { strength, resonance }).collect(),
            )?),
            ModelSpec::Ethanol => PermittivityModel::Oscillator(OscillatorModel::ethanol()),
            ModelSpec::Vacuum => PermittivityModel::Vacuum,
            ModelSpec::IdealConductor => PermittivityModel::IdealConductor,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestFile {
    pub label: String,
    pub members: Vec<ModelSpec>,
}

impl ManifestFile {
    pub fn parse(content: &str) -> Result<Self> {
        toml::from_str(content).map_err(|e| Error::Config(format!("invalid ensemble manifest: {e}")))
    }

    pub fn build(&self, base_dir: &Path) -> Result<ModelEnsemble> {
        let members = self.members.iter().map(|m| m.build(base_dir)).collect::<Result<Vec<_>>>()?;
        ModelEnsemble::new(self.label.clone(), members)
    }
}

/// Reads an ensemble manifest and every data file it references.
pub fn load_manifest(path: &Path) -> Result<ModelEnsemble> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read ensemble manifest {}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    ManifestFile::parse(&content)?.build(base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_with_table() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("au.txt"), "# energy n k\n1.0 0.2 5.0\n2.0 0.3 3.0\n").unwrap();
        let manifest = r#"
label = "gold"

[[members]]
kind = "drude"
plasma_ev = 9.0
damping_ev = 0.035

[[members]]
kind = "tabulated"
path = "au.txt"
label = "Palik"
extension = { plasma_ev = 8.4, damping_ev = 0.02 }
"#;
        let path = dir.path().join("gold.toml");
        std::fs::write(&path, manifest).unwrap();
        let ens = load_manifest(&path).unwrap();
        assert_eq!(ens.label(), "gold");
        assert_eq!(ens.members().len(), 2);
        match &ens.members()[1] {
            PermittivityModel::Tabulated(t) => {
                assert_eq!(t.source_label(), "Palik");
                assert_eq!(t.points()[0].eps2, 2.0);
                assert_eq!(t.low_energy_extension().unwrap().plasma_frequency(), 8.4);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_data_file_is_config_error() {
        let spec = ModelSpec::Tabulated { path: "nope.txt".into(), label: None, extension: None };
        assert!(matches!(spec.build(Path::new("/nonexistent")), Err(Error::Config(_))));
    }

    #[test]
    fn empty_and_unknown_manifests() {
        let m = ManifestFile::parse("label = \"x\"\nmembers = []").unwrap();
        assert!(m.build(Path::new(".")).is_err());
        assert!(ManifestFile::parse("label = \"x\"\n[[members]]\nkind = \"plasma\"").is_err());
    }

    #[test]
    fn unit_variants_parse() {
        let m = ManifestFile::parse(
            "label = \"m\"\n[[members]]\nkind = \"ethanol\"\n[[members]]\nkind = \"ideal_conductor\"\n\
             [[members]]\nkind = \"oscillator\"\nterms = [[1.0, 2.0]]",
        )
        .unwrap();
        let e = m.build(Path::new(".")).unwrap();
        assert_eq!(e.members()[1], PermittivityModel::IdealConductor);
    }
}
