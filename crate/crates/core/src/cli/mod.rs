//! Command-line front end.
//!
//! Exit codes: 0 success, 2 configuration or input error, 3 data parse
//! error, 4 numerical non-convergence.

mod config;
mod output;

pub use config::{ConfigFile, DistanceGrid, RunConfig, Sourced, Spacing};
pub use output::{record_number, sci};

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corrections::{
    approach_speed_for_force, concentration_from_residue, debye_length, electrostatic_force, fluid_scaling,
    hydrodynamic_force, ChargeOrigin, ElectrostaticScenario, HydroScenario, IonicSolution, DEFAULT_DEBYE_TEMPERATURE,
    ETHANOL_DENSITY, ETHANOL_RESIDUE_FRACTION, ETHANOL_STATIC_PERMITTIVITY, ETHANOL_VISCOSITY, NACL_MOLAR_MASS,
};
use crate::dielectric::{load_manifest, PermittivityModel, StaticLimit};
use crate::error::{Error, Result};
use crate::lifshitz::{force_band, force_curve, BandGeometry, SpherePlateSystem, DEFAULT_SPHERE_RADIUS};
use crate::stats::{welch_t_test, SampleSummary};
use output::{band_csv, curves_csv, record, sha256_hex, sweep_csv, Header};

#[derive(Debug, Parser)]
#[command(name = "casimir", version, about = "Casimir-Lifshitz sphere-plate forces in fluids and related corrections")]
pub struct Cli {
    /// Fill anything not given with built-in defaults (R = 19.9 um, T = 300 K,
    /// gold Drude 9.0/0.035 eV, ethanol with static permittivity 24.3).
    #[arg(long, global = true)]
    pub assume_defaults: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sphere-plate Casimir force over a distance grid for one material model.
    ForceCurve(CurveArgs),
    /// Min/max force envelope over an ensemble of material models.
    ForceBand(BandArgs),
    /// Ideal-model electrostatic force, optionally Debye-screened.
    Electrostatic(ElectrostaticArgs),
    /// Scale an electrostatic force measured in air to the fluid.
    Scale(ScaleArgs),
    /// Debye screening length of a symmetric electrolyte.
    Debye(DebyeArgs),
    /// Salt concentration implied by an evaporation residue.
    Concentration(ConcentrationArgs),
    /// Lubrication drag on the approaching sphere.
    Hydro(HydroArgs),
    /// Welch two-sample t-test (two-sided).
    Ttest(TtestArgs),
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output CSV path; overrides `output.path`. Defaults to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BandArgs {
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Band CSV path; overrides `output.path`. Defaults to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Per-member curve CSV; defaults to `<output stem>.members.csv`.
    #[arg(long)]
    pub members_output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub sweep_start_nm: Option<f64>,
    #[arg(long)]
    pub sweep_stop_nm: Option<f64>,
    #[arg(long)]
    pub sweep_count: Option<usize>,
    #[arg(long)]
    pub sweep_log: bool,
    /// CSV path for sweep output; defaults to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl SweepArgs {
    fn grid(&self) -> Result<Option<DistanceGrid>> {
        match (self.sweep_start_nm, self.sweep_stop_nm, self.sweep_count) {
            (None, None, None) => Ok(None),
            (Some(start_nm), Some(stop_nm), Some(count)) => {
                let spacing = if self.sweep_log { Spacing::Log } else { Spacing::Linear };
                let g = DistanceGrid { start_nm, stop_nm, count, spacing };
                g.validate()?;
                Ok(Some(g))
            }
            _ => Err(Error::Input("a sweep needs --sweep-start-nm, --sweep-stop-nm and --sweep-count".into())),
        }
    }
}

#[derive(Debug, Args)]
pub struct ElectrostaticArgs {
    /// Sphere radius, um.
    #[arg(long = "R-um")]
    pub radius_um: Option<f64>,
    /// Residual potential difference, mV.
    #[arg(long = "V0", allow_hyphen_values = true)]
    pub potential_mv: f64,
    /// Static relative permittivity of the medium.
    #[arg(long)]
    pub eps: Option<f64>,
    /// Debye length, nm; omit for an unscreened medium.
    #[arg(long = "lambda-nm")]
    pub lambda_nm: Option<f64>,
    /// Separation, nm.
    #[arg(long = "d-nm")]
    pub d_nm: Option<f64>,
    #[command(flatten)]
    pub sweep: SweepArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OriginArg {
    WorkFunction,
    #[value(alias = "trapped-charge")]
    Trapped,
    ExternalField,
}

#[derive(Debug, Args)]
pub struct ScaleArgs {
    /// Force measured in air, N.
    #[arg(long = "F", allow_hyphen_values = true)]
    pub force_n: f64,
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long, value_enum)]
    pub origin: OriginArg,
}

#[derive(Debug, Args)]
pub struct DebyeArgs {
    /// Salt concentration, mol/L.
    #[arg(long)]
    pub c: f64,
    #[arg(long)]
    pub eps: Option<f64>,
    /// Temperature, K.
    #[arg(long = "T", default_value_t = DEFAULT_DEBYE_TEMPERATURE)]
    pub temperature: f64,
    #[arg(long, default_value_t = 1)]
    pub valence: u32,
}

#[derive(Debug, Args)]
pub struct ConcentrationArgs {
    /// Residue mass fraction (e.g. 3.6e-6 for 0.00036 %).
    #[arg(long)]
    pub residue: Option<f64>,
    /// Salt molar mass, g/mol.
    #[arg(long = "molar-mass-g", default_value_t = NACL_MOLAR_MASS * 1e3)]
    pub molar_mass_g: f64,
    /// Solvent density, kg/m^3.
    #[arg(long, default_value_t = ETHANOL_DENSITY)]
    pub density: f64,
    /// Also report the Debye length for this static permittivity.
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long = "T", default_value_t = DEFAULT_DEBYE_TEMPERATURE)]
    pub temperature: f64,
    #[arg(long, default_value_t = 1)]
    pub valence: u32,
}

#[derive(Debug, Args)]
pub struct HydroArgs {
    #[arg(long = "R-um")]
    pub radius_um: Option<f64>,
    /// Dynamic viscosity, Pa s.
    #[arg(long, default_value_t = ETHANOL_VISCOSITY)]
    pub eta: f64,
    /// Approach speed, nm/s.
    #[arg(long = "v-nm-s", conflicts_with = "force_pn")]
    pub speed_nm_s: Option<f64>,
    /// Solve for the approach speed giving this drag at --d-nm.
    #[arg(long = "force-pN", requires = "d_nm", allow_hyphen_values = true)]
    pub force_pn: Option<f64>,
    #[arg(long = "d-nm")]
    pub d_nm: Option<f64>,
    #[command(flatten)]
    pub sweep: SweepArgs,
}

#[derive(Debug, Args)]
pub struct TtestArgs {
    /// First sample, comma-separated observations.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "a_summary")]
    pub a: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "b_summary")]
    pub b: Option<Vec<f64>>,
    /// First sample as `n,mean,sd`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a_summary: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub b_summary: Option<Vec<f64>>,
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match run(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let assume = cli.assume_defaults;
    match &cli.command {
        Command::ForceCurve(a) => cmd_force_curve(a, assume, stdout, stderr),
        Command::ForceBand(a) => cmd_force_band(a, assume, stdout, stderr),
        Command::Electrostatic(a) => cmd_electrostatic(a, assume, stdout, stderr),
        Command::Scale(a) => cmd_scale(a, assume, stdout, stderr),
        Command::Debye(a) => cmd_debye(a, assume, stdout, stderr),
        Command::Concentration(a) => cmd_concentration(a, assume, stdout, stderr),
        Command::Hydro(a) => cmd_hydro(a, assume, stdout, stderr),
        Command::Ttest(a) => cmd_ttest(a, stdout),
    }
}

fn write_text(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io { path: p.display().to_string(), source }),
        None => stdout.write_all(text.as_bytes()).map_err(|source| Error::Io { path: "<stdout>".into(), source }),
    }
}

fn write_line(stdout: &mut dyn Write, line: &str) -> Result<()> {
    writeln!(stdout, "{line}").map_err(|source| Error::Io { path: "<stdout>".into(), source })
}

fn announce(stderr: &mut dyn Write, assumed: &[String]) {
    if !assumed.is_empty() {
        let _ = writeln!(stderr, "ASSUMING DEFAULTS: {}", assumed.join(", "));
    }
}

fn static_permittivity_text(model: &PermittivityModel) -> String {
    match model.static_limit() {
        Ok(StaticLimit::Dielectric(e)) => record_number(e),
        Ok(_) => "inf".into(),
        Err(_) => "unknown".into(),
    }
}

fn tagged<T>(key: &str, value: &Sourced<T>, shown: String) -> String {
    if value.assumed {
        format!("{key}={shown} (ASSUMED built-in default)")
    } else {
        format!("{key}={shown}")
    }
}

fn physics_header(command: &str, cfg: &RunConfig, medium: &PermittivityModel, assumed: &mut Vec<String>) -> Header {
    let mut h = Header::new(command, &sha256_hex(&cfg.canonical()));
    let r = &cfg.sphere_radius_m;
    h.push(tagged("sphere_radius_m", r, sci(r.value)));
    if r.assumed {
        h.push(
            "assumption: sphere radius 19.9 um taken from the standard experimental configuration, not measured here",
        );
        assumed.push(format!("R = {} um", record_number(r.value * 1e6)));
    }
    let t = &cfg.temperature_k;
    h.push(tagged("temperature_K", t, record_number(t.value)));
    if t.assumed {
        assumed.push(format!("T = {} K", record_number(t.value)));
    }
    h.push(tagged("medium", &cfg.medium, medium.label()));
    h.push(format!("medium_static_eps={}", static_permittivity_text(medium)));
    if cfg.medium.assumed {
        assumed.push(format!("medium = ethanol (static eps {})", static_permittivity_text(medium)));
    }
    h.push(format!("te_zero_prescription={}", cfg.te_zero));
    h.push(format!(
        "numerics: k_rel_tol={} matsubara_cutoff={} max_terms={}",
        record_number(cfg.k_rel_tol),
        record_number(cfg.matsubara_cutoff),
        cfg.max_terms
    ));
    let points = cfg.distances.value.points();
    let d_max = points.last().copied().unwrap_or_default();
    h.push(tagged(
        "distances_nm",
        &cfg.distances,
        format!("{}..{} ({} points)", record_number(points[0] * 1e9), record_number(d_max * 1e9), points.len()),
    ));
    h.push("force model: proximity-force approximation F = 2 pi R E_pp(d); Lifshitz free energy at finite T");
    h.push("sign convention: negative force = attraction; distance in nm, force in pN");
    let ratio = d_max / r.value;
    if ratio > 0.01 {
        h.push(format!("warning: d/R up to {} exceeds 0.01, PFA accuracy degrades", record_number(ratio)));
    }
    h
}

pub fn cmd_force_curve(args: &CurveArgs, assume: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let cfg = RunConfig::load(args.config.as_deref(), assume)?;
    let (sphere_spec, plate_spec) = cfg.body_materials()?;
    let sphere = cfg.build_model(&sphere_spec.value)?;
    let plate = cfg.build_model(&plate_spec.value)?;
    let medium = cfg.build_model(&cfg.medium.value)?;

    let mut assumed = Vec::new();
    let mut header = physics_header("force-curve", &cfg, &medium, &mut assumed);
    header.push(tagged("sphere_material", sphere_spec, sphere.label()));
    header.push(tagged("plate_material", plate_spec, plate.label()));
    if sphere_spec.assumed || plate_spec.assumed {
        assumed.push("gold Drude wp = 9.0 eV, gamma = 0.035 eV".into());
    }
    announce(stderr, &assumed);

    let system = SpherePlateSystem::new(cfg.sphere_radius_m.value, cfg.temperature_k.value, sphere, plate, medium)?;
    let curve = force_curve(&system, &cfg.distances.value.points(), &cfg.settings())?;
    let path = args.output.as_deref().or(cfg.output.as_deref());
    write_text(path, &curves_csv(&header, &[curve]), stdout)
}

pub fn cmd_force_band(args: &BandArgs, assume: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let cfg = RunConfig::load(args.config.as_deref(), assume)?;
    let manifest = cfg
        .ensemble_manifest
        .as_deref()
        .ok_or_else(|| Error::Config("force-band needs `[ensemble] manifest = ...` in the config".into()))?;
    let ensemble = load_manifest(manifest)?;
    let medium = cfg.build_model(&cfg.medium.value)?;

    let mut assumed = Vec::new();
    let mut header = physics_header("force-band", &cfg, &medium, &mut assumed);
    header.push(format!("ensemble={} ({} members)", ensemble.label(), ensemble.members().len()));
    for (i, m) in ensemble.members().iter().enumerate() {
        header.push(format!("member[{i}]={}", m.label()));
    }
    announce(stderr, &assumed);

    let geometry =
        BandGeometry { sphere_radius: cfg.sphere_radius_m.value, temperature: cfg.temperature_k.value, medium };
    let band = force_band(&ensemble, &geometry, &cfg.distances.value.points(), &cfg.settings())?;

    let band_path = args.output.as_deref().or(cfg.output.as_deref());
    write_text(band_path, &band_csv(&header, &band), stdout)?;

    let members_path = args.members_output.clone().or_else(|| {
        band_path.map(|p| {
            let stem = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "band".into());
            p.with_file_name(format!("{stem}.members.csv"))
        })
    });
    match members_path {
        Some(p) => write_text(Some(&p), &curves_csv(&header, &band.members), stdout),
        None => {
            let _ = writeln!(stderr, "note: member curves not written (give --output or --members-output)");
            Ok(())
        }
    }
}

fn required(
    value: Option<f64>,
    default: f64,
    assume: bool,
    flag: &str,
    what: &str,
    assumed: &mut Vec<String>,
) -> Result<f64> {
    match value {
        Some(v) => Ok(v),
        None if assume => {
            assumed.push(format!("{what} = {}", record_number(default)));
            Ok(default)
        }
        None => Err(Error::Input(format!("missing {flag} (or pass --assume-defaults)"))),
    }
}

pub fn cmd_electrostatic(
    args: &ElectrostaticArgs,
    assume: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<()> {
    let mut assumed = Vec::new();
    let radius_um = required(args.radius_um, DEFAULT_SPHERE_RADIUS * 1e6, assume, "--R-um", "R_um", &mut assumed)?;
    let eps = required(args.eps, ETHANOL_STATIC_PERMITTIVITY, assume, "--eps", "eps", &mut assumed)?;
    announce(stderr, &assumed);
    let scen =
        ElectrostaticScenario::new(radius_um * 1e-6, args.potential_mv * 1e-3, eps, args.lambda_nm.map(|l| l * 1e-9))?;
    let lambda = args.lambda_nm.map_or("none".into(), record_number);
    let inputs = vec![
        ("R_um", record_number(radius_um)),
        ("V0_mV", record_number(args.potential_mv)),
        ("eps", record_number(eps)),
        ("lambda_nm", lambda),
    ];

    if let Some(grid) = args.sweep.grid()? {
        let rows = grid
            .points()
            .into_iter()
            .map(|d| electrostatic_force(&scen, d).map(|f| (d * 1e9, f * 1e12)))
            .collect::<Result<Vec<_>>>()?;
        let mut h = Header::new("electrostatic", &sha256_hex(&record(&inputs)));
        h.push(record(&inputs));
        h.push("estimate: ideal-model sphere-plate electrostatics, not a measurement prediction");
        h.push("sign convention: negative force = attraction");
        return write_text(args.sweep.output.as_deref(), &sweep_csv(&h, ("distance_nm", "force_pN"), &rows), stdout);
    }

    let d_nm = args.d_nm.ok_or_else(|| Error::Input("give --d-nm or a sweep".into()))?;
    let f = electrostatic_force(&scen, d_nm * 1e-9)?;
    let mut fields =
        vec![("force_N", record_number(f)), ("force_pN", record_number(f * 1e12)), ("d_nm", record_number(d_nm))];
    fields.extend(inputs);
    fields.push(("estimate", "ideal-model".into()));
    write_line(stdout, &record(&fields))
}

pub fn cmd_scale(args: &ScaleArgs, assume: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let mut assumed = Vec::new();
    let eps = required(args.eps, ETHANOL_STATIC_PERMITTIVITY, assume, "--eps", "eps", &mut assumed)?;
    announce(stderr, &assumed);
    let (origin, name) = match args.origin {
        OriginArg::WorkFunction => (ChargeOrigin::WorkFunction, "work-function"),
        OriginArg::Trapped => (ChargeOrigin::TrappedChargeOrExternalField, "trapped"),
        OriginArg::ExternalField => (ChargeOrigin::TrappedChargeOrExternalField, "external-field"),
    };
    let f = fluid_scaling(args.force_n, eps, origin)?;
    write_line(
        stdout,
        &record(&[
            ("force_N", record_number(f)),
            ("force_pN", record_number(f * 1e12)),
            ("force_air_N", record_number(args.force_n)),
            ("eps", record_number(eps)),
            ("origin", name.into()),
        ]),
    )
}

pub fn cmd_debye(args: &DebyeArgs, assume: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let mut assumed = Vec::new();
    let eps = required(args.eps, ETHANOL_STATIC_PERMITTIVITY, assume, "--eps", "eps", &mut assumed)?;
    announce(stderr, &assumed);
    let l = debye_length(args.c, args.valence, eps, args.temperature)?;
    write_line(
        stdout,
        &record(&[
            ("lambda_nm", record_number(l * 1e9)),
            ("lambda_m", record_number(l)),
            ("c_M", record_number(args.c)),
            ("valence", args.valence.to_string()),
            ("eps", record_number(eps)),
            ("T_K", record_number(args.temperature)),
        ]),
    )
}

pub fn cmd_concentration(
    args: &ConcentrationArgs,
    assume: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<()> {
    let mut assumed = Vec::new();
    let residue = required(args.residue, ETHANOL_RESIDUE_FRACTION, assume, "--residue", "residue", &mut assumed)?;
    announce(stderr, &assumed);
    let sol = IonicSolution {
        residue_mass_fraction: residue,
        salt_molar_mass: args.molar_mass_g * 1e-3,
        solvent_density: args.density,
        ion_valence: args.valence,
        eps_static: args.eps.unwrap_or(ETHANOL_STATIC_PERMITTIVITY),
        temperature: args.temperature,
    };
    let c = concentration_from_residue(&sol)?;
    let mut fields = vec![
        ("c_M", record_number(c)),
        ("c_uM", record_number(c * 1e6)),
        ("residue", record_number(residue)),
        ("molar_mass_g", record_number(args.molar_mass_g)),
        ("density_kg_m3", record_number(args.density)),
    ];
    if let Some(eps) = args.eps {
        let l = debye_length(c, args.valence, eps, args.temperature)?;
        fields.push(("lambda_nm", record_number(l * 1e9)));
        fields.push(("eps", record_number(eps)));
        fields.push(("T_K", record_number(args.temperature)));
    }
    write_line(stdout, &record(&fields))
}

pub fn cmd_hydro(args: &HydroArgs, assume: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let mut assumed = Vec::new();
    let radius_um = required(args.radius_um, DEFAULT_SPHERE_RADIUS * 1e6, assume, "--R-um", "R_um", &mut assumed)?;
    announce(stderr, &assumed);
    let radius = radius_um * 1e-6;
    let speed = match (args.speed_nm_s, args.force_pn, args.d_nm) {
        (Some(v), _, _) => v * 1e-9,
        (None, Some(f), Some(d)) => approach_speed_for_force(radius, args.eta, d * 1e-9, f * 1e-12)?,
        _ => return Err(Error::Input("give --v-nm-s, or --force-pN with --d-nm".into())),
    };
    let scen = HydroScenario::new(radius, args.eta, speed)?;
    let inputs = vec![
        ("v_nm_s", record_number(speed * 1e9)),
        ("R_um", record_number(radius_um)),
        ("eta_Pa_s", record_number(args.eta)),
    ];

    if let Some(grid) = args.sweep.grid()? {
        let rows = grid
            .points()
            .into_iter()
            .map(|d| hydrodynamic_force(&scen, d).map(|f| (d * 1e9, f * 1e12)))
            .collect::<Result<Vec<_>>>()?;
        let mut h = Header::new("hydro", &sha256_hex(&record(&inputs)));
        h.push(record(&inputs));
        h.push("lubrication drag 6 pi eta R^2 v / d; positive = opposing the approach");
        return write_text(args.sweep.output.as_deref(), &sweep_csv(&h, ("distance_nm", "force_pN"), &rows), stdout);
    }

    let d_nm = args.d_nm.ok_or_else(|| Error::Input("give --d-nm or a sweep".into()))?;
    let f = hydrodynamic_force(&scen, d_nm * 1e-9)?;
    let mut fields =
        vec![("force_N", record_number(f)), ("force_pN", record_number(f * 1e12)), ("d_nm", record_number(d_nm))];
    fields.extend(inputs);
    write_line(stdout, &record(&fields))
}

fn summary_from(raw: &Option<Vec<f64>>, triple: &Option<Vec<f64>>, name: &str) -> Result<SampleSummary> {
    match (raw, triple) {
        (Some(values), None) => SampleSummary::from_observations(values),
        (None, Some(t)) => match t.as_slice() {
            &[n, mean, sd] if n.fract() == 0.0 && n >= 0.0 => SampleSummary::new(n as usize, mean, sd),
            _ => Err(Error::Input(format!("--{name}-summary expects n,mean,sd with integer n"))),
        },
        _ => Err(Error::Input(format!("give exactly one of --{name} or --{name}-summary"))),
    }
}

pub fn cmd_ttest(args: &TtestArgs, stdout: &mut dyn Write) -> Result<()> {
    let a = summary_from(&args.a, &args.a_summary, "a")?;
    let b = summary_from(&args.b, &args.b_summary, "b")?;
    let r = welch_t_test(&a, &b)?;
    write_line(
        stdout,
        &record(&[
            ("t", record_number(r.t_statistic)),
            ("df", record_number(r.degrees_of_freedom)),
            ("p", record_number(r.p_two_sided)),
            ("n_a", a.n().to_string()),
            ("mean_a", record_number(a.mean())),
            ("sd_a", record_number(a.std_dev())),
            ("n_b", b.n().to_string()),
            ("mean_b", record_number(b.mean())),
            ("sd_b", record_number(b.std_dev())),
        ]),
    )
}
