use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use casimir::constants::ideal_casimir_energy;

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn field(record: &str, key: &str) -> f64 {
    record
        .split_whitespace()
        .find_map(|kv| kv.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {record}"))
        .parse()
        .unwrap()
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().filter(|l| !l.starts_with('#')).skip(1).map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

fn write_config(dir: &Path, body: &str) -> String {
    let path = dir.join("run.toml");
    fs::write(&path, body).unwrap();
    path.display().to_string()
}

const GEOMETRY: &str = "[geometry]\nsphere_radius_um = 19.9\ntemperature_k = 300.0\n";

#[test]
fn zero_contrast_gives_zero_forces() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        &format!(
            "{GEOMETRY}[materials]\nsphere = {{ kind = \"ethanol\" }}\nplate = {{ kind = \"ethanol\" }}\n\
             medium = {{ kind = \"ethanol\" }}\n[distances]\nstart_nm = 20\nstop_nm = 100\ncount = 5\n"
        ),
    );
    let out = casimir(&["force-curve", "--config", &cfg]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = data_rows(&stdout(&out));
    assert_eq!(rows.len(), 5);
    for row in rows {
        assert_eq!(row[1].parse::<f64>().unwrap(), 0.0);
    }
}

#[test]
fn ideal_conductor_row_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "[geometry]\nsphere_radius_um = 19.9\ntemperature_k = 1.0\n[materials]\n\
         sphere = { kind = \"ideal_conductor\" }\nplate = { kind = \"ideal_conductor\" }\nmedium = { kind = \"vacuum\" }\n\
         [distances]\nstart_nm = 100\nstop_nm = 100\ncount = 1\n",
    );
    let out = casimir(&["force-curve", "--config", &cfg]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = data_rows(&stdout(&out));
    let f_pn: f64 = rows[0][1].parse().unwrap();
    let expected = 2.0 * std::f64::consts::PI * 19.9e-6 * ideal_casimir_energy(100e-9) * 1e12;
    assert!((f_pn / expected - 1.0).abs() < 0.01, "{f_pn} vs {expected}");
}

#[test]
fn default_gold_ethanol_run_has_forty_nm_row() {
    let out = casimir(&["--assume-defaults", "force-curve"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("ASSUMING DEFAULTS"));
    assert!(text.starts_with("# casimir "));
    assert!(text.contains("config_sha256="));
    assert!(text.contains("ASSUMED"));
    assert!(text.contains("te_zero_prescription=drude"));
    let row = data_rows(&text).into_iter().find(|r| r[0].parse::<f64>().unwrap() == 40.0).expect("40 nm row");
    let f: f64 = row[1].parse().unwrap();
    assert!(f < 0.0);
    assert!(row[2].contains("drude"));
}

#[test]
fn missing_config_sections_without_defaults_is_exit_2() {
    let out = casimir(&["force-curve"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("assume-defaults"));
}

#[test]
fn band_from_single_member_is_degenerate_and_writes_members() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("one.toml"),
        "label = \"one\"\n[[members]]\nkind = \"drude\"\nplasma_ev = 9.0\ndamping_ev = 0.035\n",
    )
    .unwrap();
    let cfg = write_config(
        dir.path(),
        &format!(
            "{GEOMETRY}[materials]\nmedium = {{ kind = \"ethanol\" }}\n[distances]\nstart_nm = 20\nstop_nm = 100\ncount = 3\n\
             [ensemble]\nmanifest = \"one.toml\"\n[output]\npath = \"band.csv\"\n"
        ),
    );
    let out = casimir(&["force-band", "--config", &cfg]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let band = fs::read_to_string(dir.path().join("band.csv")).unwrap();
    let members = fs::read_to_string(dir.path().join("band.members.csv")).unwrap();
    assert!(band.starts_with('#') && members.starts_with('#'));
    for row in data_rows(&band) {
        assert_eq!(row[1], row[2]);
    }
    assert_eq!(data_rows(&members).len(), 3);
}

#[test]
fn band_from_two_drude_members_has_width_everywhere() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("two.toml"),
        "label = \"two\"\n[[members]]\nkind = \"drude\"\nplasma_ev = 8.4\ndamping_ev = 0.035\n\
         [[members]]\nkind = \"drude\"\nplasma_ev = 9.0\ndamping_ev = 0.035\n",
    )
    .unwrap();
    let cfg = write_config(
        dir.path(),
        &format!(
            "{GEOMETRY}[materials]\nmedium = {{ kind = \"ethanol\" }}\n[distances]\nstart_nm = 20\nstop_nm = 100\ncount = 5\n\
             [ensemble]\nmanifest = \"two.toml\"\n"
        ),
    );
    let members = dir.path().join("m.csv");
    let out = casimir(&["force-band", "--config", &cfg, "--members-output", members.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    for row in data_rows(&stdout(&out)) {
        let lo: f64 = row[1].parse().unwrap();
        let hi: f64 = row[2].parse().unwrap();
        assert!(lo < hi, "{row:?}");
    }
    assert_eq!(data_rows(&fs::read_to_string(members).unwrap()).len(), 10);
}

#[test]
fn band_without_manifest_is_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), &format!("{GEOMETRY}[materials]\nmedium = {{ kind = \"ethanol\" }}\n[distances]\nstart_nm = 20\nstop_nm = 40\ncount = 2\n"));
    assert_eq!(casimir(&["force-band", "--config", &cfg]).status.code(), Some(2));
}

#[test]
fn malformed_optics_table_is_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "1.0 2.0\n2.0 oops\n").unwrap();
    let cfg = write_config(
        dir.path(),
        &format!(
            "{GEOMETRY}[materials]\nsphere = {{ kind = \"tabulated\", path = \"bad.txt\" }}\n\
             plate = {{ kind = \"drude\", plasma_ev = 9.0, damping_ev = 0.035 }}\nmedium = {{ kind = \"ethanol\" }}\n\
             [distances]\nstart_nm = 20\nstop_nm = 40\ncount = 2\n"
        ),
    );
    let out = casimir(&["force-curve", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn missing_data_file_is_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        &format!(
            "{GEOMETRY}[materials]\nsphere = {{ kind = \"tabulated\", path = \"absent.txt\" }}\n\
             plate = {{ kind = \"ethanol\" }}\nmedium = {{ kind = \"vacuum\" }}\n[distances]\nstart_nm = 20\nstop_nm = 40\ncount = 2\n"
        ),
    );
    assert_eq!(casimir(&["force-curve", "--config", &cfg]).status.code(), Some(2));
}

#[test]
fn term_cap_is_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        &format!(
            "{GEOMETRY}[materials]\nsphere = {{ kind = \"drude\", plasma_ev = 9.0, damping_ev = 0.035 }}\n\
             plate = {{ kind = \"drude\", plasma_ev = 9.0, damping_ev = 0.035 }}\nmedium = {{ kind = \"ethanol\" }}\n\
             [distances]\nstart_nm = 20\nstop_nm = 40\ncount = 2\n[numerics]\nmax_terms = 3\n"
        ),
    );
    assert_eq!(casimir(&["force-curve", "--config", &cfg]).status.code(), Some(4));
}

#[test]
fn debye_record() {
    let out = casimir(&["debye", "--c", "48.6e-6", "--eps", "24.3", "--T", "298"]);
    assert!(out.status.success());
    assert!((field(&stdout(&out), "lambda_nm") - 24.0).abs() <= 0.5);
}

#[test]
fn electrostatic_zero_potential_record() {
    let out = casimir(&["electrostatic", "--V0", "0", "--R-um", "19.9", "--eps", "24.3", "--d-nm", "40"]);
    let text = stdout(&out);
    assert!(text.starts_with("force_N=0 "), "{text}");
    assert!(text.contains("estimate=ideal-model"));
}

#[test]
fn electrostatic_sweep_is_csv() {
    let out = casimir(&[
        "electrostatic",
        "--V0",
        "130",
        "--R-um",
        "19.9",
        "--eps",
        "24.3",
        "--lambda-nm",
        "24",
        "--sweep-start-nm",
        "20",
        "--sweep-stop-nm",
        "100",
        "--sweep-count",
        "5",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with('#'));
    assert!(text.contains("distance_nm,force_pN"));
    assert_eq!(data_rows(&text).len(), 5);
}

#[test]
fn scale_trapped_record() {
    let out = casimir(&["scale", "--F", "-243e-12", "--eps", "24.3", "--origin", "trapped"]);
    assert!(stdout(&out).starts_with("force_N=-1.0e-11 "), "{}", stdout(&out));
}

#[test]
fn scale_rejects_non_positive_eps() {
    assert_eq!(casimir(&["scale", "--F", "1e-12", "--eps", "0", "--origin", "work-function"]).status.code(), Some(2));
}

#[test]
fn ttest_records() {
    let same = casimir(&["ttest", "--a", "1,2,3,4,5", "--b", "1,2,3,4,5"]);
    assert!(stdout(&same).contains(" p=1.0"));

    let pooled = stdout(&casimir(&["ttest", "--a-summary", "5,1.0,0.5", "--b-summary", "5,2.0,0.5"]));
    assert!((field(&pooled, "t") + 3.162).abs() < 5e-4);
    assert_eq!(field(&pooled, "df"), 8.0);
    assert!((field(&pooled, "p") - 0.0133).abs() < 5e-5);

    let welch = stdout(&casimir(&["ttest", "--a-summary", "5,1.0,0.2", "--b-summary", "5,2.0,0.5"]));
    assert!(field(&welch, "df").fract() != 0.0);

    let degenerate = casimir(&["ttest", "--a-summary", "5,1,0", "--b-summary", "5,2,0"]);
    assert_eq!(degenerate.status.code(), Some(2));
}

#[test]
fn concentration_and_hydro_records() {
    let c = stdout(&casimir(&["concentration", "--residue", "3.6e-6", "--eps", "24.3"]));
    assert!((field(&c, "c_uM") / 48.6 - 1.0).abs() < 0.02);
    let h = stdout(&casimir(&["hydro", "--R-um", "19.9", "--v-nm-s", "60", "--d-nm", "40"]));
    assert!(field(&h, "force_N") > 0.0);
}

#[test]
fn usage_errors_are_exit_2() {
    assert_eq!(casimir(&["debye"]).status.code(), Some(2));
    assert_eq!(casimir(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("two.toml"),
        "label = \"two\"\n[[members]]\nkind = \"drude\"\nplasma_ev = 8.4\ndamping_ev = 0.035\n\
         [[members]]\nkind = \"drude\"\nplasma_ev = 9.0\ndamping_ev = 0.035\n",
    )
    .unwrap();
    let cfg = write_config(
        dir.path(),
        &format!(
            "{GEOMETRY}[materials]\nsphere = {{ kind = \"drude\", plasma_ev = 9.0, damping_ev = 0.035 }}\n\
             plate = {{ kind = \"drude\", plasma_ev = 9.0, damping_ev = 0.035 }}\nmedium = {{ kind = \"ethanol\" }}\n\
             [distances]\nstart_nm = 20\nstop_nm = 100\ncount = 9\nspacing = \"log\"\n[ensemble]\nmanifest = \"two.toml\"\n"
        ),
    );
    for cmd in ["force-curve", "force-band"] {
        let first = casimir(&[cmd, "--config", &cfg]);
        let second = casimir(&[cmd, "--config", &cfg]);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "{cmd}");
    }
}
