use std::f64::consts::{FRAC_PI_2, PI};
use std::io::Write as _;
use std::process::{Command, Output};

use gravent::gravity::{redshift_pair, BodyParams, ScenarioCatalog};

const BIN: &str = env!("CARGO_BIN_EXE_gravent");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("GRAVENT_SCENARIOS").output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn rows(csv: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = csv.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    (header, lines.map(|l| l.split(',').map(String::from).collect()).collect())
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let (header, body) = rows(csv);
    let idx = header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"));
    body.iter().map(|r| r[idx].parse().unwrap()).collect()
}

fn geo_delta() -> f64 {
    let catalog = ScenarioCatalog::builtin(&BodyParams::EARTH);
    redshift_pair(catalog.get("geo-vs-ground").unwrap(), &BodyParams::EARTH).unwrap().delta_theta_inv()
}

fn hom_zero() -> f64 {
    FRAC_PI_2 / (geo_delta() * 2.0 * PI * 1e9)
}

fn scenario_file() -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# lab tower\nname = lab\nr_u = 6378237\nr_l = 6378137\n").unwrap();
    f
}

#[test]
fn scenarios_lists_presets() {
    let out = ok(&["scenarios"]);
    let (header, body) = rows(&out);
    assert_eq!(header[0], "name");
    let names: Vec<_> = body.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(names, ["drop-tower", "burj-khalifa", "sat-to-sat", "geo-vs-ground"]);
}

#[test]
fn scenario_file_adds_entries() {
    let f = scenario_file();
    let path = f.path().to_str().unwrap();
    let by_flag = ok(&["--config", path, "scenarios"]);
    assert_eq!(rows(&by_flag).1.len(), 5);
    let by_env = Command::new(BIN).arg("scenarios").env("GRAVENT_SCENARIOS", path).output().unwrap();
    assert_eq!(String::from_utf8(by_env.stdout).unwrap(), by_flag);
    ok(&["--config", path, "pattern", "--scenario", "lab", "--points", "3"]);
}

#[test]
fn bad_inputs_exit_with_usage_code() {
    assert_eq!(run(&["--config", "/nonexistent/scenarios.txt", "scenarios"]).status.code(), Some(2));
    assert_eq!(run(&["pattern", "--scenario", "nowhere"]).status.code(), Some(2));
    assert_eq!(run(&["pattern", "--from", "2s", "--to", "1s"]).status.code(), Some(2));
    assert_eq!(run(&["pattern", "--points", "0"]).status.code(), Some(2));
    assert_eq!(run(&["pattern", "--omega1", "fast"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "r_u = 1").unwrap();
    assert_eq!(run(&["--config", f.path().to_str().unwrap(), "scenarios"]).status.code(), Some(2));
}

#[test]
fn help_and_version_succeed() {
    assert!(ok(&["--help"]).contains("pattern"));
    assert!(ok(&["--version"]).starts_with("gravent"));
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["pattern", "--points", "50", "--to", "1s"];
    assert_eq!(ok(&args), ok(&args));
    let args = ["measures", "--points", "20", "--format", "json"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.csv");
    let args = ["pattern", "--points", "11"];
    let stdout = ok(&args);
    ok(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert_eq!(std::fs::read_to_string(path).unwrap(), stdout);
}

#[test]
fn pattern_reaches_zero_and_minus_one() {
    let t0 = hom_zero();
    let out = ok(&["pattern", "--from", &format!("{t0}"), "--to", &format!("{}", 2.0 * t0), "--points", "2"]);
    let p = column(&out, "p_c_hom");
    assert!(p[0].abs() < 1e-9, "{p:?}");
    assert!((p[1] + 1.0).abs() < 1e-4, "{p:?}");
    assert!(t0 > 0.46 && t0 < 0.47);
}

#[test]
fn single_point_at_origin() {
    let out = ok(&["pattern", "--from", "0", "--to", "0", "--points", "1"]);
    let p = column(&out, "p_c_hom");
    assert_eq!(p.len(), 1);
    assert!((p[0] - 1.0).abs() < 1e-12);
}

#[test]
fn pattern_ports_follow_setup() {
    let (mz, _) = rows(&ok(&["pattern", "--setup", "mz", "--points", "2"]));
    assert_eq!(mz, ["tau_s", "p_c_mz", "p_c_hom", "p_plus", "p_minus"]);
    let out = ok(&["pattern", "--points", "30", "--to", "1s"]);
    let (_, body) = rows(&out);
    for r in body {
        let ports: Vec<f64> = r[3..].iter().map(|v| v.parse().unwrap()).collect();
        assert!((ports.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(ports.iter().all(|p| (-1e-12..=1.0 + 1e-12).contains(p)));
    }
}

#[test]
fn measures_at_key_times() {
    let t0 = hom_zero();
    let out = ok(&["measures", "--from", "0", "--to", &format!("{t0}"), "--points", "2"]);
    let purity = column(&out, "purity");
    let entropy = column(&out, "linear_entropy");
    let neg = column(&out, "negativity");
    assert!((purity[0] - 1.0).abs() < 1e-12 && entropy[0].abs() < 1e-12 && (neg[0] - 0.5).abs() < 1e-12);
    assert!((purity[1] - 0.5).abs() < 1e-9 && neg[1].abs() < 1e-9);
}

#[test]
fn measures_agree_with_pattern() {
    let sweep = ["--points", "40", "--to", "1.5s"];
    let pattern = ok(&[&["pattern"][..], &sweep].concat());
    let measures = ok(&[&["measures"][..], &sweep].concat());
    let p = column(&pattern, "p_c_hom");
    let s = column(&measures, "linear_entropy");
    let n = column(&measures, "negativity");
    for ((p, s), n) in p.iter().zip(&s).zip(&n) {
        assert!((s - 0.5 * (1.0 - p * p)).abs() < 1e-12);
        assert!((n - 0.5 * p.abs()).abs() < 1e-12);
    }
}

#[test]
fn global_sync_is_flat() {
    let out = ok(&["pattern", "--sync", "global", "--points", "20", "--to", "5s"]);
    assert!(column(&out, "p_c_hom").iter().all(|p| (p - 1.0).abs() < 1e-12));
}

#[test]
fn json_is_array_of_records() {
    let out = ok(&["pattern", "--points", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 3);
    let keys: Vec<_> = arr[0].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys[..3], ["tau_s", "p_c_mz", "p_c_hom"]);
    let csv = ok(&["pattern", "--points", "3"]);
    assert_eq!(column(&csv, "p_c_hom")[2], arr[2]["p_c_hom"].as_f64().unwrap());
}

#[test]
fn clocks_trace() {
    let out = ok(&["clocks", "--points", "5"]);
    let (header, body) = rows(&out);
    assert_eq!(header[0], "tau_s");
    assert_eq!(body.len(), 5);
    let robust = ok(&["clocks", "--initial", "robust-spatial-aligned", "--points", "5"]);
    assert!(column(&robust, "pair_negativity").iter().all(|n| (n - 0.5).abs() < 1e-12));
}

#[test]
fn feasibility_grid_shape() {
    let out = ok(&["feasibility"]);
    let (header, body) = rows(&out);
    assert_eq!(header, ["scenario", "omega_minus_rad_s", "tau_ent_s", "tau_reslim_s"]);
    assert_eq!(body.len(), 4 * 61);
    let one = ok(&["feasibility", "--scenario", "sat-to-sat", "--points", "5", "--from", "1e10", "--to", "1e14"]);
    assert_eq!(rows(&one).1.len(), 5);
    assert_eq!(column(&one, "omega_minus_rad_s")[4], 1e14);
}

#[test]
fn feasibility_delay_line_report() {
    let out = ok(&["feasibility", "--delay-line"]);
    let length = column(&out, "length_m")[0];
    let pair = column(&out, "pair_surviving_fraction")[0];
    assert!((length - 5788.0).abs() / 5788.0 < 1e-3, "{length}");
    assert!((pair - 0.383).abs() < 1e-3, "{pair}");
}

#[test]
fn feasibility_resolution_report() {
    let out = ok(&["feasibility", "--resolution", "1ps"]);
    assert!((column(&out, "tau_reslim_s")[0] - 1e-12).abs() < 1e-24);
    let length = column(&out, "length_m")[0];
    assert!((length - 757_052.7).abs() < 1.0, "{length}");
    assert!((column(&out, "loss_db")[0] - 151.41).abs() < 0.01);
}

#[test]
fn selfcheck_exit_codes() {
    let out = run(&["selfcheck"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches("PASS").count(), 3);
    let out = run(&["selfcheck", "--perturb", "memory-combination-table"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("FAIL memory-combination-table"));
}
