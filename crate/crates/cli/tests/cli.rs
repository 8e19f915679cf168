//! End-to-end tests of the binary: exit-code contract, output
//! determinism, format switching, and flag/config/preset precedence.

use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir-liv"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, got {:?}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("stdout is UTF-8")
}

fn json_ok(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_ok(args)).expect("stdout parses as JSON")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("process exits normally")
}

// ---------------------------------------------------------------------
// determinism

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "force",
        "--a",
        "1e-7",
        "--disk-diameter",
        "1.25e-2",
        "--si",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let bound_args = ["bound", "--preset", "paper_inputs", "--format", "json"];
    let first = run(&bound_args);
    let second = run(&bound_args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

// ---------------------------------------------------------------------
// exit-code partition

#[test]
fn help_exits_zero() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["bound", "--help"]), 0);
}

#[test]
fn usage_errors_exit_2() {
    // the documented precondition: a > 0
    assert_eq!(exit_code(&["force", "--a", "0", "--area", "1"]), 2);
    assert_eq!(exit_code(&["force", "--a", "-1", "--area", "1"]), 2);
    // clap-level: unknown flag, malformed number
    assert_eq!(exit_code(&["force", "--bogus"]), 2);
    assert_eq!(exit_code(&["force", "--a", "abc", "--area", "1"]), 2);
    // both area inputs at once
    assert_eq!(
        exit_code(&[
            "energy",
            "--a",
            "1",
            "--area",
            "1",
            "--disk-diameter",
            "1"
        ]),
        2
    );
    // neither area input
    assert_eq!(exit_code(&["force", "--a", "1"]), 2);
    // one direction without the other
    let dir = tempfile::tempdir().unwrap();
    let kf = dir.path().join("kf.toml");
    fs::write(&kf, "kf = [{ indices = [0,1,0,1], value = 1e-17 }]\n").unwrap();
    assert_eq!(
        exit_code(&[
            "kappa",
            "--input",
            kf.to_str().unwrap(),
            "--e-sq",
            "1",
            "--b-sq",
            "1",
            "--e-dir",
            "0,0,1"
        ]),
        2
    );
    // variant without preset
    assert_eq!(
        exit_code(&[
            "bound",
            "--variant",
            "accuracy-1pn",
            "--delta-f",
            "1e-12",
            "--a",
            "1e-8",
            "--area",
            "1e-4"
        ]),
        2
    );
}

#[test]
fn missing_or_bad_files_exit_3() {
    let out = run(&["kappa", "--input", "/nonexistent/kf.toml"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("/nonexistent/kf.toml"), "stderr: {stderr}");

    assert_eq!(
        exit_code(&["force", "--a", "1", "--area", "1", "--config", "/nonexistent.toml"]),
        3
    );

    // syntactically broken config
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("broken.toml");
    fs::write(&cfg, "not toml [[[").unwrap();
    assert_eq!(
        exit_code(&["force", "--a", "1", "--area", "1", "--config", cfg.to_str().unwrap()]),
        3
    );

    // unknown key in an otherwise valid config
    let cfg2 = dir.path().join("unknown.toml");
    fs::write(&cfg2, "unknown_key = 1\n").unwrap();
    assert_eq!(
        exit_code(&["force", "--a", "1", "--area", "1", "--config", cfg2.to_str().unwrap()]),
        3
    );
}

#[test]
fn domain_errors_exit_4_with_module_message() {
    let out = run(&[
        "bound", "--delta-f", "0", "--a", "1e-8", "--area", "1e-4", "--si",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("delta_F must be strictly positive"),
        "stderr: {stderr}"
    );

    // non-decreasing regulator schedule
    assert_eq!(
        exit_code(&["sweep", "convergence", "--a", "1", "--deltas", "0.02,0.04,0.08"]),
        4
    );
}

// ---------------------------------------------------------------------
// k_F input files

#[test]
fn kf_file_drives_kappa_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let kf = dir.path().join("kf.toml");
    fs::write(&kf, "kf = [{ indices = [0,1,0,1], value = 1.0e-17 }]\n").unwrap();
    let v = json_ok(&["kappa", "--input", kf.to_str().unwrap(), "--format", "json"]);
    let de00 = v["kappa_de"][0][0].as_f64().unwrap();
    assert_eq!(de00.to_bits(), (-2.0e-17f64).to_bits());
    assert_eq!(v["max_abs_kf"].as_f64().unwrap(), 1.0e-17);
    assert_eq!(v["medium"]["epsilon"].as_f64().unwrap(), 1.0);
}

#[test]
fn kf_file_with_unknown_key_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let kf = dir.path().join("kf.toml");
    fs::write(
        &kf,
        "kf = [{ indices = [0,1,0,1], value = 1e-17 }]\nmystery = 1\n",
    )
    .unwrap();
    assert_eq!(exit_code(&["kappa", "--input", kf.to_str().unwrap()]), 3);
}

#[test]
fn kf_file_with_symmetry_conflict_exits_4() {
    // antisymmetry demands k_F^{1001} = -k_F^{0101}; give both positive
    let dir = tempfile::tempdir().unwrap();
    let kf = dir.path().join("kf.toml");
    fs::write(
        &kf,
        "kf = [\n  { indices = [0,1,0,1], value = 1e-17 },\n  { indices = [1,0,0,1], value = 1e-17 },\n]\n",
    )
    .unwrap();
    let out = run(&["kappa", "--input", kf.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn kappa_directed_fields_report_liv_factor_and_cross_term() {
    let dir = tempfile::tempdir().unwrap();
    let kf = dir.path().join("kf.toml");
    fs::write(&kf, "kf = [{ indices = [0,1,0,1], value = 1.0e-17 }]\n").unwrap();
    let v = json_ok(&[
        "kappa",
        "--input",
        kf.to_str().unwrap(),
        "--e-sq",
        "1",
        "--b-sq",
        "1",
        "--e-dir",
        "0,0,1",
        "--b-dir",
        "1,0,0",
        "--format",
        "json",
    ]);
    assert!(v["liv_factor"].is_number());
    assert!(v["cross_term_diagnostic"].is_number());
}

// ---------------------------------------------------------------------
// config file composition

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.toml");
    fs::write(
        &cfg,
        "units = \"si\"\nformat = \"csv\"\n\n[params]\na = 1.0e-7\ndisk_diameter = 1.25e-2\n",
    )
    .unwrap();
    let cfg_path = cfg.to_str().unwrap();

    // config alone: CSV in SI at a = 1e-7
    let csv = stdout_ok(&["force", "--config", cfg_path]);
    assert!(csv.starts_with("a,area,l,pressure,force,energy_per_area,units,warnings\n"));
    assert!(csv.contains(",SI,"));

    // flag overrides a and the format; the echo shows the winners
    let v = json_ok(&["force", "--config", cfg_path, "--a", "2e-7", "--format", "json"]);
    assert_eq!(v["config"]["a"].as_f64().unwrap(), 2e-7);
    assert_eq!(v["config"]["format"].as_str().unwrap(), "json");
    assert_eq!(v["config"]["units"].as_str().unwrap(), "SI");

    // --units natural beats the config's si
    let v = json_ok(&[
        "force", "--config", cfg_path, "--units", "natural", "--format", "json",
    ]);
    assert_eq!(v["units"].as_str().unwrap(), "natural");
}

// ---------------------------------------------------------------------
// presets

#[test]
fn bound_variant_scales_delta_f() {
    let base = json_ok(&["bound", "--preset", "paper_inputs", "--format", "json"]);
    let alt = json_ok(&[
        "bound",
        "--preset",
        "paper_inputs",
        "--variant",
        "accuracy-1.6pn",
        "--format",
        "json",
    ]);
    let ratio = alt["l_max"].as_f64().unwrap() / base["l_max"].as_f64().unwrap();
    assert!((ratio - 1.6).abs() < 1e-12, "ratio {ratio}");
    assert_eq!(base["config"]["variant"].as_str().unwrap(), "accuracy-1pn");
}

#[test]
fn unknown_preset_exits_2() {
    assert_eq!(exit_code(&["bound", "--preset", "no_such_preset"]), 2);
}

#[test]
fn preset_dir_env_var_overrides_builtin() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("custom.toml"),
        "units = \"si\"\n\n[geometry]\nseparation_a = 1.0e-8\narea = 1.0e-4\n\n[[variant]]\nname = \"only\"\ndelta_f = 1.0e-12\ndefault = true\n",
    )
    .unwrap();

    let out = Command::new(env!("CARGO_BIN_EXE_casimir-liv"))
        .args(["bound", "--preset", "custom", "--format", "json"])
        .env("CASIMIR_LIV_PRESET_DIR", dir.path())
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["area"].as_f64().unwrap(), 1e-4);
    // no discrepancy block in this preset
    assert!(v.get("reported_bound_discrepancy").is_none());

    // with the env var set, a preset missing from the directory is a file error
    let out = Command::new(env!("CARGO_BIN_EXE_casimir-liv"))
        .args(["bound", "--preset", "paper_inputs"])
        .env("CASIMIR_LIV_PRESET_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

// ---------------------------------------------------------------------
// per-command output checks

#[test]
fn sweep_convergence_csv_has_pinned_header() {
    let csv = stdout_ok(&["sweep", "convergence", "--a", "1", "--format", "csv"]);
    let header = csv.lines().next().unwrap();
    assert_eq!(
        header,
        "a,delta,raw_sum,continuum,subtracted,extrapolated,zeta_reference"
    );
    assert_eq!(csv.lines().count(), 4); // header + three default cutoffs
}

#[test]
fn modes_are_sorted_and_clamped() {
    let v = json_ok(&[
        "modes", "--a", "1", "--omega-max", "10", "--k-samples", "4", "--format", "json",
    ]);
    let modes = v["modes"].as_array().unwrap();
    assert!(!modes.is_empty());
    let freqs: Vec<f64> = modes
        .iter()
        .map(|m| m["frequency"].as_f64().unwrap())
        .collect();
    for pair in freqs.windows(2) {
        assert!(pair[0] <= pair[1], "modes not sorted: {pair:?}");
    }
    assert!(freqs.iter().all(|&f| f <= 10.0));
    assert_eq!(v["count"].as_u64().unwrap() as usize, modes.len());
}

#[test]
fn energy_natural_units_reproduce_the_vacuum_density() {
    let v = json_ok(&["energy", "--a", "1", "--area", "1", "--format", "json"]);
    let expected = -core::f64::consts::PI.powi(2) / 720.0;
    let got = v["energy_per_area"].as_f64().unwrap();
    assert!(
        ((got - expected) / expected).abs() < 1e-12,
        "got {got}, expected {expected}"
    );
}

#[test]
fn json_floats_round_trip_library_values_bit_for_bit() {
    use casimir_liv::observables::{observables_record, PlateGeometry, UnitSystem};

    let v = json_ok(&[
        "force",
        "--a",
        "1e-7",
        "--disk-diameter",
        "1.25e-2",
        "--si",
        "--format",
        "json",
    ]);
    let geometry =
        PlateGeometry::with_disk_diameter(1e-7, 1.25e-2, "parallel plates").unwrap();
    let record = observables_record(&geometry, 0.0, UnitSystem::Si).unwrap();
    assert_eq!(
        v["force"].as_f64().unwrap().to_bits(),
        record.force.to_bits()
    );
    assert_eq!(
        v["pressure"].as_f64().unwrap().to_bits(),
        record.pressure.to_bits()
    );
    assert_eq!(
        v["energy_per_area"].as_f64().unwrap().to_bits(),
        record.energy_per_area.to_bits()
    );
}

#[test]
fn pretty_force_marks_the_sign_and_units() {
    let text = stdout_ok(&[
        "force", "--a", "1e-7", "--disk-diameter", "1.25e-2", "--si",
    ]);
    assert!(text.contains("attractive"), "text: {text}");
    assert!(text.contains(" N "), "text: {text}");
    // micrometer-scale warning fires only at a >= 1e-6
    let warned = stdout_ok(&["force", "--a", "2e-6", "--area", "1e-4", "--si"]);
    assert!(warned.contains("warning:"), "text: {warned}");
}

#[test]
fn validate_passes_and_reports_grid() {
    let v = json_ok(&["validate", "--format", "json"]);
    assert!(v["agreement_pass"].as_bool().unwrap());
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);
    let worst = v["worst_relative_deviation"].as_f64().unwrap();
    assert!(worst < 1e-3, "worst deviation {worst}");
}

#[test]
fn validate_reports_kf_file_too() {
    let dir = tempfile::tempdir().unwrap();
    let kf = dir.path().join("kf.toml");
    fs::write(&kf, "kf = [{ indices = [0,1,2,3], value = 1e-19 }]\n").unwrap();
    let v = json_ok(&[
        "validate", "--input", kf.to_str().unwrap(), "--format", "json",
    ]);
    assert!(v["kf_report"]["valid"].as_bool().unwrap());
}

#[test]
fn sweep_bound_scales_as_a_fourth_power() {
    let csv = stdout_ok(&[
        "sweep", "bound", "--preset", "paper_inputs", "--a-min", "1e-8", "--a-max", "1e-7",
        "--points", "2", "--format", "csv",
    ]);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "a,force,l_max");
    let parse = |line: &str| -> Vec<f64> {
        line.split(',').map(|x| x.parse().unwrap()).collect()
    };
    let lo = parse(lines.next().unwrap());
    let hi = parse(lines.next().unwrap());
    // a grows 10x, so |F| drops 10^4 and the bound loosens 10^4
    assert!((hi[2] / lo[2] / 1e4 - 1.0).abs() < 1e-10);
    assert!((lo[1] / hi[1] / 1e4 - 1.0).abs() < 1e-10);
}
