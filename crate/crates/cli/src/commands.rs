//! Subcommand implementations: resolve inputs (flags over config file
//! over preset), call the library, render in the chosen format.
//!
//! Output always goes to stdout; the effective configuration is embedded
//! in every JSON document so a result can be reproduced from the document
//! alone.

use casimir_liv::bounds::{bound_sweep, liv_upper_bound, MeasurementRecord};
use casimir_liv::modes::{enumerate_modes, shifted_frequency, BoundaryCondition};
use casimir_liv::observables::{observables_record, PlateGeometry, UnitSystem};
use casimir_liv::regularization::{
    extrapolated_cutoff_energy, log_grid, oracle_zeta_agreement, zeta_energy_per_area,
    RegulatorSchedule,
};
use casimir_liv::sme::{
    kappa_from_kf, liv_factor, validate_kf_with, FieldStats, KappaSet, ValidationOptions,
};
use serde::Serialize;

use crate::args::{
    BoundArgs, Cli, Command, FormatArg, KappaArgs, ModesArgs, ObservableArgs, SweepBoundArgs,
    SweepConvergenceArgs, SweepKind, UnitArg, ValidateArgs,
};
use crate::config::{self, FileConfig, Params};
use crate::error::{CliError, CliResult};
use crate::input::load_kf;
use crate::output::{csv_field, csv_row, fmt_f64, to_json};
use crate::presets::{self, Preset};

/// Agreement tolerance between the cutoff oracle and the analytic
/// continuation, used by `validate`.
const AGREEMENT_TOLERANCE: f64 = 1e-3;

pub fn run(cli: Cli) -> CliResult<()> {
    let file_cfg = match &cli.config {
        Some(path) => config::load(path)?,
        None => FileConfig::default(),
    };
    let units_pref = units_preference(&cli, &file_cfg)?;
    let format = format_choice(&cli, &file_cfg)?;

    match cli.command {
        Command::Kappa(args) => kappa_cmd(args, &file_cfg.params, units_pref, format),
        Command::Modes(args) => modes_cmd(args, &file_cfg.params, units_pref, format),
        Command::Energy(args) => {
            observable_cmd("energy", args, &file_cfg.params, units_pref, format)
        }
        Command::Force(args) => observable_cmd("force", args, &file_cfg.params, units_pref, format),
        Command::Bound(args) => bound_cmd(args, &file_cfg.params, units_pref, format),
        Command::Sweep(args) => match args.kind {
            SweepKind::Bound(inner) => sweep_bound_cmd(inner, &file_cfg.params, units_pref, format),
            SweepKind::Convergence(inner) => {
                sweep_convergence_cmd(inner, &file_cfg.params, units_pref, format)
            }
        },
        Command::Validate(args) => validate_cmd(args, &file_cfg.params, units_pref, format),
    }
}

// ---------------------------------------------------------------------
// shared resolution helpers

fn units_preference(cli: &Cli, cfg: &FileConfig) -> CliResult<Option<UnitSystem>> {
    if let Some(u) = cli.units {
        return Ok(Some(match u {
            UnitArg::Natural => UnitSystem::Natural,
            UnitArg::Si => UnitSystem::Si,
        }));
    }
    if cli.si {
        return Ok(Some(UnitSystem::Si));
    }
    match &cfg.units {
        Some(s) => parse_units(s).map(Some),
        None => Ok(None),
    }
}

fn parse_units(s: &str) -> CliResult<UnitSystem> {
    match s.to_ascii_lowercase().as_str() {
        "natural" => Ok(UnitSystem::Natural),
        "si" => Ok(UnitSystem::Si),
        other => Err(CliError::Usage(format!(
            "units must be 'natural' or 'si', not '{other}'"
        ))),
    }
}

fn format_choice(cli: &Cli, cfg: &FileConfig) -> CliResult<FormatArg> {
    if let Some(f) = cli.format {
        return Ok(f);
    }
    match cfg.format.as_deref() {
        Some("json") => Ok(FormatArg::Json),
        Some("csv") => Ok(FormatArg::Csv),
        Some("pretty") => Ok(FormatArg::Pretty),
        Some(other) => Err(CliError::Usage(format!(
            "format must be 'json', 'csv', or 'pretty', not '{other}'"
        ))),
        None => Ok(FormatArg::Pretty),
    }
}

fn format_label(f: FormatArg) -> &'static str {
    match f {
        FormatArg::Json => "json",
        FormatArg::Csv => "csv",
        FormatArg::Pretty => "pretty",
    }
}

/// The one precondition validated at the invocation layer (the usage
/// contract names it explicitly): the plate separation must be positive.
fn require_separation(a: Option<f64>) -> CliResult<f64> {
    let a = a.ok_or_else(|| CliError::Usage("--a is required (plate separation)".into()))?;
    if !a.is_finite() || a <= 0.0 {
        return Err(CliError::Usage(format!(
            "plate separation must satisfy a > 0, got {a}"
        )));
    }
    Ok(a)
}

/// Exactly one of area / disk diameter, after all default layers merged.
fn resolve_area_inputs(
    flag: (Option<f64>, Option<f64>),
    cfg: (Option<f64>, Option<f64>),
    preset: (Option<f64>, Option<f64>),
) -> CliResult<(Option<f64>, Option<f64>)> {
    let level = if flag.0.is_some() || flag.1.is_some() {
        flag
    } else if cfg.0.is_some() || cfg.1.is_some() {
        cfg
    } else {
        preset
    };
    match level {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "give either an area or a disk diameter, not both".into(),
        )),
        (None, None) => Err(CliError::Usage(
            "one of --area or --disk-diameter is required".into(),
        )),
        ok => Ok(ok),
    }
}

fn parse_triple(raw: &str, flag: &str) -> CliResult<[f64; 3]> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "{flag} needs exactly three comma-separated numbers, got '{raw}'"
        )));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part.trim().parse().map_err(|_| {
            CliError::Usage(format!("{flag}: '{part}' is not a number"))
        })?;
    }
    Ok(out)
}

fn parse_delta_list(raw: &str) -> CliResult<Vec<f64>> {
    raw.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("--deltas: '{part}' is not a number")))
        })
        .collect()
}

fn emit(text: String) -> CliResult<()> {
    print!("{text}");
    Ok(())
}

fn bc_label(bc: BoundaryCondition) -> &'static str {
    match bc {
        BoundaryCondition::Dirichlet => "dirichlet",
        BoundaryCondition::Neumann => "neumann",
    }
}

// ---------------------------------------------------------------------
// kappa

#[derive(Serialize)]
struct KappaEcho {
    command: &'static str,
    units: &'static str,
    format: &'static str,
    input: String,
    check_bianchi: bool,
    check_double_trace: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_sq: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b_sq: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_dir: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b_dir: Option<[f64; 3]>,
}

#[derive(Serialize)]
struct MediumEcho {
    epsilon: f64,
    mu: f64,
}

#[derive(Serialize)]
struct KappaOutput {
    config: KappaEcho,
    kappa_de: [[f64; 3]; 3],
    kappa_hb: [[f64; 3]; 3],
    kappa_db: [[f64; 3]; 3],
    kappa_he: [[f64; 3]; 3],
    max_abs_kf: f64,
    medium: MediumEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    kaf: Option<[f64; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    liv_factor: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_term_diagnostic: Option<f64>,
    warnings: Vec<String>,
}

fn kappa_cmd(
    args: KappaArgs,
    params: &Params,
    units_pref: Option<UnitSystem>,
    format: FormatArg,
) -> CliResult<()> {
    let units = units_pref.unwrap_or(UnitSystem::Natural);
    let input = args
        .input
        .or_else(|| params.input.clone())
        .ok_or_else(|| CliError::Usage("--input is required (a k_F coefficient file)".into()))?;

    let loaded = load_kf(&input)?;

    let opts = ValidationOptions {
        bianchi: args.check_bianchi,
        double_traceless: args.check_double_trace,
    };
    let report = validate_kf_with(&loaded.tensor, opts)?;
    if !report.is_valid() {
        let listed: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(CliError::Domain(format!(
            "k_F violates required symmetries: {}",
            listed.join("; ")
        )));
    }
    let mut warnings: Vec<String> = report
        .large_entries
        .iter()
        .map(|(idx, v)| {
            format!(
                "entry ({},{},{},{}) = {v:e} is large for a coefficient expected below 1e-2",
                idx[0], idx[1], idx[2], idx[3]
            )
        })
        .collect();

    let kappa = kappa_from_kf(&loaded.tensor)?;

    let e_sq = args.e_sq.or(params.e_sq);
    let b_sq = args.b_sq.or(params.b_sq);
    let e_dir = match args.e_dir {
        Some(raw) => Some(parse_triple(&raw, "--e-dir")?),
        None => params.e_dir,
    };
    let b_dir = match args.b_dir {
        Some(raw) => Some(parse_triple(&raw, "--b-dir")?),
        None => params.b_dir,
    };

    let fields = match (e_sq, b_sq) {
        (None, None) => {
            if e_dir.is_some() || b_dir.is_some() {
                warnings.push(
                    "directions given without --e-sq/--b-sq; no LIV factor evaluated".into(),
                );
            }
            None
        }
        (e, b) => {
            let e = e.unwrap_or(0.0);
            let b = b.unwrap_or(0.0);
            match (e_dir, b_dir) {
                (None, None) => Some(FieldStats::Isotropic { e_sq: e, b_sq: b }),
                (Some(ed), Some(bd)) => Some(FieldStats::Directed {
                    e_sq: e,
                    e_dir: ed,
                    b_sq: b,
                    b_dir: bd,
                }),
                _ => {
                    return Err(CliError::Usage(
                        "give both --e-dir and --b-dir, or neither (rotational average)".into(),
                    ))
                }
            }
        }
    };

    let l = match &fields {
        Some(f) => Some(liv_factor(&kappa, f, &loaded.medium)?),
        None => None,
    };
    let cross = match (e_dir, b_dir) {
        (Some(ed), Some(bd)) => Some(kappa.cross_term(ed, bd)),
        _ => None,
    };

    let out = KappaOutput {
        config: KappaEcho {
            command: "kappa",
            units: units.label(),
            format: format_label(format),
            input: input.display().to_string(),
            check_bianchi: args.check_bianchi,
            check_double_trace: args.check_double_trace,
            e_sq,
            b_sq,
            e_dir,
            b_dir,
        },
        kappa_de: kappa.kappa_de,
        kappa_hb: kappa.kappa_hb,
        kappa_db: kappa.kappa_db,
        kappa_he: kappa.kappa_he,
        max_abs_kf: loaded.tensor.max_abs(),
        medium: MediumEcho {
            epsilon: loaded.medium.epsilon(),
            mu: loaded.medium.mu(),
        },
        kaf: loaded.kaf.map(|k| k.components),
        liv_factor: l,
        cross_term_diagnostic: cross,
        warnings,
    };

    match format {
        FormatArg::Json => emit(to_json(&out)),
        FormatArg::Csv => emit(kappa_csv(&out)),
        FormatArg::Pretty => emit(kappa_pretty(&out, &kappa)),
    }
}

fn kappa_csv(out: &KappaOutput) -> String {
    let mut text = String::from("matrix,row,col,value\n");
    let blocks: [(&str, &[[f64; 3]; 3]); 4] = [
        ("kappa_de", &out.kappa_de),
        ("kappa_hb", &out.kappa_hb),
        ("kappa_db", &out.kappa_db),
        ("kappa_he", &out.kappa_he),
    ];
    for (name, matrix) in blocks {
        for (i, row) in matrix.iter().enumerate() {
            for (j, value) in row.iter().enumerate() {
                text.push_str(&csv_row(&[
                    name.to_owned(),
                    i.to_string(),
                    j.to_string(),
                    fmt_f64(*value),
                ]));
            }
        }
    }
    if let Some(l) = out.liv_factor {
        text.push_str(&csv_row(&[
            "liv_factor".to_owned(),
            String::new(),
            String::new(),
            fmt_f64(l),
        ]));
    }
    text
}

fn matrix_pretty(name: &str, m: &[[f64; 3]; 3]) -> String {
    let mut text = format!("{name}:\n");
    for row in m {
        text.push_str(&format!(
            "  [ {:>24} {:>24} {:>24} ]\n",
            fmt_f64(row[0]),
            fmt_f64(row[1]),
            fmt_f64(row[2])
        ));
    }
    text
}

fn kappa_pretty(out: &KappaOutput, kappa: &KappaSet) -> String {
    let mut text = format!("constitutive matrices from {}\n", out.config.input);
    text.push_str(&matrix_pretty("kappa_DE", &kappa.kappa_de));
    text.push_str(&matrix_pretty("kappa_HB", &kappa.kappa_hb));
    text.push_str(&matrix_pretty("kappa_DB", &kappa.kappa_db));
    text.push_str(&matrix_pretty("kappa_HE", &kappa.kappa_he));
    text.push_str(&format!("largest |k_F| entry = {}\n", fmt_f64(out.max_abs_kf)));
    text.push_str(&format!(
        "medium: epsilon = {}, mu = {}\n",
        fmt_f64(out.medium.epsilon),
        fmt_f64(out.medium.mu)
    ));
    if let Some(kaf) = out.kaf {
        text.push_str(&format!(
            "k_AF (stored, unused) = [{}, {}, {}, {}]\n",
            fmt_f64(kaf[0]),
            fmt_f64(kaf[1]),
            fmt_f64(kaf[2]),
            fmt_f64(kaf[3])
        ));
    }
    if let Some(l) = out.liv_factor {
        text.push_str(&format!("LIV factor L = {}\n", fmt_f64(l)));
    }
    if let Some(c) = out.cross_term_diagnostic {
        text.push_str(&format!(
            "cross-term diagnostic (zero up to rounding) = {}\n",
            fmt_f64(c)
        ));
    }
    for w in &out.warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    text
}

// ---------------------------------------------------------------------
// modes

#[derive(Serialize)]
struct ModesEcho {
    command: &'static str,
    units: &'static str,
    format: &'static str,
    a: f64,
    omega_max: f64,
    k_samples: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<f64>,
}

#[derive(Serialize)]
struct ModeRow {
    bc: &'static str,
    n: u32,
    k_t: f64,
    frequency: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    shifted: Option<f64>,
}

#[derive(Serialize)]
struct ModesOutput {
    config: ModesEcho,
    count: usize,
    modes: Vec<ModeRow>,
}

fn modes_cmd(
    args: ModesArgs,
    params: &Params,
    units_pref: Option<UnitSystem>,
    format: FormatArg,
) -> CliResult<()> {
    let units = units_pref.unwrap_or(UnitSystem::Natural);
    let a = require_separation(args.a.or(params.a))?;
    let omega_max = args
        .omega_max
        .or(params.omega_max)
        .ok_or_else(|| CliError::Usage("--omega-max is required".into()))?;
    let k_samples = args.k_samples.or(params.k_samples).unwrap_or(1);
    let l = args.l.or(params.l);

    let enumerated = enumerate_modes(a, omega_max, k_samples)?;
    let mut rows = Vec::with_capacity(enumerated.len());
    for (spec, frequency) in &enumerated {
        let shifted = match l {
            Some(l) => Some(shifted_frequency(*frequency, l)?),
            None => None,
        };
        rows.push(ModeRow {
            bc: bc_label(spec.bc),
            n: spec.n,
            k_t: spec.k_t,
            frequency: *frequency,
            shifted,
        });
    }

    let out = ModesOutput {
        config: ModesEcho {
            command: "modes",
            units: units.label(),
            format: format_label(format),
            a,
            omega_max,
            k_samples,
            l,
        },
        count: rows.len(),
        modes: rows,
    };

    match format {
        FormatArg::Json => emit(to_json(&out)),
        FormatArg::Csv => {
            let mut text = if out.config.l.is_some() {
                String::from("bc,n,k_t,frequency,shifted\n")
            } else {
                String::from("bc,n,k_t,frequency\n")
            };
            for row in &out.modes {
                let mut fields = vec![
                    row.bc.to_owned(),
                    row.n.to_string(),
                    fmt_f64(row.k_t),
                    fmt_f64(row.frequency),
                ];
                if let Some(s) = row.shifted {
                    fields.push(fmt_f64(s));
                }
                text.push_str(&csv_row(&fields));
            }
            emit(text)
        }
        FormatArg::Pretty => {
            let mut text = format!(
                "mode spectrum for a = {}, omega_max = {}, k_samples = {} \
                 (frequencies in inverse length)\n",
                fmt_f64(out.config.a),
                fmt_f64(out.config.omega_max),
                out.config.k_samples
            );
            text.push_str(&format!("{} modes\n", out.count));
            for row in &out.modes {
                let mut line = format!(
                    "  {:<9} n={:<3} k_t={:>24} omega={:>24}",
                    row.bc,
                    row.n,
                    fmt_f64(row.k_t),
                    fmt_f64(row.frequency)
                );
                if let Some(s) = row.shifted {
                    line.push_str(&format!(" shifted={:>24}", fmt_f64(s)));
                }
                line.push('\n');
                text.push_str(&line);
            }
            emit(text)
        }
    }
}

// ---------------------------------------------------------------------
// energy / force

#[derive(Serialize)]
struct ObsEcho {
    command: &'static str,
    units: &'static str,
    format: &'static str,
    a: f64,
    l: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    area: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    disk_diameter: Option<f64>,
    label: String,
}

#[derive(Serialize)]
struct ObsOutput {
    config: ObsEcho,
    a: f64,
    area: f64,
    l: f64,
    pressure: f64,
    force: f64,
    energy_per_area: f64,
    units: &'static str,
    warnings: Vec<String>,
}

fn observable_cmd(
    name: &'static str,
    args: ObservableArgs,
    params: &Params,
    units_pref: Option<UnitSystem>,
    format: FormatArg,
) -> CliResult<()> {
    let units = units_pref.unwrap_or(UnitSystem::Natural);
    let a = require_separation(args.a.or(params.a))?;
    let l = args.l.or(params.l).unwrap_or(0.0);
    let (area_in, disk_in) = resolve_area_inputs(
        (args.area, args.disk_diameter),
        (params.area, params.disk_diameter),
        (None, None),
    )?;
    let label = args
        .label
        .or_else(|| params.label.clone())
        .unwrap_or_else(|| "parallel plates".to_owned());

    let geometry = PlateGeometry::from_inputs(a, area_in, disk_in, &label)?;
    let record = observables_record(&geometry, l, units)?;

    let out = ObsOutput {
        config: ObsEcho {
            command: name,
            units: units.label(),
            format: format_label(format),
            a,
            l,
            area: area_in,
            disk_diameter: disk_in,
            label,
        },
        a: record.a,
        area: record.area,
        l: record.l,
        pressure: record.pressure,
        force: record.force,
        energy_per_area: record.energy_per_area,
        units: units.label(),
        warnings: record.warnings,
    };

    match format {
        FormatArg::Json => emit(to_json(&out)),
        FormatArg::Csv => {
            let mut text =
                String::from("a,area,l,pressure,force,energy_per_area,units,warnings\n");
            text.push_str(&csv_row(&[
                fmt_f64(out.a),
                fmt_f64(out.area),
                fmt_f64(out.l),
                fmt_f64(out.pressure),
                fmt_f64(out.force),
                fmt_f64(out.energy_per_area),
                out.units.to_owned(),
                csv_field(&out.warnings.join("; ")),
            ]));
            emit(text)
        }
        FormatArg::Pretty => {
            let si = units == UnitSystem::Si;
            let (u_len, u_area, u_p, u_f, u_e) = if si {
                (" m", " m^2", " Pa", " N", " J/m^2")
            } else {
                ("", "", "", "", "")
            };
            let sense = if out.force < 0.0 {
                "attractive"
            } else {
                "repulsive"
            };
            let mut text = format!(
                "Casimir observables ({} units) for {}\n",
                out.units, out.config.label
            );
            text.push_str(&format!("  separation a    = {}{u_len}\n", fmt_f64(out.a)));
            text.push_str(&format!("  plate area A    = {}{u_area}\n", fmt_f64(out.area)));
            text.push_str(&format!("  LIV factor L    = {}\n", fmt_f64(out.l)));
            text.push_str(&format!(
                "  pressure        = {}{u_p}\n",
                fmt_f64(out.pressure)
            ));
            text.push_str(&format!(
                "  force           = {}{u_f} ({sense})\n",
                fmt_f64(out.force)
            ));
            text.push_str(&format!(
                "  energy per area = {}{u_e}\n",
                fmt_f64(out.energy_per_area)
            ));
            for w in &out.warnings {
                text.push_str(&format!("warning: {w}\n"));
            }
            emit(text)
        }
    }
}

// ---------------------------------------------------------------------
// bound

#[derive(Serialize)]
struct BoundEcho {
    command: &'static str,
    units: &'static str,
    format: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<String>,
    delta_f: f64,
    a: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    area: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    disk_diameter: Option<f64>,
    label: String,
}

#[derive(Serialize)]
struct DiscrepancyOut {
    reported_upper_bound: f64,
    computed_upper_bound: f64,
    ratio_reported_to_computed: f64,
    note: String,
}

#[derive(Serialize)]
struct BoundOutput {
    config: BoundEcho,
    l_max: f64,
    reference_force: f64,
    delta_f: f64,
    a: f64,
    area: f64,
    units: &'static str,
    source_label: String,
    accuracy_provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    reported_bound_discrepancy: Option<DiscrepancyOut>,
    warnings: Vec<String>,
}

struct BoundInputs {
    preset_name: Option<String>,
    variant_name: Option<String>,
    delta_f: f64,
    a: f64,
    area_in: Option<f64>,
    disk_in: Option<f64>,
    label: String,
    provenance: String,
    units: UnitSystem,
    discrepancy: Option<presets::PresetDiscrepancy>,
}

/// Merge flags, config file, and (optionally) a preset into concrete
/// bound-estimator inputs. Shared by `bound` and `sweep bound`; for the
/// sweep, `a` is only the geometry's base separation.
#[allow(clippy::too_many_arguments)]
fn resolve_bound_inputs(
    preset_flag: Option<String>,
    variant_flag: Option<String>,
    delta_f_flag: Option<f64>,
    a_flag: Option<f64>,
    area_flag: Option<f64>,
    disk_flag: Option<f64>,
    label_flag: Option<String>,
    params: &Params,
    units_pref: Option<UnitSystem>,
    a_required: bool,
) -> CliResult<BoundInputs> {
    let preset_name = preset_flag.or_else(|| params.preset.clone());
    let variant_name = variant_flag.or_else(|| params.variant.clone());
    if variant_name.is_some() && preset_name.is_none() {
        return Err(CliError::Usage("--variant requires --preset".into()));
    }

    let preset: Option<Preset> = match &preset_name {
        Some(name) => Some(presets::load(name)?),
        None => None,
    };
    let variant = match &preset {
        Some(p) => Some(p.variant(variant_name.as_deref())?.clone()),
        None => None,
    };

    let delta_f = delta_f_flag
        .or(params.delta_f)
        .or_else(|| variant.as_ref().map(|v| v.delta_f))
        .ok_or_else(|| {
            CliError::Usage("--delta-f is required (force measurement accuracy)".into())
        })?;

    let a = match (
        a_flag.or(params.a),
        preset.as_ref().map(|p| p.geometry.separation_a),
    ) {
        (Some(a), _) => require_separation(Some(a))?,
        (None, Some(a)) => a,
        (None, None) if a_required => {
            return Err(CliError::Usage("--a is required (plate separation)".into()))
        }
        // The sweep supplies separations from its own grid.
        (None, None) => 1.0,
    };

    let (area_in, disk_in) = resolve_area_inputs(
        (area_flag, disk_flag),
        (params.area, params.disk_diameter),
        match &preset {
            Some(p) => (p.geometry.area, p.geometry.disk_diameter),
            None => (None, None),
        },
    )?;

    let label = label_flag
        .or_else(|| params.label.clone())
        .or_else(|| preset.as_ref().and_then(|p| p.geometry.label.clone()))
        .unwrap_or_else(|| "parallel plates".to_owned());

    let provenance = variant
        .as_ref()
        .and_then(|v| v.note.clone())
        .unwrap_or_else(|| "command-line inputs".to_owned());

    let units = match units_pref {
        Some(u) => u,
        None => match preset.as_ref().and_then(|p| p.units.as_deref()) {
            Some(s) => parse_units(s)?,
            None => UnitSystem::Natural,
        },
    };

    Ok(BoundInputs {
        preset_name,
        variant_name: variant.map(|v| v.name),
        delta_f,
        a,
        area_in,
        disk_in,
        label,
        provenance,
        units,
        discrepancy: preset.and_then(|p| p.discrepancy),
    })
}

fn bound_cmd(
    args: BoundArgs,
    params: &Params,
    units_pref: Option<UnitSystem>,
    format: FormatArg,
) -> CliResult<()> {
    let inputs = resolve_bound_inputs(
        args.preset,
        args.variant,
        args.delta_f,
        args.a,
        args.area,
        args.disk_diameter,
        args.label,
        params,
        units_pref,
        true,
    )?;

    let geometry =
        PlateGeometry::from_inputs(inputs.a, inputs.area_in, inputs.disk_in, &inputs.label)?;
    let record = MeasurementRecord::new(
        inputs.delta_f,
        geometry.clone(),
        &inputs.label,
        &inputs.provenance,
    )?;
    let bound = liv_upper_bound(&record, inputs.units)?;

    let discrepancy = inputs.discrepancy.map(|d| DiscrepancyOut {
        reported_upper_bound: d.reported_upper_bound,
        computed_upper_bound: bound.l_max,
        ratio_reported_to_computed: d.reported_upper_bound / bound.l_max,
        note: d.note,
    });

    let out = BoundOutput {
        config: BoundEcho {
            command: "bound",
            units: inputs.units.label(),
            format: format_label(format),
            preset: inputs.preset_name,
            variant: inputs.variant_name,
            delta_f: inputs.delta_f,
            a: inputs.a,
            area: inputs.area_in,
            disk_diameter: inputs.disk_in,
            label: inputs.label.clone(),
        },
        l_max: bound.l_max,
        reference_force: bound.reference_force,
        delta_f: inputs.delta_f,
        a: inputs.a,
        area: geometry.area(),
        units: inputs.units.label(),
        source_label: inputs.label,
        accuracy_provenance: inputs.provenance,
        reported_bound_discrepancy: discrepancy,
        warnings: geometry.warnings(inputs.units),
    };

    match format {
        FormatArg::Json => emit(to_json(&out)),
        FormatArg::Csv => {
            let mut text = String::from("l_max,reference_force,delta_f,a,area,units\n");
            text.push_str(&csv_row(&[
                fmt_f64(out.l_max),
                fmt_f64(out.reference_force),
                fmt_f64(out.delta_f),
                fmt_f64(out.a),
                fmt_f64(out.area),
                out.units.to_owned(),
            ]));
            emit(text)
        }
        FormatArg::Pretty => {
            let si = out.units == "SI";
            let (u_len, u_area, u_f) = if si { (" m", " m^2", " N") } else { ("", "", "") };
            let mut text = format!("LIV upper bound ({} units)\n", out.units);
            text.push_str(&format!("  source          = {}\n", out.source_label));
            text.push_str(&format!("  accuracy        = {}\n", out.accuracy_provenance));
            text.push_str(&format!(
                "  delta_F         = {}{u_f}\n",
                fmt_f64(out.delta_f)
            ));
            text.push_str(&format!("  separation a    = {}{u_len}\n", fmt_f64(out.a)));
            text.push_str(&format!("  plate area A    = {}{u_area}\n", fmt_f64(out.area)));
            text.push_str(&format!(
                "  |F(L=0)|        = {}{u_f}\n",
                fmt_f64(out.reference_force)
            ));
            text.push_str(&format!("  L_max           = {}\n", fmt_f64(out.l_max)));
            if let Some(d) = &out.reported_bound_discrepancy {
                text.push_str(&format!(
                    "\nreported-bound discrepancy: quoted upper bound {} is {} times \
                     the value computed here.\n{}\n",
                    fmt_f64(d.reported_upper_bound),
                    fmt_f64(d.ratio_reported_to_computed),
                    d.note
                ));
            }
            for w in &out.warnings {
                text.push_str(&format!("warning: {w}\n"));
            }
            emit(text)
        }
    }
}

// ---------------------------------------------------------------------
// sweep bound

#[derive(Serialize)]
struct SweepBoundEcho {
    command: &'static str,
    units: &'static str,
    format: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<String>,
    delta_f: f64,
    a_min: f64,
    a_max: f64,
    points: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    area: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    disk_diameter: Option<f64>,
    label: String,
}

#[derive(Serialize)]
struct SweepBoundRow {
    a: f64,
    force: f64,
    l_max: f64,
}

#[derive(Serialize)]
struct SweepBoundOutput {
    config: SweepBoundEcho,
    units: &'static str,
    rows: Vec<SweepBoundRow>,
}

fn sweep_bound_cmd(
    args: SweepBoundArgs,
    params: &Params,
    units_pref: Option<UnitSystem>,
    format: FormatArg,
) -> CliResult<()> {
    let inputs = resolve_bound_inputs(
        args.preset,
        args.variant,
        args.delta_f,
        None,
        args.area,
        args.disk_diameter,
        None,
        params,
        units_pref,
        false,
    )?;
    let a_min = args
        .a_min
        .or(params.a_min)
        .ok_or_else(|| CliError::Usage("--a-min is required".into()))?;
    let a_max = args
        .a_max
        .or(params.a_max)
        .ok_or_else(|| CliError::Usage("--a-max is required".into()))?;
    let points = args.points.or(params.points).unwrap_or(9);

    let grid = log_grid(a_min, a_max, points)?;
    let geometry =
        PlateGeometry::from_inputs(grid[0], inputs.area_in, inputs.disk_in, &inputs.label)?;
    let record = MeasurementRecord::new(
        inputs.delta_f,
        geometry,
        &inputs.label,
        &inputs.provenance,
    )?;
    let results = bound_sweep(&record, &grid, inputs.units)?;
    let rows: Vec<SweepBoundRow> = results
        .iter()
        .map(|r| SweepBoundRow {
            a: r.inputs.geometry().separation(),
            force: -r.reference_force,
            l_max: r.l_max,
        })
        .collect();

    let out = SweepBoundOutput {
        config: SweepBoundEcho {
            command: "sweep bound",
            units: inputs.units.label(),
            format: format_label(format),
            preset: inputs.preset_name,
            variant: inputs.variant_name,
            delta_f: inputs.delta_f,
            a_min,
            a_max,
            points,
            area: inputs.area_in,
            disk_diameter: inputs.disk_in,
            label: inputs.label,
        },
        units: inputs.units.label(),
        rows,
    };

    match format {
        FormatArg::Json => emit(to_json(&out)),
        FormatArg::Csv => {
            let mut text = String::from("a,force,l_max\n");
            for row in &out.rows {
                text.push_str(&csv_row(&[
                    fmt_f64(row.a),
                    fmt_f64(row.force),
                    fmt_f64(row.l_max),
                ]));
            }
            emit(text)
        }
        FormatArg::Pretty => {
            let mut text = format!(
                "LIV bound sweep ({} units), delta_F = {}\n",
                out.units,
                fmt_f64(out.config.delta_f)
            );
            text.push_str(&format!(
                "  {:>24} {:>24} {:>24}\n",
                "a", "force(L=0)", "L_max"
            ));
            for row in &out.rows {
                text.push_str(&format!(
                    "  {:>24} {:>24} {:>24}\n",
                    fmt_f64(row.a),
                    fmt_f64(row.force),
                    fmt_f64(row.l_max)
                ));
            }
            emit(text)
        }
    }
}

// ---------------------------------------------------------------------
// sweep convergence

#[derive(Serialize)]
struct ConvergenceEcho {
    command: &'static str,
    units: &'static str,
    format: &'static str,
    a: f64,
    deltas: Vec<f64>,
    n_max: u32,
    extrapolation_order: u32,
}

#[derive(Serialize)]
struct ConvergenceRow {
    a: f64,
    delta: f64,
    raw_sum: f64,
    continuum: f64,
    subtracted: f64,
    extrapolated: f64,
    zeta_reference: f64,
}

#[derive(Serialize)]
struct ConvergenceOutput {
    config: ConvergenceEcho,
    rows: Vec<ConvergenceRow>,
    extrapolated: f64,
    error_bar: f64,
    zeta_reference: f64,
    relative_deviation: f64,
}

fn sweep_convergence_cmd(
    args: SweepConvergenceArgs,
    params: &Params,
    units_pref: Option<UnitSystem>,
    format: FormatArg,
) -> CliResult<()> {
    let units = units_pref.unwrap_or(UnitSystem::Natural);
    let a = match args.a.or(params.a) {
        Some(a) => require_separation(Some(a))?,
        None => 1.0,
    };
    let deltas = match args.deltas {
        Some(raw) => parse_delta_list(&raw)?,
        None => params
            .deltas
            .clone()
            .unwrap_or_else(|| RegulatorSchedule::default_for(a).deltas),
    };
    let n_max = args.n_max.or(params.n_max).unwrap_or(2000);
    let order = args.order.or(params.order).unwrap_or(2);

    let schedule = RegulatorSchedule {
        deltas: deltas.clone(),
        n_max,
        extrapolation_order: order,
    };
    let extrapolated = extrapolated_cutoff_energy(a, &schedule)?;
    let reference = zeta_energy_per_area(a)?.energy_per_area;
    let relative_deviation = ((extrapolated.estimate - reference) / reference).abs();

    let rows: Vec<ConvergenceRow> = extrapolated
        .samples
        .iter()
        .map(|s| ConvergenceRow {
            a: s.a,
            delta: s.delta,
            raw_sum: s.raw_sum,
            continuum: s.continuum,
            subtracted: s.subtracted,
            extrapolated: extrapolated.estimate,
            zeta_reference: reference,
        })
        .collect();

    let out = ConvergenceOutput {
        config: ConvergenceEcho {
            command: "sweep convergence",
            units: units.label(),
            format: format_label(format),
            a,
            deltas,
            n_max,
            extrapolation_order: order,
        },
        rows,
        extrapolated: extrapolated.estimate,
        error_bar: extrapolated.error_bar,
        zeta_reference: reference,
        relative_deviation,
    };

    match format {
        FormatArg::Json => emit(to_json(&out)),
        FormatArg::Csv => {
            let mut text = String::from(
                "a,delta,raw_sum,continuum,subtracted,extrapolated,zeta_reference\n",
            );
            for row in &out.rows {
                text.push_str(&csv_row(&[
                    fmt_f64(row.a),
                    fmt_f64(row.delta),
                    fmt_f64(row.raw_sum),
                    fmt_f64(row.continuum),
                    fmt_f64(row.subtracted),
                    fmt_f64(row.extrapolated),
                    fmt_f64(row.zeta_reference),
                ]));
            }
            emit(text)
        }
        FormatArg::Pretty => {
            let mut text = format!(
                "cutoff-oracle convergence at a = {} (natural units)\n",
                fmt_f64(out.config.a)
            );
            text.push_str(&format!(
                "  {:>24} {:>24} {:>24} {:>24}\n",
                "delta", "raw_sum", "continuum", "subtracted"
            ));
            for row in &out.rows {
                text.push_str(&format!(
                    "  {:>24} {:>24} {:>24} {:>24}\n",
                    fmt_f64(row.delta),
                    fmt_f64(row.raw_sum),
                    fmt_f64(row.continuum),
                    fmt_f64(row.subtracted)
                ));
            }
            text.push_str(&format!(
                "extrapolated = {} +/- {}\n",
                fmt_f64(out.extrapolated),
                fmt_f64(out.error_bar)
            ));
            text.push_str(&format!(
                "analytic continuation = {} (relative deviation {})\n",
                fmt_f64(out.zeta_reference),
                fmt_f64(out.relative_deviation)
            ));
            emit(text)
        }
    }
}

// ---------------------------------------------------------------------
// validate

#[derive(Serialize)]
struct ValidateEcho {
    command: &'static str,
    units: &'static str,
    format: &'static str,
    grid_min: f64,
    grid_max: f64,
    grid_points: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<String>,
    check_bianchi: bool,
    check_double_trace: bool,
}

#[derive(Serialize)]
struct AgreementOut {
    a: f64,
    extrapolated: f64,
    error_bar: f64,
    zeta_reference: f64,
    relative_deviation: f64,
}

#[derive(Serialize)]
struct KfReportOut {
    valid: bool,
    violations: Vec<String>,
    warnings: Vec<String>,
}

#[derive(Serialize)]
struct ValidateOutput {
    config: ValidateEcho,
    tolerance: f64,
    rows: Vec<AgreementOut>,
    worst_relative_deviation: f64,
    agreement_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    kf_report: Option<KfReportOut>,
}

fn validate_cmd(
    args: ValidateArgs,
    params: &Params,
    units_pref: Option<UnitSystem>,
    format: FormatArg,
) -> CliResult<()> {
    let units = units_pref.unwrap_or(UnitSystem::Natural);
    let grid_min = args.grid_min.or(params.grid_min).unwrap_or(0.1);
    let grid_max = args.grid_max.or(params.grid_max).unwrap_or(10.0);
    let grid_points = args.grid_points.or(params.grid_points).unwrap_or(10);

    let grid = log_grid(grid_min, grid_max, grid_points)?;
    let agreement = oracle_zeta_agreement(&grid)?;
    let rows: Vec<AgreementOut> = agreement
        .iter()
        .map(|r| AgreementOut {
            a: r.a,
            extrapolated: r.extrapolated,
            error_bar: r.error_bar,
            zeta_reference: r.zeta_reference,
            relative_deviation: r.relative_deviation,
        })
        .collect();
    let worst = rows
        .iter()
        .map(|r| r.relative_deviation)
        .fold(0.0, f64::max);
    let agreement_pass = worst < AGREEMENT_TOLERANCE;

    let input_path = args.input.or_else(|| params.input.clone());
    let kf_report = match &input_path {
        Some(path) => {
            let loaded = load_kf(path)?;
            let report = validate_kf_with(
                &loaded.tensor,
                ValidationOptions {
                    bianchi: args.check_bianchi,
                    double_traceless: args.check_double_trace,
                },
            )?;
            Some(KfReportOut {
                valid: report.is_valid(),
                violations: report.violations.iter().map(|v| v.to_string()).collect(),
                warnings: report
                    .large_entries
                    .iter()
                    .map(|(idx, v)| {
                        format!(
                            "entry ({},{},{},{}) = {v:e} is large for a coefficient \
                             expected below 1e-2",
                            idx[0], idx[1], idx[2], idx[3]
                        )
                    })
                    .collect(),
            })
        }
        None => None,
    };

    let out = ValidateOutput {
        config: ValidateEcho {
            command: "validate",
            units: units.label(),
            format: format_label(format),
            grid_min,
            grid_max,
            grid_points,
            input: input_path.as_ref().map(|p| p.display().to_string()),
            check_bianchi: args.check_bianchi,
            check_double_trace: args.check_double_trace,
        },
        tolerance: AGREEMENT_TOLERANCE,
        rows,
        worst_relative_deviation: worst,
        agreement_pass,
        kf_report,
    };

    match format {
        FormatArg::Json => emit(to_json(&out))?,
        FormatArg::Csv => {
            let mut text = String::from(
                "a,extrapolated,error_bar,zeta_reference,relative_deviation\n",
            );
            for row in &out.rows {
                text.push_str(&csv_row(&[
                    fmt_f64(row.a),
                    fmt_f64(row.extrapolated),
                    fmt_f64(row.error_bar),
                    fmt_f64(row.zeta_reference),
                    fmt_f64(row.relative_deviation),
                ]));
            }
            emit(text)?;
        }
        FormatArg::Pretty => {
            let mut text = format!(
                "cutoff oracle vs analytic continuation, {} points over [{}, {}] \
                 (tolerance {:.1e})\n",
                out.config.grid_points, out.config.grid_min, out.config.grid_max, out.tolerance
            );
            text.push_str(&format!(
                "  {:>24} {:>24} {:>24} {:>24}\n",
                "a", "extrapolated", "reference", "rel_deviation"
            ));
            for row in &out.rows {
                text.push_str(&format!(
                    "  {:>24} {:>24} {:>24} {:>24}\n",
                    fmt_f64(row.a),
                    fmt_f64(row.extrapolated),
                    fmt_f64(row.zeta_reference),
                    fmt_f64(row.relative_deviation)
                ));
            }
            text.push_str(&format!(
                "worst relative deviation: {} -> {}\n",
                fmt_f64(out.worst_relative_deviation),
                if out.agreement_pass { "pass" } else { "FAIL" }
            ));
            if let Some(report) = &out.kf_report {
                if report.valid {
                    text.push_str("k_F file: all required symmetries hold\n");
                } else {
                    text.push_str("k_F file: symmetry violations found\n");
                    for v in &report.violations {
                        text.push_str(&format!("  violation: {v}\n"));
                    }
                }
                for w in &report.warnings {
                    text.push_str(&format!("warning: {w}\n"));
                }
            }
            emit(text)?;
        }
    }

    if !out.agreement_pass {
        return Err(CliError::Domain(format!(
            "oracle disagrees with the analytic continuation: worst relative deviation \
             {:e} exceeds {AGREEMENT_TOLERANCE:e}",
            out.worst_relative_deviation
        )));
    }
    if let Some(report) = &out.kf_report {
        if !report.valid {
            return Err(CliError::Domain(format!(
                "k_F file violates required symmetries: {}",
                report.violations.join("; ")
            )));
        }
    }
    Ok(())
}
