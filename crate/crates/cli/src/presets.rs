//! Named input presets for the bound estimator.
//!
//! Presets ship inside the binary (compiled in from `presets/` at the
//! repository root), so `--preset paper_inputs` works from any directory.
//! Setting `CASIMIR_LIV_PRESET_DIR` instead loads `<dir>/<name>.toml`
//! from disk — the only environment variable the program reads.

use serde::Deserialize;

use crate::error::{CliError, CliResult};

/// Directory-override environment variable.
pub const PRESET_DIR_ENV: &str = "CASIMIR_LIV_PRESET_DIR";

const PAPER_INPUTS: &str = include_str!("../../../presets/paper_inputs.toml");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Preset {
    /// Unit system the preset's numbers are written in.
    pub units: Option<String>,
    pub geometry: PresetGeometry,
    #[serde(rename = "variant")]
    pub variants: Vec<PresetVariant>,
    pub discrepancy: Option<PresetDiscrepancy>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetGeometry {
    pub separation_a: f64,
    pub disk_diameter: Option<f64>,
    pub area: Option<f64>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetVariant {
    pub name: String,
    pub delta_f: f64,
    pub note: Option<String>,
    #[serde(default)]
    pub default: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetDiscrepancy {
    /// The upper bound quoted alongside these inputs in the literature.
    pub reported_upper_bound: f64,
    /// Why this program's output differs from it.
    pub note: String,
}

impl Preset {
    /// The requested variant, or the preset's default.
    pub fn variant(&self, name: Option<&str>) -> CliResult<&PresetVariant> {
        match name {
            Some(wanted) => self.variants.iter().find(|v| v.name == wanted).ok_or_else(|| {
                let known: Vec<&str> = self.variants.iter().map(|v| v.name.as_str()).collect();
                CliError::Usage(format!(
                    "unknown preset variant '{wanted}'; available: {}",
                    known.join(", ")
                ))
            }),
            None => Ok(self
                .variants
                .iter()
                .find(|v| v.default)
                .unwrap_or_else(|| &self.variants[0])),
        }
    }
}

pub fn load(name: &str) -> CliResult<Preset> {
    let text = match std::env::var_os(PRESET_DIR_ENV) {
        Some(dir) => {
            let path = std::path::Path::new(&dir).join(format!("{name}.toml"));
            std::fs::read_to_string(&path).map_err(|e| {
                CliError::Io(format!("cannot read preset {}: {e}", path.display()))
            })?
        }
        None => match name {
            "paper_inputs" => PAPER_INPUTS.to_owned(),
            other => {
                return Err(CliError::Usage(format!(
                    "unknown preset '{other}'; available: paper_inputs"
                )))
            }
        },
    };
    let preset: Preset = toml::from_str(&text)
        .map_err(|e| CliError::Io(format!("cannot parse preset '{name}': {e}")))?;
    if preset.variants.is_empty() {
        return Err(CliError::Io(format!(
            "preset '{name}' defines no variants"
        )));
    }
    Ok(preset)
}
