//! Optional TOML config file: the same knobs as the flags, with flags
//! winning wherever both are given. Unknown keys are rejected, not
//! ignored.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    /// "natural" or "si".
    pub units: Option<String>,
    /// "json", "csv", or "pretty".
    pub format: Option<String>,
    #[serde(default)]
    pub params: Params,
}

/// Per-subcommand numeric defaults; each subcommand reads the subset it
/// understands.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub input: Option<PathBuf>,
    pub a: Option<f64>,
    pub l: Option<f64>,
    pub area: Option<f64>,
    pub disk_diameter: Option<f64>,
    pub label: Option<String>,
    pub e_sq: Option<f64>,
    pub b_sq: Option<f64>,
    pub e_dir: Option<[f64; 3]>,
    pub b_dir: Option<[f64; 3]>,
    pub omega_max: Option<f64>,
    pub k_samples: Option<u32>,
    pub delta_f: Option<f64>,
    pub preset: Option<String>,
    pub variant: Option<String>,
    pub a_min: Option<f64>,
    pub a_max: Option<f64>,
    pub points: Option<u32>,
    pub deltas: Option<Vec<f64>>,
    pub n_max: Option<u32>,
    pub order: Option<u32>,
    pub grid_min: Option<f64>,
    pub grid_max: Option<f64>,
    pub grid_points: Option<u32>,
}

pub fn load(path: &Path) -> CliResult<FileConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text)
        .map_err(|e| CliError::Io(format!("cannot parse config {}: {e}", path.display())))
}
