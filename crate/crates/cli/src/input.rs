//! The k_F coefficient file.
//!
//! UTF-8 TOML; one representative entry per symmetry orbit (the loader
//! fills the partners), optional k_AF vector and medium:
//!
//! ```toml
//! kf = [
//!   { indices = [0, 1, 0, 1], value = 1.0e-17 },
//! ]
//! kaf = [0.0, 0.0, 0.0, 0.0]        # optional, stored only
//! medium = { epsilon = 1.0, mu = 1.0 }  # optional, defaults to vacuum
//! ```

use std::path::Path;

use casimir_liv::sme::{KafVector, KfTensor, Medium};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct KfFile {
    #[serde(default)]
    kf: Vec<KfEntry>,
    kaf: Option<[f64; 4]>,
    medium: Option<MediumSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct KfEntry {
    indices: [u8; 4],
    value: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MediumSpec {
    epsilon: Option<f64>,
    mu: Option<f64>,
}

pub struct LoadedKf {
    pub tensor: KfTensor,
    pub kaf: Option<KafVector>,
    pub medium: Medium,
}

pub fn load_kf(path: &Path) -> CliResult<LoadedKf> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let parsed: KfFile = toml::from_str(&text)
        .map_err(|e| CliError::Io(format!("cannot parse {}: {e}", path.display())))?;

    let entries: Vec<([u8; 4], f64)> = parsed.kf.iter().map(|e| (e.indices, e.value)).collect();
    let tensor = KfTensor::from_entries(&entries)?;

    let kaf = parsed.kaf.map(KafVector::new).transpose()?;

    let medium = match parsed.medium {
        Some(m) => Medium::new(m.epsilon.unwrap_or(1.0), m.mu.unwrap_or(1.0))?,
        None => Medium::vacuum(),
    };

    Ok(LoadedKf {
        tensor,
        kaf,
        medium,
    })
}
