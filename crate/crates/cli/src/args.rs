//! Command-line surface: subcommands and flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "casimir-liv",
    version,
    about = "Casimir energy, pressure, and force with a Lorentz-invariance-violation \
             correction factor, from SME photon-sector coefficients",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// TOML config supplying defaults for any flag; explicit flags win
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Unit system for inputs and outputs [default: natural]
    #[arg(long, global = true, value_enum)]
    pub units: Option<UnitArg>,

    /// Shorthand for --units si
    #[arg(long, global = true, conflicts_with = "units")]
    pub si: bool,

    /// Output format [default: pretty]
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum UnitArg {
    /// hbar = c = 1, lengths dimensionless
    Natural,
    /// meters, newtons, pascals; CODATA constants
    Si,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Derive the constitutive matrices (and optionally the LIV factor L)
    /// from a k_F coefficient file
    Kappa(KappaArgs),
    /// Enumerate the Dirichlet/Neumann mode spectrum between the plates
    Modes(ModesArgs),
    /// Vacuum energy per area, pressure, and force for one configuration
    Energy(ObservableArgs),
    /// Casimir force for one configuration (same record as `energy`)
    Force(ObservableArgs),
    /// Upper bound on the LIV factor from a force-accuracy measurement
    Bound(BoundArgs),
    /// Tables: bound versus separation, or regulator convergence
    Sweep(SweepArgs),
    /// Cross-check the cutoff oracle against the analytic continuation
    /// (and optionally validate a k_F file)
    Validate(ValidateArgs),
}

#[derive(Args, Debug)]
pub struct KappaArgs {
    /// k_F coefficient file (TOML)
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,

    /// Mean-square electric field; with --b-sq, enables the L evaluation
    #[arg(long, value_name = "E2")]
    pub e_sq: Option<f64>,

    /// Mean-square magnetic field
    #[arg(long, value_name = "B2")]
    pub b_sq: Option<f64>,

    /// Electric fluctuation direction "x,y,z" (omit for the rotational
    /// average)
    #[arg(long, value_name = "X,Y,Z")]
    pub e_dir: Option<String>,

    /// Magnetic fluctuation direction "x,y,z"
    #[arg(long, value_name = "X,Y,Z")]
    pub b_dir: Option<String>,

    /// Also enforce the first-Bianchi cyclic identity
    #[arg(long)]
    pub check_bianchi: bool,

    /// Also enforce double-tracelessness
    #[arg(long)]
    pub check_double_trace: bool,
}

#[derive(Args, Debug)]
pub struct ModesArgs {
    /// Plate separation
    #[arg(long)]
    pub a: Option<f64>,

    /// Highest frequency to enumerate
    #[arg(long)]
    pub omega_max: Option<f64>,

    /// Transverse samples per branch [default: 1, i.e. k_T = 0 only]
    #[arg(long)]
    pub k_samples: Option<u32>,

    /// LIV factor; adds a (1+L)-shifted frequency column
    #[arg(long)]
    pub l: Option<f64>,
}

#[derive(Args, Debug)]
pub struct ObservableArgs {
    /// Plate separation
    #[arg(long)]
    pub a: Option<f64>,

    /// LIV factor [default: 0]
    #[arg(long)]
    pub l: Option<f64>,

    /// Plate area
    #[arg(long, conflicts_with = "disk_diameter")]
    pub area: Option<f64>,

    /// Disk diameter (area = pi (d/2)^2)
    #[arg(long)]
    pub disk_diameter: Option<f64>,

    /// Geometry description for the output record
    #[arg(long)]
    pub label: Option<String>,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    /// Named preset supplying geometry, accuracy, and units
    /// (directory overridable via CASIMIR_LIV_PRESET_DIR)
    #[arg(long, value_name = "NAME")]
    pub preset: Option<String>,

    /// Which preset variant to use [default: the preset's default]
    #[arg(long, value_name = "NAME")]
    pub variant: Option<String>,

    /// Force measurement accuracy (N in SI)
    #[arg(long)]
    pub delta_f: Option<f64>,

    /// Plate separation
    #[arg(long)]
    pub a: Option<f64>,

    /// Plate area
    #[arg(long, conflicts_with = "disk_diameter")]
    pub area: Option<f64>,

    /// Disk diameter
    #[arg(long)]
    pub disk_diameter: Option<f64>,

    /// Geometry description
    #[arg(long)]
    pub label: Option<String>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(subcommand)]
    pub kind: SweepKind,
}

#[derive(Subcommand, Debug)]
pub enum SweepKind {
    /// LIV bound across a logarithmic grid of separations
    Bound(SweepBoundArgs),
    /// Cutoff-oracle convergence table at one separation
    Convergence(SweepConvergenceArgs),
}

#[derive(Args, Debug)]
pub struct SweepBoundArgs {
    /// Named preset supplying geometry, accuracy, and units
    #[arg(long, value_name = "NAME")]
    pub preset: Option<String>,

    /// Which preset variant to use
    #[arg(long, value_name = "NAME")]
    pub variant: Option<String>,

    /// Force measurement accuracy (N in SI)
    #[arg(long)]
    pub delta_f: Option<f64>,

    /// Plate area
    #[arg(long, conflicts_with = "disk_diameter")]
    pub area: Option<f64>,

    /// Disk diameter
    #[arg(long)]
    pub disk_diameter: Option<f64>,

    /// Smallest separation in the grid
    #[arg(long)]
    pub a_min: Option<f64>,

    /// Largest separation in the grid
    #[arg(long)]
    pub a_max: Option<f64>,

    /// Number of grid points [default: 9]
    #[arg(long)]
    pub points: Option<u32>,
}

#[derive(Args, Debug)]
pub struct SweepConvergenceArgs {
    /// Plate separation [default: 1]
    #[arg(long)]
    pub a: Option<f64>,

    /// Comma-separated cutoff values, strictly decreasing
    /// [default: 0.08a,0.04a,0.02a]
    #[arg(long, value_name = "D1,D2,...")]
    pub deltas: Option<String>,

    /// Mode-sum truncation [default: 2000]
    #[arg(long)]
    pub n_max: Option<u32>,

    /// Richardson extrapolation order [default: 2]
    #[arg(long)]
    pub order: Option<u32>,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Lower edge of the separation grid [default: 0.1]
    #[arg(long)]
    pub grid_min: Option<f64>,

    /// Upper edge of the separation grid [default: 10]
    #[arg(long)]
    pub grid_max: Option<f64>,

    /// Number of grid points [default: 10]
    #[arg(long)]
    pub grid_points: Option<u32>,

    /// Also validate a k_F coefficient file
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,

    /// Enforce the first-Bianchi cyclic identity on --input
    #[arg(long)]
    pub check_bianchi: bool,

    /// Enforce double-tracelessness on --input
    #[arg(long)]
    pub check_double_trace: bool,
}
