//! Crate-wide error type.
//!
//! All fallible library entry points return [`Error`]; none of them panic
//! on bad input. Variants carry enough context (parameter name, offending
//! value, failed relation) for a caller to print a useful message without
//! re-deriving anything.

use core::fmt;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A `k_F` entry breaks one of the required index symmetries.
    Symmetry {
        /// Human-readable statement of the violated relation.
        relation: &'static str,
        /// Index quadruple at which the relation first failed.
        indices: [u8; 4],
        /// Value stored at that quadruple.
        found: f64,
        /// Value the symmetry demands there.
        expected: f64,
    },
    /// An input that must be strictly positive was zero or negative.
    NonPositive {
        /// Parameter name as it appears in the API.
        name: &'static str,
        /// The rejected value.
        value: f64,
    },
    /// An input that must be non-negative was negative.
    Negative {
        /// Parameter name as it appears in the API.
        name: &'static str,
        /// The rejected value.
        value: f64,
    },
    /// An input that must be finite was NaN or infinite.
    NonFinite {
        /// Parameter name as it appears in the API.
        name: &'static str,
    },
    /// The field-energy denominator `εE² + B²/μ` vanished, so the
    /// correction factor is undefined.
    ZeroFieldEnergy,
    /// Per-component field statistics were anisotropic; the κ quadratic
    /// form needs explicit directions (or the isotropic form) to be well
    /// defined.
    AnisotropicFields,
    /// A LIV factor at or below −1 would flip the sign of the whole
    /// spectrum; nothing downstream is meaningful there.
    UnphysicalLiv {
        /// The rejected factor.
        value: f64,
    },
    /// A regulator schedule was structurally unusable (empty, repeated, or
    /// not strictly decreasing).
    BadSchedule {
        /// Short description of what is wrong with the schedule.
        reason: &'static str,
    },
    /// Truncating the regulated sum at `n_max` would leave a tail larger
    /// than the accuracy target: `exp(-δ π n_max / a)` must stay below
    /// 1e-12 for every δ in the schedule.
    TailTooLarge {
        /// The cutoff δ whose tail is too fat.
        delta: f64,
        /// Size of the tail-bound factor `exp(-δ π n_max / a)`.
        tail: f64,
    },
    /// The Riemann zeta function was evaluated at its single pole, `s = 1`.
    ZetaPole,
    /// A regulated sum was requested in a region where it diverges.
    Divergent {
        /// Parameter name as it appears in the API.
        name: &'static str,
        /// The rejected value.
        value: f64,
    },
    /// An input sequence was empty where at least one element is required.
    EmptyInput {
        /// Parameter name as it appears in the API.
        name: &'static str,
    },
    /// Contradictory or incomplete plate-geometry inputs.
    Geometry {
        /// What was wrong with the specification.
        reason: &'static str,
    },
    /// An argument fell outside the range where the implementation is
    /// accurate (documented per function).
    OutOfDomain {
        /// Parameter name as it appears in the API.
        name: &'static str,
        /// The rejected value.
        value: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Symmetry {
                relation,
                indices,
                found,
                expected,
            } => write!(
                f,
                "k_F symmetry violated: {relation} at indices ({}, {}, {}, {}): \
                 found {found:e}, expected {expected:e}",
                indices[0], indices[1], indices[2], indices[3]
            ),
            Error::NonPositive { name, value } => {
                write!(f, "{name} must be strictly positive, got {value:e}")
            }
            Error::Negative { name, value } => {
                write!(f, "{name} must be non-negative, got {value:e}")
            }
            Error::NonFinite { name } => write!(f, "{name} must be finite"),
            Error::ZeroFieldEnergy => write!(
                f,
                "field energy density is zero; the correction factor is undefined"
            ),
            Error::AnisotropicFields => write!(
                f,
                "anisotropic field statistics: supply direction vectors or use the isotropic form"
            ),
            Error::UnphysicalLiv { value } => write!(
                f,
                "LIV factor L = {value:e} must be greater than -1 (the spectrum would change sign)"
            ),
            Error::BadSchedule { reason } => write!(f, "bad regulator schedule: {reason}"),
            Error::TailTooLarge { delta, tail } => write!(
                f,
                "regulated sum truncated too early at delta = {delta:e}: \
                 tail bound {tail:e} exceeds 1e-12; raise n_max or delta"
            ),
            Error::ZetaPole => write!(f, "zeta(s) evaluated at its pole s = 1"),
            Error::Divergent { name, value } => write!(
                f,
                "regulated sum diverges for {name} = {value:e}"
            ),
            Error::EmptyInput { name } => write!(f, "{name} must not be empty"),
            Error::Geometry { reason } => write!(f, "invalid plate geometry: {reason}"),
            Error::OutOfDomain { name, value } => write!(
                f,
                "{name} = {value:e} is outside the supported domain"
            ),
        }
    }
}

impl core::error::Error for Error {}
