//! SME photon-sector coefficients: the `k_F` tensor, the κ constitutive
//! matrices derived from it, and the scalar LIV factor they produce for a
//! given field state and medium.

mod field;
mod kappa;
mod tensor;

pub use field::{liv_factor, FieldStats, Medium};
pub use kappa::{kappa_from_kf, kappa_hb_brute_force, KappaSet, Matrix3};
pub use tensor::{
    validate_kf, validate_kf_with, KafVector, KfTensor, ValidationOptions, ValidationReport,
    Violation,
};
