//! Vacuum-energy pipeline from SME photon-sector coefficients to the
//! Lorentz-invariance-violation (LIV) correction on the Casimir effect
//! between parallel plates.
//!
//! The chain of computations is:
//!
//! 1. [`sme`] — store the rank-4 coefficient tensor `k_F`, derive the
//!    3×3 constitutive matrices κ_DE, κ_HB, κ_DB, κ_HE, and evaluate the
//!    scalar factor `L` that multiplies every vacuum observable as `(1+L)`.
//! 2. [`modes`] — Dirichlet/Neumann mode frequencies between plates,
//!    `ω = sqrt((πn/a)² + k_T²)`, and the shifted spectrum `(1+L)ω`.
//! 3. [`regularization`] — the divergent zero-point sum evaluated two
//!    independent ways: zeta-function analytic continuation (closed form)
//!    and an exponential-cutoff oracle with continuum subtraction and
//!    Richardson extrapolation in the cutoff.
//! 4. [`observables`] — Casimir pressure `-(1+L)π²ħc/240a⁴`, force, and
//!    energy per area in natural or SI units.
//! 5. [`bounds`] — an experimental force accuracy ΔF turned into an upper
//!    bound `L ≤ ΔF/|F|`.
//!
//! The crate is `no_std` (with `alloc`); all functions are pure and all
//! values are immutable after construction, so everything is safe to share
//! across threads. IO, file formats, and the command-line front end live in
//! the companion `casimir-liv-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod error;
pub mod modes;
pub mod observables;
pub mod regularization;
pub mod sme;
pub mod zeta;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
