//! Field statistics, the medium, and the scalar LIV factor
//!
//! ```text
//! L = (κ_DE·E² + κ_HB·B²) / (ε E² + B²/μ)
//! ```
//!
//! The numerator writes a matrix against a scalar mean square, which is
//! only meaningful once one says how the fluctuations point. Three
//! readings are supported, chosen by the [`FieldStats`] variant:
//! rotationally averaged (κ enters through tr κ/3), per-Cartesian-component
//! mean squares with vanishing cross-correlations, and scalar mean squares
//! along definite unit directions (full quadratic form ê·κ·ê). The cross
//! blocks κ_DB/κ_HE never appear: their two contributions cancel exactly
//! (see [`KappaSet::cross_term`]).

// Indexed loops: same convention as the κ module — the indices are the
// notation.
#![allow(clippy::needless_range_loop)]

use crate::sme::kappa::{KappaSet, Matrix3};
use crate::{Error, Result};

/// Relative permittivity and permeability of the medium between the
/// plates. Vacuum (`ε = μ = 1`) unless the input says otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Medium {
    epsilon: f64,
    mu: f64,
}

impl Medium {
    /// ε = μ = 1.
    pub fn vacuum() -> Self {
        Medium {
            epsilon: 1.0,
            mu: 1.0,
        }
    }

    /// Checked constructor: both constants strictly positive and finite.
    pub fn new(epsilon: f64, mu: f64) -> Result<Self> {
        if !epsilon.is_finite() {
            return Err(Error::NonFinite { name: "epsilon" });
        }
        if !mu.is_finite() {
            return Err(Error::NonFinite { name: "mu" });
        }
        if epsilon <= 0.0 {
            return Err(Error::NonPositive {
                name: "epsilon",
                value: epsilon,
            });
        }
        if mu <= 0.0 {
            return Err(Error::NonPositive {
                name: "mu",
                value: mu,
            });
        }
        Ok(Medium { epsilon, mu })
    }

    /// Relative permittivity ε.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Relative permeability μ.
    pub fn mu(&self) -> f64 {
        self.mu
    }
}

impl Default for Medium {
    fn default() -> Self {
        Medium::vacuum()
    }
}

/// Mean-square field statistics entering the correction factor.
///
/// Units are V²/m² and T²-equivalents in SI work or plain numbers in
/// natural units; only ratios matter, so the factor is unit-free either
/// way.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldStats {
    /// Rotationally averaged fluctuations: scalar ⟨E²⟩ and ⟨B²⟩, with the
    /// κ matrices entering through their traces over 3.
    Isotropic {
        /// Scalar mean-square electric field.
        e_sq: f64,
        /// Scalar mean-square magnetic field.
        b_sq: f64,
    },
    /// Per-Cartesian-component mean squares ⟨E_j²⟩, ⟨B_j²⟩ with zero
    /// cross-correlations. Only the equal-component (isotropic) case is
    /// accepted by [`liv_factor`]; anything else needs directions.
    PerComponent {
        /// ⟨E_x²⟩, ⟨E_y²⟩, ⟨E_z²⟩.
        e_sq: [f64; 3],
        /// ⟨B_x²⟩, ⟨B_y²⟩, ⟨B_z²⟩.
        b_sq: [f64; 3],
    },
    /// Scalar mean squares along definite directions (need not be
    /// normalized; zero direction is only legal for a zero mean square).
    Directed {
        /// Scalar mean-square electric field.
        e_sq: f64,
        /// Direction of the electric fluctuations.
        e_dir: [f64; 3],
        /// Scalar mean-square magnetic field.
        b_sq: f64,
        /// Direction of the magnetic fluctuations.
        b_dir: [f64; 3],
    },
}

/// The scalar LIV factor `L`.
///
/// Invariant under common positive rescaling of the field statistics (the
/// expression is a ratio), and bounded:
/// `|L| ≤ max(‖κ_DE‖∞, ‖κ_HB‖∞) / min(ε, 1/μ)`.
///
/// # Errors
///
/// Zero field energy (both mean squares zero), negative or non-finite
/// statistics, anisotropic per-component input (no directions to evaluate
/// the quadratic form along), or a zero direction paired with a nonzero
/// mean square.
pub fn liv_factor(k: &KappaSet, f: &FieldStats, m: &Medium) -> Result<f64> {
    let (numerator, e_total, b_total) = match f {
        FieldStats::Isotropic { e_sq, b_sq } => {
            check_mean_square("E_sq", *e_sq)?;
            check_mean_square("B_sq", *b_sq)?;
            let num = trace(&k.kappa_de) / 3.0 * e_sq + trace(&k.kappa_hb) / 3.0 * b_sq;
            (num, *e_sq, *b_sq)
        }
        FieldStats::PerComponent { e_sq, b_sq } => {
            for v in e_sq {
                check_mean_square("E_sq component", *v)?;
            }
            for v in b_sq {
                check_mean_square("B_sq component", *v)?;
            }
            let e_iso = e_sq[0] == e_sq[1] && e_sq[1] == e_sq[2];
            let b_iso = b_sq[0] == b_sq[1] && b_sq[1] == b_sq[2];
            if !(e_iso && b_iso) {
                return Err(Error::AnisotropicFields);
            }
            let mut num = 0.0;
            for j in 0..3 {
                num += k.kappa_de[j][j] * e_sq[j];
            }
            for j in 0..3 {
                num += k.kappa_hb[j][j] * b_sq[j];
            }
            let e_total = e_sq[0] + e_sq[1] + e_sq[2];
            let b_total = b_sq[0] + b_sq[1] + b_sq[2];
            (num, e_total, b_total)
        }
        FieldStats::Directed {
            e_sq,
            e_dir,
            b_sq,
            b_dir,
        } => {
            check_mean_square("E_sq", *e_sq)?;
            check_mean_square("B_sq", *b_sq)?;
            let mut num = 0.0;
            if *e_sq > 0.0 {
                num += quadratic_form(&k.kappa_de, unit("E direction", *e_dir)?) * e_sq;
            }
            if *b_sq > 0.0 {
                num += quadratic_form(&k.kappa_hb, unit("B direction", *b_dir)?) * b_sq;
            }
            (num, *e_sq, *b_sq)
        }
    };

    let denominator = m.epsilon() * e_total + b_total / m.mu();
    if denominator <= 0.0 {
        return Err(Error::ZeroFieldEnergy);
    }
    Ok(numerator / denominator)
}

fn check_mean_square(name: &'static str, v: f64) -> Result<()> {
    if !v.is_finite() {
        return Err(Error::NonFinite { name });
    }
    if v < 0.0 {
        return Err(Error::Negative { name, value: v });
    }
    Ok(())
}

fn trace(m: &Matrix3) -> f64 {
    m[0][0] + m[1][1] + m[2][2]
}

fn quadratic_form(m: &Matrix3, v: [f64; 3]) -> f64 {
    let mut acc = 0.0;
    for j in 0..3 {
        for k in 0..3 {
            acc += v[j] * m[j][k] * v[k];
        }
    }
    acc
}

fn unit(name: &'static str, v: [f64; 3]) -> Result<[f64; 3]> {
    for c in v {
        if !c.is_finite() {
            return Err(Error::NonFinite { name });
        }
    }
    let norm = libm::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if norm == 0.0 {
        return Err(Error::NonPositive {
            name,
            value: 0.0,
        });
    }
    Ok([v[0] / norm, v[1] / norm, v[2] / norm])
}
