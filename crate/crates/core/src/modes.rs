//! Mode frequencies between parallel plates and the LIV-shifted spectrum.
//!
//! Two massless scalar branches stand in for the electromagnetic field: a
//! Dirichlet tower (field vanishes on the plates, n ≥ 1) and a Neumann
//! tower (normal derivative vanishes, n ≥ 0). Both share
//! `ω = sqrt((πn/a)² + k_T²)` with `k_T` the transverse wavenumber, so for
//! n ≥ 1 the branches are exactly degenerate — the origin of the weight-2
//! count in the regulated energy sum. Everything here is in natural units
//! (inverse length); unit dressing happens in [`crate::observables`].

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Error, Result};

/// Which scalar branch a mode belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCondition {
    /// Field vanishes on the plates; n starts at 1.
    Dirichlet,
    /// Normal derivative vanishes; n starts at 0.
    Neumann,
}

/// One mode between the plates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSpec {
    /// Scalar branch.
    pub bc: BoundaryCondition,
    /// Longitudinal mode number.
    pub n: u32,
    /// Transverse wavenumber magnitude (≥ 0, inverse length).
    pub k_t: f64,
    /// Plate separation (> 0, length).
    pub a: f64,
}

impl ModeSpec {
    fn check(&self) -> Result<()> {
        if !self.a.is_finite() {
            return Err(Error::NonFinite {
                name: "plate separation a",
            });
        }
        if self.a <= 0.0 {
            return Err(Error::NonPositive {
                name: "plate separation a",
                value: self.a,
            });
        }
        if !self.k_t.is_finite() {
            return Err(Error::NonFinite {
                name: "transverse wavenumber k_T",
            });
        }
        if self.k_t < 0.0 {
            return Err(Error::Negative {
                name: "transverse wavenumber k_T",
                value: self.k_t,
            });
        }
        if self.bc == BoundaryCondition::Dirichlet && self.n == 0 {
            return Err(Error::NonPositive {
                name: "Dirichlet mode number n",
                value: 0.0,
            });
        }
        Ok(())
    }
}

/// Angular frequency `sqrt((πn/a)² + k_T²)` in natural units.
///
/// Strictly increasing in both `n` and `k_T`, and `≥ πn/a` with equality
/// exactly at `k_T = 0`.
///
/// # Errors
///
/// Invalid [`ModeSpec`] — in particular a Dirichlet mode with n = 0, which
/// is not part of that tower.
pub fn mode_frequency(m: &ModeSpec) -> Result<f64> {
    m.check()?;
    let longitudinal = PI * f64::from(m.n) / m.a;
    Ok(libm::hypot(longitudinal, m.k_t))
}

/// The LIV-shifted frequency `(1 + L)·ω₀`.
///
/// # Errors
///
/// Negative or non-finite `ω₀`, and `L ≤ −1` (the whole spectrum would
/// flip sign).
pub fn shifted_frequency(omega0: f64, l: f64) -> Result<f64> {
    if !omega0.is_finite() {
        return Err(Error::NonFinite { name: "omega0" });
    }
    if omega0 < 0.0 {
        return Err(Error::Negative {
            name: "omega0",
            value: omega0,
        });
    }
    if !l.is_finite() {
        return Err(Error::NonFinite { name: "L" });
    }
    if l <= -1.0 {
        return Err(Error::UnphysicalLiv { value: l });
    }
    Ok((1.0 + l) * omega0)
}

/// Enumerate every branch with `πn/a ≤ omega_max`, sampling each at
/// `k_samples` transverse points spread uniformly over
/// `[0, sqrt(omega_max² − (πn/a)²)]` (a single sample means `k_T = 0`).
///
/// Returned sorted by frequency (ties keep n-then-branch order, so the
/// output is deterministic); every frequency is ≤ `omega_max` — the top
/// sample is clamped, since `hypot` can overshoot the analytic bound by an
/// ulp.
///
/// # Errors
///
/// `a ≤ 0`, `omega_max ≤ 0`, or `k_samples = 0`.
pub fn enumerate_modes(
    a: f64,
    omega_max: f64,
    k_samples: u32,
) -> Result<Vec<(ModeSpec, f64)>> {
    if !a.is_finite() {
        return Err(Error::NonFinite {
            name: "plate separation a",
        });
    }
    if a <= 0.0 {
        return Err(Error::NonPositive {
            name: "plate separation a",
            value: a,
        });
    }
    if !omega_max.is_finite() {
        return Err(Error::NonFinite { name: "omega_max" });
    }
    if omega_max <= 0.0 {
        return Err(Error::NonPositive {
            name: "omega_max",
            value: omega_max,
        });
    }
    if k_samples == 0 {
        return Err(Error::NonPositive {
            name: "k_samples",
            value: 0.0,
        });
    }

    let mut out = Vec::new();
    let mut n = 0u32;
    loop {
        let longitudinal = PI * f64::from(n) / a;
        if longitudinal > omega_max {
            break;
        }
        let k_max = libm::sqrt((omega_max * omega_max - longitudinal * longitudinal).max(0.0));
        let branches: &[BoundaryCondition] = if n == 0 {
            &[BoundaryCondition::Neumann]
        } else {
            &[BoundaryCondition::Dirichlet, BoundaryCondition::Neumann]
        };
        for &bc in branches {
            for i in 0..k_samples {
                let k_t = if k_samples == 1 {
                    0.0
                } else {
                    k_max * f64::from(i) / f64::from(k_samples - 1)
                };
                let spec = ModeSpec { bc, n, k_t, a };
                let freq = libm::hypot(longitudinal, k_t).min(omega_max);
                out.push((spec, freq));
            }
        }
        n += 1;
    }
    // Stable sort: equal frequencies keep their insertion order.
    out.sort_by(|x, y| x.1.total_cmp(&y.1));
    Ok(out)
}
