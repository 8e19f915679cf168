//! Physical Casimir observables: pressure, force, and energy per area
//! between parallel plates, dressed with the LIV factor and optionally
//! with SI units.
//!
//! Everything here is a thin, affine layer over the regularized result:
//! pressure is `−(1+L)π²ħc/240a⁴`, energy per area `−(1+L)π²ħc/720a³`,
//! force `pressure × A`. The `(1+L)` factor multiplies the Lorentz-
//! invariant value — that is the whole content of the correction at the
//! level of observables — and the code keeps it literally factored so the
//! multiplicativity is exact in floating point, not just analytically.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Error, Result};

/// Unit conventions for reported observables.
///
/// Natural units set ħ = c = 1 and leave lengths dimensionless; SI pins
/// the CODATA 2018 values below so outputs are reproducible bit for bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    /// ħ = c = 1; pressures come out as length⁻⁴, energies per area as
    /// length⁻³.
    Natural,
    /// Lengths in meters, forces in newtons, pressures in pascals.
    Si,
}

impl UnitSystem {
    /// Reduced Planck constant in J·s (CODATA 2018, exact by definition).
    pub const HBAR_SI: f64 = 1.054_571_817e-34;
    /// Speed of light in m/s (exact by definition).
    pub const C_SI: f64 = 2.997_924_58e8;

    /// ħ in the system's own units.
    pub fn hbar(self) -> f64 {
        match self {
            UnitSystem::Natural => 1.0,
            UnitSystem::Si => Self::HBAR_SI,
        }
    }

    /// c in the system's own units.
    pub fn c(self) -> f64 {
        match self {
            UnitSystem::Natural => 1.0,
            UnitSystem::Si => Self::C_SI,
        }
    }

    /// The combination ħc that dresses every observable here (J·m in SI).
    pub fn hbar_c(self) -> f64 {
        self.hbar() * self.c()
    }

    /// Short name for output records.
    pub fn label(self) -> &'static str {
        match self {
            UnitSystem::Natural => "natural",
            UnitSystem::Si => "SI",
        }
    }
}

/// Parallel-plate geometry: separation plus plate area, the latter given
/// either directly or as a disk diameter.
#[derive(Debug, Clone, PartialEq)]
pub struct PlateGeometry {
    separation_a: f64,
    area: f64,
    disk_diameter: Option<f64>,
    label: String,
}

impl PlateGeometry {
    /// Geometry with the area given directly.
    ///
    /// # Errors
    ///
    /// Non-positive or non-finite separation or area.
    pub fn with_area(separation_a: f64, area: f64, label: &str) -> Result<Self> {
        check_positive(separation_a, "plate separation a")?;
        check_positive(area, "plate area A")?;
        Ok(PlateGeometry {
            separation_a,
            area,
            disk_diameter: None,
            label: String::from(label),
        })
    }

    /// Geometry with the area specified as a disk of the given diameter,
    /// `A = π (d/2)²`.
    ///
    /// # Errors
    ///
    /// Non-positive or non-finite separation or diameter.
    pub fn with_disk_diameter(separation_a: f64, diameter: f64, label: &str) -> Result<Self> {
        check_positive(separation_a, "plate separation a")?;
        check_positive(diameter, "disk diameter")?;
        let radius = diameter / 2.0;
        Ok(PlateGeometry {
            separation_a,
            area: PI * radius * radius,
            disk_diameter: Some(diameter),
            label: String::from(label),
        })
    }

    /// Build from optional area/diameter inputs, enforcing that exactly
    /// one of the two is present — the shape file formats and CLI flags
    /// funnel through here.
    ///
    /// # Errors
    ///
    /// Both supplied, neither supplied, or invalid values.
    pub fn from_inputs(
        separation_a: f64,
        area: Option<f64>,
        disk_diameter: Option<f64>,
        label: &str,
    ) -> Result<Self> {
        match (area, disk_diameter) {
            (Some(_), Some(_)) => Err(Error::Geometry {
                reason: "give either the plate area or the disk diameter, not both",
            }),
            (None, None) => Err(Error::Geometry {
                reason: "one of plate area or disk diameter is required",
            }),
            (Some(a), None) => PlateGeometry::with_area(separation_a, a, label),
            (None, Some(d)) => PlateGeometry::with_disk_diameter(separation_a, d, label),
        }
    }

    /// Same area and label, different separation.
    ///
    /// # Errors
    ///
    /// Non-positive or non-finite separation.
    pub fn at_separation(&self, separation_a: f64) -> Result<Self> {
        check_positive(separation_a, "plate separation a")?;
        let mut g = self.clone();
        g.separation_a = separation_a;
        Ok(g)
    }

    /// Plate separation.
    pub fn separation(&self) -> f64 {
        self.separation_a
    }

    /// Plate area (computed from the diameter if that is how it was
    /// given).
    pub fn area(&self) -> f64 {
        self.area
    }

    /// The disk diameter, if the area was specified that way.
    pub fn disk_diameter(&self) -> Option<f64> {
        self.disk_diameter
    }

    /// Free-text description.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Non-fatal advisories about the geometry. In SI mode a separation
    /// of a micrometer or more earns a note that the force there is too
    /// feeble to resolve — the effect is measurable only for
    /// a < 1 micrometer.
    pub fn warnings(&self, units: UnitSystem) -> Vec<String> {
        let mut warnings = Vec::new();
        if units == UnitSystem::Si && self.separation_a >= 1e-6 {
            warnings.push(String::from(
                "separation is 1 micrometer or more: the Casimir force is \
                 measurable only for a < 1 micrometer",
            ));
        }
        warnings
    }
}

fn check_positive(value: f64, name: &'static str) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NonFinite { name });
    }
    if value <= 0.0 {
        return Err(Error::NonPositive { name, value });
    }
    Ok(())
}

fn check_liv(l: f64) -> Result<()> {
    if !l.is_finite() {
        return Err(Error::NonFinite { name: "LIV factor L" });
    }
    if l <= -1.0 {
        return Err(Error::UnphysicalLiv { value: l });
    }
    Ok(())
}

/// Casimir pressure between parallel plates, `−(1+L) π²ħc / 240a⁴`
/// (pascals in SI). Negative: the plates attract.
///
/// The `(1+L)` multiplication is the final operation on the L-independent
/// base value, so `casimir_pressure(a, L) == (1+L) · casimir_pressure(a, 0)`
/// holds bitwise, not merely to rounding.
///
/// # Errors
///
/// `a ≤ 0`, non-finite inputs, or `L ≤ −1` (which would flip the vacuum
/// energy's sign and has no meaning in this framework).
pub fn casimir_pressure(a: f64, l: f64, units: UnitSystem) -> Result<f64> {
    check_positive(a, "plate separation a")?;
    check_liv(l)?;
    let a2 = a * a;
    let base = -(PI * PI) * units.hbar_c() / (240.0 * (a2 * a2));
    Ok((1.0 + l) * base)
}

/// Casimir force on the plates, `casimir_pressure × A` exactly (newtons
/// in SI). Negative = attractive.
///
/// # Errors
///
/// As [`casimir_pressure`].
pub fn casimir_force(geometry: &PlateGeometry, l: f64, units: UnitSystem) -> Result<f64> {
    Ok(casimir_pressure(geometry.separation(), l, units)? * geometry.area())
}

/// Vacuum energy per unit plate area, `−(1+L) π²ħc / 720a³` (J/m² in SI).
/// Its negative `a`-derivative is [`casimir_pressure`].
///
/// # Errors
///
/// As [`casimir_pressure`].
pub fn energy_per_area_physical(a: f64, l: f64, units: UnitSystem) -> Result<f64> {
    check_positive(a, "plate separation a")?;
    check_liv(l)?;
    let base = -(PI * PI) * units.hbar_c() / (720.0 * (a * a * a));
    Ok((1.0 + l) * base)
}

/// The full observables record for one configuration — what the CLI
/// prints for `energy` and `force`.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservablesRecord {
    /// Plate separation.
    pub a: f64,
    /// Plate area.
    pub area: f64,
    /// The LIV factor applied.
    pub l: f64,
    /// Pressure, `−(1+L)π²ħc/240a⁴`.
    pub pressure: f64,
    /// Force, `pressure × area`.
    pub force: f64,
    /// Energy per area, `−(1+L)π²ħc/720a³`.
    pub energy_per_area: f64,
    /// Unit system the numbers are expressed in.
    pub units: UnitSystem,
    /// Non-fatal advisories (e.g. measurability of the separation).
    pub warnings: Vec<String>,
}

/// Evaluate every observable for one geometry/L/unit combination.
///
/// # Errors
///
/// As [`casimir_pressure`].
pub fn observables_record(
    geometry: &PlateGeometry,
    l: f64,
    units: UnitSystem,
) -> Result<ObservablesRecord> {
    let pressure = casimir_pressure(geometry.separation(), l, units)?;
    Ok(ObservablesRecord {
        a: geometry.separation(),
        area: geometry.area(),
        l,
        pressure,
        force: pressure * geometry.area(),
        energy_per_area: energy_per_area_physical(geometry.separation(), l, units)?,
        units,
        warnings: geometry.warnings(units),
    })
}
