//! Rank-4 SME photon-sector coefficient tensor and its validation.
//!
//! `k_F` carries the index symmetries of a Riemann tensor: antisymmetry
//! within each index pair and symmetry under exchange of the pairs. The
//! constructors here keep those relations exact by construction — the
//! caller supplies one representative per symmetry orbit and every partner
//! slot is filled with the signed copy of the same f64, so downstream
//! "exact symmetry" guarantees are bitwise, not approximate.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use crate::{Error, Result};

/// Flat offset of spacetime indices (κ,λ,μ,ν), each in 0..=3, 0 = time.
#[inline]
fn flat(k: usize, l: usize, m: usize, n: usize) -> usize {
    ((k * 4 + l) * 4 + m) * 4 + n
}

/// The eight symmetry partners of an index quadruple, with the sign each
/// one carries relative to the representative: antisymmetric under a swap
/// within either pair, symmetric under exchange of the pairs.
fn orbit(idx: [u8; 4]) -> [([u8; 4], f64); 8] {
    let [k, l, m, n] = idx;
    [
        ([k, l, m, n], 1.0),
        ([l, k, m, n], -1.0),
        ([k, l, n, m], -1.0),
        ([l, k, n, m], 1.0),
        ([m, n, k, l], 1.0),
        ([n, m, k, l], -1.0),
        ([m, n, l, k], -1.0),
        ([n, m, l, k], 1.0),
    ]
}

/// Dimensionless CPT-even coefficient tensor `(k_F)^{κλμν}`.
///
/// Stored dense (4⁴ = 256 slots). Build it with [`KfTensor::from_entries`],
/// which completes each supplied entry over its symmetry orbit, or start
/// from [`KfTensor::zero`]. [`KfTensor::with_raw_entry`] writes a single
/// slot *without* completion and exists so deliberately inconsistent
/// tensors can be fed to [`validate_kf`].
#[derive(Clone, PartialEq)]
pub struct KfTensor {
    components: [f64; 256],
}

impl KfTensor {
    /// The all-zero tensor (no Lorentz violation).
    pub fn zero() -> Self {
        KfTensor {
            components: [0.0; 256],
        }
    }

    /// Build from orbit representatives: each `(indices, value)` pair is
    /// written to all eight symmetry partners with the appropriate sign.
    ///
    /// Listing two entries whose orbits overlap is fine when the implied
    /// values agree exactly; a disagreement is an error, never a silent
    /// overwrite. A nonzero value with a repeated index inside a pair is
    /// rejected immediately (antisymmetry forces that slot to vanish).
    pub fn from_entries(entries: &[([u8; 4], f64)]) -> Result<Self> {
        let mut components = [0.0f64; 256];
        let mut seen = [false; 256];
        for &(idx, value) in entries {
            for &i in &idx {
                if i > 3 {
                    return Err(Error::OutOfDomain {
                        name: "k_F index (must be 0..=3)",
                        value: f64::from(i),
                    });
                }
            }
            if !value.is_finite() {
                return Err(Error::NonFinite {
                    name: "k_F entry value",
                });
            }
            if (idx[0] == idx[1] || idx[2] == idx[3]) && value != 0.0 {
                return Err(Error::Symmetry {
                    relation: "antisymmetry forces components with a repeated index within a pair to vanish",
                    indices: idx,
                    found: value,
                    expected: 0.0,
                });
            }
            for (partner, sign) in orbit(idx) {
                // Normalize zeros so no slot ever holds -0.0.
                let signed = if value == 0.0 { 0.0 } else { sign * value };
                let slot = flat(
                    partner[0] as usize,
                    partner[1] as usize,
                    partner[2] as usize,
                    partner[3] as usize,
                );
                if seen[slot] && components[slot] != signed {
                    return Err(Error::Symmetry {
                        relation: "conflicting values for symmetry-related entries",
                        indices: partner,
                        found: signed,
                        expected: components[slot],
                    });
                }
                components[slot] = signed;
                seen[slot] = true;
            }
        }
        Ok(KfTensor { components })
    }

    /// Component `(k_F)^{κλμν}`.
    ///
    /// Indices must be in 0..=3 (panics otherwise — this is the hot read
    /// in the contraction loops, and out-of-range indices there are a bug,
    /// not an input condition).
    #[inline]
    pub fn value(&self, kappa: usize, lambda: usize, mu: usize, nu: usize) -> f64 {
        self.components[flat(kappa, lambda, mu, nu)]
    }

    /// Write one slot without symmetry completion.
    ///
    /// This exists to construct tensors that *break* the symmetries, so
    /// [`validate_kf`] has something real to report on. Regular inputs
    /// should go through [`KfTensor::from_entries`].
    pub fn with_raw_entry(mut self, indices: [u8; 4], value: f64) -> Result<Self> {
        for &i in &indices {
            if i > 3 {
                return Err(Error::OutOfDomain {
                    name: "k_F index (must be 0..=3)",
                    value: f64::from(i),
                });
            }
        }
        if !value.is_finite() {
            return Err(Error::NonFinite {
                name: "k_F entry value",
            });
        }
        self.components[flat(
            indices[0] as usize,
            indices[1] as usize,
            indices[2] as usize,
            indices[3] as usize,
        )] = value;
        Ok(self)
    }

    /// Largest absolute component, used for the smallness warning.
    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for &v in &self.components {
            if v.abs() > m {
                m = v.abs();
            }
        }
        m
    }
}

impl fmt::Debug for KfTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 256 floats are useless noise; show the nonzero slots.
        write!(f, "KfTensor {{")?;
        let mut first = true;
        for k in 0..4 {
            for l in 0..4 {
                for m in 0..4 {
                    for n in 0..4 {
                        let v = self.value(k, l, m, n);
                        if v != 0.0 {
                            if !first {
                                write!(f, ",")?;
                            }
                            write!(f, " ({k},{l},{m},{n}): {v:e}")?;
                            first = false;
                        }
                    }
                }
            }
        }
        write!(f, " }}")
    }
}

impl Mul<f64> for &KfTensor {
    type Output = KfTensor;

    fn mul(self, rhs: f64) -> KfTensor {
        let mut components = self.components;
        for v in &mut components {
            *v *= rhs;
        }
        KfTensor { components }
    }
}

impl Add<&KfTensor> for &KfTensor {
    type Output = KfTensor;

    fn add(self, rhs: &KfTensor) -> KfTensor {
        let mut components = self.components;
        for (v, w) in components.iter_mut().zip(rhs.components.iter()) {
            *v += w;
        }
        KfTensor { components }
    }
}

/// CPT-odd coefficient vector `(k_AF)^κ`, units of inverse length.
///
/// It enters no observable computed by this crate (it is absent from the
/// constitutive κ matrices and from the correction factor), but inputs may
/// carry it, so it is stored and checked for finiteness.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct KafVector {
    pub components: [f64; 4],
}

impl KafVector {
    /// Checked constructor: all four components must be finite.
    pub fn new(components: [f64; 4]) -> Result<Self> {
        if components.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                name: "k_AF component",
            });
        }
        Ok(KafVector { components })
    }
}

/// One failed relation found by [`validate_kf`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// Two symmetry-related slots disagree.
    Pair {
        /// Which relation failed.
        relation: &'static str,
        /// Slot that was read.
        indices: [u8; 4],
        /// The symmetry partner it was compared against.
        partner: [u8; 4],
        /// Value at `indices`.
        found: f64,
        /// Value the relation demands there.
        expected: f64,
    },
    /// The cyclic (first-Bianchi) sum over the last three indices is
    /// nonzero. Optional check.
    CyclicIdentity {
        /// Quadruple at which the cyclic sum was anchored.
        indices: [u8; 4],
        /// The nonzero cyclic sum.
        residual: f64,
    },
    /// The double trace `η_{κμ} η_{λν} (k_F)^{κλμν}` is nonzero. Optional
    /// check.
    DoubleTrace {
        /// The nonzero trace.
        residual: f64,
    },
}

impl Violation {
    pub(crate) fn into_error(self) -> Error {
        match self {
            Violation::Pair {
                relation,
                indices,
                found,
                expected,
                ..
            } => Error::Symmetry {
                relation,
                indices,
                found,
                expected,
            },
            Violation::CyclicIdentity { indices, residual } => Error::Symmetry {
                relation: "first Bianchi cyclic identity",
                indices,
                found: residual,
                expected: 0.0,
            },
            Violation::DoubleTrace { residual } => Error::Symmetry {
                relation: "double tracelessness",
                indices: [0, 0, 0, 0],
                found: residual,
                expected: 0.0,
            },
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Pair {
                relation,
                indices,
                partner,
                found,
                expected,
            } => write!(
                f,
                "{relation} at ({},{},{},{})/({},{},{},{}): found {found:e}, expected {expected:e}",
                indices[0],
                indices[1],
                indices[2],
                indices[3],
                partner[0],
                partner[1],
                partner[2],
                partner[3]
            ),
            Violation::CyclicIdentity { indices, residual } => write!(
                f,
                "cyclic identity broken at ({},{},{},{}): residual {residual:e}",
                indices[0], indices[1], indices[2], indices[3]
            ),
            Violation::DoubleTrace { residual } => {
                write!(f, "double trace is nonzero: {residual:e}")
            }
        }
    }
}

/// Outcome of [`validate_kf`]: every violated relation, plus smallness
/// warnings that do not invalidate the tensor.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    /// Hard symmetry failures; empty means the tensor is usable.
    pub violations: Vec<Violation>,
    /// Entries with magnitude above 10⁻² — legal, but suspiciously large
    /// for coefficients that are supposed to be tiny. One representative
    /// per orbit.
    pub large_entries: Vec<([u8; 4], f64)>,
}

impl ValidationReport {
    /// True when no symmetry relation is violated (warnings don't count).
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Which optional identities [`validate_kf_with`] should enforce on top of
/// the three pair symmetries. Both default to off: the constitutive
/// matrices need only the pair relations, and many useful test tensors
/// satisfy those alone.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ValidationOptions {
    /// Check the first-Bianchi cyclic identity over the last three indices.
    pub bianchi: bool,
    /// Check that the double trace `η_{κμ} η_{λν} (k_F)^{κλμν}` vanishes.
    pub double_traceless: bool,
}

/// Validate the three pair symmetries of `k_F` (plus optional identities
/// via [`validate_kf_with`]). Returns the full list of violations rather
/// than stopping at the first, so a bad input file can be fixed in one
/// round.
///
/// # Errors
///
/// Non-finite entries are a hard error, not a report line.
pub fn validate_kf(t: &KfTensor) -> Result<ValidationReport> {
    validate_kf_with(t, ValidationOptions::default())
}

/// [`validate_kf`] with the optional identity checks selectable.
pub fn validate_kf_with(t: &KfTensor, opts: ValidationOptions) -> Result<ValidationReport> {
    for k in 0..4 {
        for l in 0..4 {
            for m in 0..4 {
                for n in 0..4 {
                    if !t.value(k, l, m, n).is_finite() {
                        return Err(Error::NonFinite { name: "k_F entry" });
                    }
                }
            }
        }
    }

    let mut report = ValidationReport::default();
    for k in 0..4u8 {
        for l in 0..4u8 {
            for m in 0..4u8 {
                for n in 0..4u8 {
                    let here = [k, l, m, n];
                    let v = t.value(k as usize, l as usize, m as usize, n as usize);
                    // Each pair relation is recorded once per unordered
                    // pair of slots (lexicographically smaller side).
                    let checks: [([u8; 4], f64, &'static str); 3] = [
                        (
                            [l, k, m, n],
                            -1.0,
                            "antisymmetry in the first index pair",
                        ),
                        (
                            [k, l, n, m],
                            -1.0,
                            "antisymmetry in the second index pair",
                        ),
                        ([m, n, k, l], 1.0, "symmetry under exchange of index pairs"),
                    ];
                    for (partner, sign, relation) in checks {
                        if here > partner {
                            continue;
                        }
                        let pv = t.value(
                            partner[0] as usize,
                            partner[1] as usize,
                            partner[2] as usize,
                            partner[3] as usize,
                        );
                        let expected = if pv == 0.0 { 0.0 } else { sign * pv };
                        if v != expected {
                            report.violations.push(Violation::Pair {
                                relation,
                                indices: here,
                                partner,
                                found: v,
                                expected,
                            });
                        }
                    }
                    // Smallness warning, one line per orbit.
                    if v.abs() > 1e-2 {
                        let min_partner = orbit(here).iter().map(|&(p, _)| p).min().unwrap();
                        if here == min_partner {
                            report.large_entries.push((here, v));
                        }
                    }
                }
            }
        }
    }

    if opts.bianchi {
        check_bianchi(t, &mut report);
    }
    if opts.double_traceless {
        check_double_trace(t, &mut report);
    }
    Ok(report)
}

/// Cyclic sum over the last three indices:
/// `v(κ,λ,μ,ν) + v(κ,μ,ν,λ) + v(κ,ν,λ,μ) = 0`.
fn check_bianchi(t: &KfTensor, report: &mut ValidationReport) {
    for k in 0..4u8 {
        for l in 0..4u8 {
            for m in 0..4u8 {
                for n in 0..4u8 {
                    // The three cyclic rotations of (λ,μ,ν) give the same
                    // sum; anchor each class at its smallest rotation.
                    let rotations = [[l, m, n], [m, n, l], [n, l, m]];
                    if rotations.iter().any(|r| r < &[l, m, n]) {
                        continue;
                    }
                    let t1 = t.value(k as usize, l as usize, m as usize, n as usize);
                    let t2 = t.value(k as usize, m as usize, n as usize, l as usize);
                    let t3 = t.value(k as usize, n as usize, l as usize, m as usize);
                    let residual = t1 + t2 + t3;
                    let tol = 4.0 * f64::EPSILON * (t1.abs() + t2.abs() + t3.abs());
                    if residual.abs() > tol {
                        report.violations.push(Violation::CyclicIdentity {
                            indices: [k, l, m, n],
                            residual,
                        });
                    }
                }
            }
        }
    }
}

/// Double trace with the Minkowski metric (diagonal, so only slots of the
/// form `(κ,λ,κ,λ)` contribute): `Σ η_κ η_λ v(κ,λ,κ,λ)`. The overall
/// signature choice drops out because η appears twice.
fn check_double_trace(t: &KfTensor, report: &mut ValidationReport) {
    let eta = [1.0, -1.0, -1.0, -1.0];
    let mut residual = 0.0;
    let mut scale = 0.0;
    for k in 0..4 {
        for l in 0..4 {
            let term = eta[k] * eta[l] * t.value(k, l, k, l);
            residual += term;
            scale += term.abs();
        }
    }
    if residual.abs() > 32.0 * f64::EPSILON * scale {
        report.violations.push(Violation::DoubleTrace { residual });
    }
}
