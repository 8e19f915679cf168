//! The 3×3 constitutive matrices κ_DE, κ_HB, κ_DB, κ_HE derived from `k_F`.
//!
//! With spatial indices j,k (0-based here; the tensor's time index is 0 and
//! its spatial indices are 1..=3):
//!
//! ```text
//! κ_DE^{jk} = −2 (k_F)^{0j0k}
//! κ_HB^{jk} = ½ ε^{jpq} ε^{krs} (k_F)^{pqrs}
//! κ_DB^{jk} = −κ_HE^{kj} = (k_F)^{0jpq} ε^{kpq}
//! ```
//!
//! Exactness matters more than speed in this crate, so the contractions are
//! arranged for bitwise-reproducible results: terms are accumulated in the
//! lexicographic index order a naive quadruple loop would visit, κ_HB is
//! computed on the upper triangle and mirrored (the contraction is
//! symmetric term-by-term, but floating-point addition order would not
//! preserve that bitwise), and κ_HE is assigned as the negated transpose of
//! κ_DB rather than recontracted.

// Indexed loops throughout: they transcribe the tensor-index notation
// one-for-one, which iterator adapters would obscure.
#![allow(clippy::needless_range_loop)]

use crate::sme::tensor::{validate_kf, KfTensor};
use crate::Result;

/// Row-major 3×3 real matrix over the spatial indices.
pub type Matrix3 = [[f64; 3]; 3];

/// The two nonzero `(p, q)` index pairs of `ε^{jpq}` for each spatial axis
/// `j`, with their signs, listed in lexicographic (p, q) order. All indices
/// 0-based spatial.
const EPS_PAIRS: [[(usize, usize, f64); 2]; 3] = [
    [(1, 2, 1.0), (2, 1, -1.0)],
    [(0, 2, -1.0), (2, 0, 1.0)],
    [(0, 1, 1.0), (1, 0, -1.0)],
];

/// Full Levi-Civita table ε^{jpq}, 0-based spatial indices.
const EPS3: [[[f64; 3]; 3]; 3] = {
    let mut e = [[[0.0; 3]; 3]; 3];
    e[0][1][2] = 1.0;
    e[1][2][0] = 1.0;
    e[2][0][1] = 1.0;
    e[0][2][1] = -1.0;
    e[2][1][0] = -1.0;
    e[1][0][2] = -1.0;
    e
};

/// The four constitutive matrices. `kappa_de` and `kappa_hb` are exactly
/// symmetric, and `kappa_db[j][k] == -kappa_he[k][j]` exactly, whenever the
/// set came out of [`kappa_from_kf`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaSet {
    /// Electric-electric block, `−2 (k_F)^{0j0k}`.
    pub kappa_de: Matrix3,
    /// Magnetic-magnetic block, `½ ε^{jpq} ε^{krs} (k_F)^{pqrs}`.
    pub kappa_hb: Matrix3,
    /// Electric-magnetic cross block, `(k_F)^{0jpq} ε^{kpq}`.
    pub kappa_db: Matrix3,
    /// The partner cross block, `−κ_DBᵀ`.
    pub kappa_he: Matrix3,
}

impl KappaSet {
    /// All four matrices zero: no Lorentz violation.
    pub fn zero() -> Self {
        KappaSet {
            kappa_de: [[0.0; 3]; 3],
            kappa_hb: [[0.0; 3]; 3],
            kappa_db: [[0.0; 3]; 3],
            kappa_he: [[0.0; 3]; 3],
        }
    }

    /// κ_DE = α·I, κ_HB = β·I, cross blocks zero — the rotationally
    /// invariant special case used throughout the examples.
    pub fn isotropic(alpha: f64, beta: f64) -> Self {
        let mut set = KappaSet::zero();
        for j in 0..3 {
            set.kappa_de[j][j] = alpha;
            set.kappa_hb[j][j] = beta;
        }
        set
    }

    /// Diagnostic: `E·κ_DB·B + B·κ_HE·E` along the given directions.
    ///
    /// Because κ_HE = −κ_DBᵀ, the two cross terms cancel identically — this
    /// is why the correction factor contains no E·B contribution. The sum is
    /// returned (rather than asserted internally) so callers can confirm the
    /// cancellation; expect zero up to rounding of the individual terms.
    pub fn cross_term(&self, e_dir: [f64; 3], b_dir: [f64; 3]) -> f64 {
        let mut acc = 0.0;
        for j in 0..3 {
            for k in 0..3 {
                acc += e_dir[j] * self.kappa_db[j][k] * b_dir[k]
                    + b_dir[j] * self.kappa_he[j][k] * e_dir[k];
            }
        }
        acc
    }
}

/// Derive the four κ matrices from a symmetry-valid `k_F`.
///
/// # Errors
///
/// The tensor is validated first; the first violated relation is returned
/// as [`crate::Error::Symmetry`].
pub fn kappa_from_kf(t: &KfTensor) -> Result<KappaSet> {
    let report = validate_kf(t)?;
    if let Some(v) = report.violations.into_iter().next() {
        return Err(v.into_error());
    }

    let mut kappa_de = [[0.0; 3]; 3];
    for j in 0..3 {
        for k in 0..3 {
            // Exactly symmetric because the validated storage holds
            // bitwise-equal values at pair-exchange partners.
            kappa_de[j][k] = -2.0 * t.value(0, j + 1, 0, k + 1);
        }
    }

    let mut kappa_hb = [[0.0; 3]; 3];
    for j in 0..3 {
        for k in j..3 {
            let entry = kappa_hb_entry(t, j, k);
            kappa_hb[j][k] = entry;
            kappa_hb[k][j] = entry;
        }
    }

    let mut kappa_db = [[0.0; 3]; 3];
    for (k, pairs) in EPS_PAIRS.iter().enumerate() {
        for j in 0..3 {
            let mut acc = 0.0;
            for &(p, q, sign) in pairs {
                acc += sign * t.value(0, j + 1, p + 1, q + 1);
            }
            kappa_db[j][k] = acc;
        }
    }

    let mut kappa_he = [[0.0; 3]; 3];
    for j in 0..3 {
        for k in 0..3 {
            kappa_he[j][k] = -kappa_db[k][j];
        }
    }

    Ok(KappaSet {
        kappa_de,
        kappa_hb,
        kappa_db,
        kappa_he,
    })
}

/// One κ_HB entry through the four surviving terms of the double
/// Levi-Civita contraction, visited in the same lexicographic order as the
/// 81-term loop so the two evaluations agree bitwise.
fn kappa_hb_entry(t: &KfTensor, j: usize, k: usize) -> f64 {
    let mut acc = 0.0;
    for &(p, q, sj) in &EPS_PAIRS[j] {
        for &(r, s, sk) in &EPS_PAIRS[k] {
            acc += (sj * sk) * t.value(p + 1, q + 1, r + 1, s + 1);
        }
    }
    0.5 * acc
}

/// Reference evaluation of κ_HB: the literal 81-term double Levi-Civita
/// contraction per entry, upper triangle mirrored exactly like the
/// optimized route. Exists to cross-check [`kappa_from_kf`]; the two must
/// agree bitwise, since the zero-ε terms the full loop adds are exact
/// no-ops and the nonzero terms arrive in the same order.
pub fn kappa_hb_brute_force(t: &KfTensor) -> Matrix3 {
    let mut hb = [[0.0; 3]; 3];
    for j in 0..3 {
        for k in j..3 {
            let mut acc = 0.0;
            for p in 0..3 {
                for q in 0..3 {
                    for r in 0..3 {
                        for s in 0..3 {
                            acc += (EPS3[j][p][q] * EPS3[k][r][s])
                                * t.value(p + 1, q + 1, r + 1, s + 1);
                        }
                    }
                }
            }
            hb[j][k] = 0.5 * acc;
            hb[k][j] = hb[j][k];
        }
    }
    hb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sme::tensor::KfTensor;

    #[test]
    fn time_space_orbit_lands_in_kappa_de() {
        let c = 1e-17;
        let t = KfTensor::from_entries(&[([0, 1, 0, 1], c)]).unwrap();
        let ks = kappa_from_kf(&t).unwrap();
        assert_eq!(ks.kappa_de[0][0], -2.0 * c);
        for j in 0..3 {
            for k in 0..3 {
                if (j, k) != (0, 0) {
                    assert_eq!(ks.kappa_de[j][k], 0.0);
                }
                assert_eq!(ks.kappa_hb[j][k], 0.0);
            }
        }
    }

    #[test]
    fn spatial_orbit_lands_in_kappa_hb() {
        let d = 1e-17;
        // Tensor indices (1,2,1,2) are spatial (x,y,x,y); the double ε
        // contraction routes them to the zz entry with coefficient 2.
        let t = KfTensor::from_entries(&[([1, 2, 1, 2], d)]).unwrap();
        let ks = kappa_from_kf(&t).unwrap();
        assert_eq!(ks.kappa_hb[2][2], 2.0 * d);
        for j in 0..3 {
            for k in 0..3 {
                if (j, k) != (2, 2) {
                    assert_eq!(ks.kappa_hb[j][k], 0.0);
                }
                assert_eq!(ks.kappa_de[j][k], 0.0);
            }
        }
    }

    #[test]
    fn zero_tensor_gives_zero_kappas() {
        let ks = kappa_from_kf(&KfTensor::zero()).unwrap();
        assert_eq!(ks, KappaSet::zero());
    }

    #[test]
    fn cross_blocks_are_negated_transposes() {
        let t = KfTensor::from_entries(&[([0, 1, 1, 2], 3e-18), ([0, 2, 1, 3], -7e-19)]).unwrap();
        let ks = kappa_from_kf(&t).unwrap();
        let mut any_nonzero = false;
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(ks.kappa_db[j][k], -ks.kappa_he[k][j]);
                any_nonzero |= ks.kappa_db[j][k] != 0.0;
            }
        }
        assert!(any_nonzero, "test input should populate the cross block");
    }

    #[test]
    fn brute_force_matches_optimized_bitwise() {
        let t = KfTensor::from_entries(&[
            ([1, 2, 1, 2], 0.3),
            ([1, 2, 1, 3], -0.11),
            ([1, 3, 2, 3], 0.07),
            ([2, 3, 2, 3], 0.009),
            ([1, 2, 2, 3], -0.004),
        ])
        .unwrap();
        let ks = kappa_from_kf(&t).unwrap();
        let brute = kappa_hb_brute_force(&t);
        for j in 0..3 {
            for k in 0..3 {
                // Bitwise, not approximate.
                assert_eq!(ks.kappa_hb[j][k].to_bits(), brute[j][k].to_bits());
            }
        }
    }

    #[test]
    fn invalid_tensor_is_rejected_with_the_failed_relation() {
        let t = KfTensor::zero()
            .with_raw_entry([0, 1, 0, 1], 1e-17)
            .unwrap();
        let err = kappa_from_kf(&t).unwrap_err();
        assert!(matches!(err, crate::Error::Symmetry { .. }));
    }

    #[test]
    fn cross_term_cancels() {
        let t = KfTensor::from_entries(&[([0, 1, 1, 2], 3e-3), ([0, 2, 1, 3], -7e-4)]).unwrap();
        let ks = kappa_from_kf(&t).unwrap();
        let e = [0.6, 0.8, 0.0];
        let b = [0.0, 0.36, 0.48];
        let cross = ks.cross_term(e, b);
        // Zero up to rounding of the ~1e-3 individual terms.
        assert!(cross.abs() < 1e-17, "cross term {cross:e}");
    }
}
