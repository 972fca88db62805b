//! Configurations of unit-circle zeros and the weight vectors that mix their
//! incomplete polynomials.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::MonicPolynomial;

/// Two input angles closer than this (after reduction to `[0, 2pi)`) denote
/// the same zero and are merged into a multiplicity.
pub const ANGLE_MERGE_TOL: f64 = 1e-12;

/// Additive tolerance on `sum(lambda_j) = 1`.
pub const WEIGHT_SUM_TOL: f64 = 1e-14;

/// Multiset of unit-circle zeros, stored as strictly increasing distinct
/// angles in `[0, 2pi)` with positive multiplicities.
///
/// The expanded multiset is canonically ordered by distinct-zero index, then
/// repetition; weight vectors are always interpreted in that order.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroConfiguration {
    distinct_angles: Vec<f64>,
    multiplicities: Vec<u32>,
    degree: usize,
}

impl ZeroConfiguration {
    /// Builds a configuration from `(angle, multiplicity)` pairs. Angles are
    /// reduced to `[0, 2pi)` and coincident entries (within
    /// [`ANGLE_MERGE_TOL`], including across the wraparound) are merged.
    /// Requires total degree `N >= 2`.
    pub fn new(pairs: &[(f64, u32)]) -> Result<Self> {
        let mut reduced: Vec<(f64, u32)> = Vec::with_capacity(pairs.len());
        for &(angle, mult) in pairs {
            if !angle.is_finite() {
                return Err(Error::InvalidConfiguration(format!(
                    "non-finite angle {angle}"
                )));
            }
            if mult == 0 {
                return Err(Error::InvalidConfiguration(
                    "multiplicity must be >= 1".into(),
                ));
            }
            let mut a = angle.rem_euclid(TAU);
            // rem_euclid can round up to the modulus itself for tiny
            // negative inputs.
            if a >= TAU {
                a = 0.0;
            }
            reduced.push((a, mult));
        }
        reduced.sort_by(|x, y| x.0.total_cmp(&y.0));

        let mut merged: Vec<(f64, u32)> = Vec::with_capacity(reduced.len());
        for (a, m) in reduced {
            match merged.last_mut() {
                Some(last) if a - last.0 <= ANGLE_MERGE_TOL => last.1 += m,
                _ => merged.push((a, m)),
            }
        }
        // Wraparound coincidence: last angle within tolerance of first + 2pi.
        if merged.len() >= 2 {
            let first = merged[0].0;
            let last = merged[merged.len() - 1].0;
            if (first + TAU) - last <= ANGLE_MERGE_TOL {
                let (_, m) = merged.pop().unwrap();
                merged[0].1 += m;
            }
        }

        let angles: Vec<f64> = merged.iter().map(|p| p.0).collect();
        let mults: Vec<u32> = merged.iter().map(|p| p.1).collect();
        let config = Self::from_parts(angles, mults)?;
        if config.degree < 2 {
            return Err(Error::InvalidConfiguration(format!(
                "total degree must be >= 2, got {}",
                config.degree
            )));
        }
        Ok(config)
    }

    /// Internal constructor without the `N >= 2` floor; the reduced
    /// configuration of a single repeated zero legitimately has degree 1.
    pub(crate) fn from_parts(angles: Vec<f64>, mults: Vec<u32>) -> Result<Self> {
        if angles.is_empty() || angles.len() != mults.len() {
            return Err(Error::InvalidConfiguration(
                "need matching, non-empty angle and multiplicity lists".into(),
            ));
        }
        for w in angles.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidConfiguration(
                    "distinct angles must be strictly increasing".into(),
                ));
            }
        }
        if !(0.0..TAU).contains(&angles[0]) || *angles.last().unwrap() >= TAU {
            return Err(Error::InvalidConfiguration(
                "angles must lie in [0, 2pi)".into(),
            ));
        }
        if mults.iter().any(|&m| m == 0) {
            return Err(Error::InvalidConfiguration(
                "multiplicity must be >= 1".into(),
            ));
        }
        let degree = mults.iter().map(|&m| m as usize).sum();
        Ok(Self {
            distinct_angles: angles,
            multiplicities: mults,
            degree,
        })
    }

    /// All-simple configuration from a list of angles.
    pub fn simple(angles: &[f64]) -> Result<Self> {
        let pairs: Vec<(f64, u32)> = angles.iter().map(|&a| (a, 1)).collect();
        Self::new(&pairs)
    }

    /// The `n`-th roots of unity.
    pub fn roots_of_unity(n: usize) -> Result<Self> {
        let angles: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
        Self::simple(&angles)
    }

    /// Distinct angles `theta_r`, strictly increasing in `[0, 2pi)`.
    pub fn distinct_angles(&self) -> &[f64] {
        &self.distinct_angles
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Total degree `N = sum(m_r)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of distinct zeros `M`.
    pub fn num_distinct(&self) -> usize {
        self.distinct_angles.len()
    }

    pub fn distinct_zero(&self, r: usize) -> Complex64 {
        Complex64::from_polar(1.0, self.distinct_angles[r])
    }

    pub fn distinct_zeros(&self) -> Vec<Complex64> {
        self.distinct_angles
            .iter()
            .map(|&a| Complex64::from_polar(1.0, a))
            .collect()
    }

    /// Expanded multiset in canonical order: each distinct zero repeated by
    /// its multiplicity.
    pub fn expanded_zeros(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.degree);
        for (r, &m) in self.multiplicities.iter().enumerate() {
            let z = self.distinct_zero(r);
            for _ in 0..m {
                out.push(z);
            }
        }
        out
    }

    /// Expands `L(u) = prod_j (u - z_j)` over the whole multiset.
    pub fn full_polynomial(&self) -> MonicPolynomial {
        MonicPolynomial::from_roots(&self.expanded_zeros())
    }
}

/// Simplex weights `lambda_j` over the expanded zero multiset.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    strictly_positive: bool,
}

impl WeightVector {
    /// Validates nonnegativity and `|sum - 1| <= 1e-14`.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidWeights(
                "weights must be finite and nonnegative".into(),
            ));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidWeights(format!(
                "weights must sum to 1 (got {sum:.17})"
            )));
        }
        let strictly_positive = weights.iter().all(|&w| w > 0.0);
        Ok(Self {
            weights,
            strictly_positive,
        })
    }

    /// `lambda_j = 1/n` for all `j`.
    pub fn uniform(n: usize) -> Self {
        Self {
            weights: vec![1.0 / n as f64; n],
            strictly_positive: true,
        }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.strictly_positive
    }
}

/// Groups expanded-multiset weights by distinct zero:
/// `Lambda_r = sum of lambda_j over the entries at zeta_r`.
pub fn group_weights(config: &ZeroConfiguration, weights: &WeightVector) -> Result<WeightVector> {
    if weights.len() != config.degree() {
        return Err(Error::LengthMismatch {
            expected: config.degree(),
            got: weights.len(),
        });
    }
    let mut grouped = Vec::with_capacity(config.num_distinct());
    let mut cursor = 0usize;
    for &m in config.multiplicities() {
        let take = m as usize;
        grouped.push(weights.weights()[cursor..cursor + take].iter().sum());
        cursor += take;
    }
    WeightVector::new(grouped)
}
