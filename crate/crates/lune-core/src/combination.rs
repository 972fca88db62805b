//! Incomplete polynomials, their convex combinations, and the exact
//! multiplicity factorization that reduces every combination to the
//! simple-zero case.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::MonicPolynomial;
use crate::roots::{find_roots, RootMethod, RootMultiset};
use crate::zeros::{group_weights, WeightVector, ZeroConfiguration};

/// The incomplete polynomial `L(u) / (u - z_j)`, built by expanding the zero
/// multiset with entry `j` deleted (never by numerical division). `j`
/// indexes the canonical expanded multiset, zero-based.
pub fn incomplete_polynomial(config: &ZeroConfiguration, j: usize) -> Result<MonicPolynomial> {
    let mut zeros = config.expanded_zeros();
    if j >= zeros.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: zeros.len(),
        });
    }
    zeros.remove(j);
    Ok(MonicPolynomial::from_roots(&zeros))
}

/// The convex combination `sum_j lambda_j L_j(u)`, monic of degree `N - 1`
/// by construction.
pub fn convex_combination(
    config: &ZeroConfiguration,
    weights: &WeightVector,
) -> Result<MonicPolynomial> {
    let n = config.degree();
    if weights.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: weights.len(),
        });
    }
    let mut acc = vec![crate::poly::CompensatedSum::default(); n - 1];
    for (j, &lambda) in weights.weights().iter().enumerate() {
        let pj = incomplete_polynomial(config, j)?;
        for (a, &c) in acc.iter_mut().zip(pj.coeffs()) {
            a.add(lambda * c);
        }
    }
    Ok(MonicPolynomial::from_coeffs(
        acc.iter().map(crate::poly::CompensatedSum::value).collect(),
    ))
}

/// Output of [`multiplicity_factorization`]: the exact split
/// `L_lambda = Q * reduced_combination` with
/// `Q(u) = prod_r (u - zeta_r)^(m_r - 1)`.
#[derive(Clone, Debug)]
pub struct Factorization {
    /// `Q`, degree `N - M`; its roots sit exactly on the circle.
    pub q: MonicPolynomial,
    /// The distinct zeros with all multiplicities set to 1. Degree `M`,
    /// which is 1 when the input has a single distinct zero.
    pub reduced: ZeroConfiguration,
    /// Grouped weights `Lambda_r`, one per distinct zero.
    pub grouped: WeightVector,
    /// The reduced convex combination, monic of degree `M - 1`.
    pub reduced_combination: MonicPolynomial,
}

/// Splits the combination exactly: grouping the weights by distinct zero
/// turns `L_lambda` into `Q` times the combination of the reduced
/// (simple-zero) configuration. No clustering or numeric multiplicity
/// detection is involved.
pub fn multiplicity_factorization(
    config: &ZeroConfiguration,
    weights: &WeightVector,
) -> Result<Factorization> {
    let grouped = group_weights(config, weights)?;

    let mut q_roots = Vec::with_capacity(config.degree() - config.num_distinct());
    for (r, &m) in config.multiplicities().iter().enumerate() {
        let z = config.distinct_zero(r);
        for _ in 1..m {
            q_roots.push(z);
        }
    }
    let q = MonicPolynomial::from_roots(&q_roots);

    let reduced = ZeroConfiguration::from_parts(
        config.distinct_angles().to_vec(),
        vec![1; config.num_distinct()],
    )?;
    let reduced_combination = if reduced.degree() == 1 {
        // Single distinct zero: every incomplete polynomial of the reduced
        // configuration is the constant 1.
        MonicPolynomial::one()
    } else {
        convex_combination(&reduced, &grouped)?
    };

    Ok(Factorization {
        q,
        reduced,
        grouped,
        reduced_combination,
    })
}

/// Roots of `L_lambda`, produced through the factorization: each distinct
/// zero contributes `m_r - 1` copies placed exactly on the circle, and the
/// reduced combination is solved by iteration. Residuals are measured
/// against `L_lambda` itself.
pub fn roots_of_combination(
    config: &ZeroConfiguration,
    weights: &WeightVector,
) -> Result<RootMultiset> {
    let factorization = multiplicity_factorization(config, weights)?;
    let l_lambda = convex_combination(config, weights)?;

    let mut roots = Vec::with_capacity(config.degree() - 1);
    for (r, &m) in config.multiplicities().iter().enumerate() {
        let z = config.distinct_zero(r);
        for _ in 1..m {
            roots.push(z);
        }
    }
    if factorization.reduced_combination.degree() >= 1 {
        let reduced_roots = find_roots(&factorization.reduced_combination)?;
        roots.extend(reduced_roots.roots);
    }

    let residuals = roots.iter().map(|&w| l_lambda.eval(w).norm()).collect();
    Ok(RootMultiset {
        roots,
        residuals,
        method: RootMethod::Factorized,
    })
}
