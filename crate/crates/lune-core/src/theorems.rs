//! Executable checks of the angle-sum identity and the gap bound, plus the
//! worked counterexamples that delimit their hypotheses.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::combination::{convex_combination, roots_of_combination};
use crate::error::{Error, Result};
use crate::lune::{signed_arg_difference, subtended_angle, AngleValue, ChordArc};
use crate::roots::{find_roots, RootMultiset};
use crate::zeros::{WeightVector, ZeroConfiguration};

/// Matching tolerance when resolving a chord against the consecutive pairs
/// of a configuration.
const CHORD_MATCH_TOL: f64 = 1e-12;

/// One evaluation of the angle-sum identity
/// `sum_k Theta(w_k; z, z+) = pi + (N - 2) * alpha / 2`.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub chord: ChordArc,
    /// One angle per root of the combination, `N - 1` entries.
    pub per_root_angles: Vec<AngleValue>,
    pub angle_sum: f64,
    /// `pi + (N - 2) * alpha / 2`, recomputed from `N` and the chord.
    pub rhs: f64,
    pub residual: f64,
}

/// One evaluation of the bound `N_eps <= 4 pi / (eps * G)`.
#[derive(Clone, Debug)]
pub struct GapReport {
    /// Largest gap `G` between consecutive distinct zeros.
    pub max_gap: f64,
    pub epsilon: f64,
    /// Number of roots with `|w| < 1 - eps`, counted with multiplicity.
    pub interior_count: usize,
    /// `4 pi / (eps * G)`.
    pub bound: f64,
    pub satisfied: bool,
}

/// All `M` consecutive distinct pairs in cyclic order, the last one wrapping
/// around through `theta_1 + 2pi`. Gaps sum to `2pi`.
pub fn consecutive_pairs(config: &ZeroConfiguration) -> Result<Vec<ChordArc>> {
    let angles = config.distinct_angles();
    let m = angles.len();
    if m < 2 {
        return Err(Error::SingleDistinctZero);
    }
    let mut chords = Vec::with_capacity(m);
    for r in 0..m {
        let theta = angles[r];
        let theta_plus = if r + 1 < m {
            angles[r + 1]
        } else {
            angles[0] + TAU
        };
        chords.push(ChordArc::new(theta, theta_plus)?);
    }
    Ok(chords)
}

/// The gap-maximizing chord and `G` itself. Ties break toward the smallest
/// starting angle so repeated runs agree byte for byte.
pub fn max_gap(config: &ZeroConfiguration) -> Result<(ChordArc, f64)> {
    let chords = consecutive_pairs(config)?;
    let best = chords
        .into_iter()
        .reduce(|best, c| if c.alpha() > best.alpha() { c } else { best })
        .expect("at least two distinct zeros");
    let g = best.alpha();
    Ok((best, g))
}

fn resolve_chord_index(config: &ZeroConfiguration, chord: &ChordArc) -> Result<usize> {
    let pairs = consecutive_pairs(config)?;
    pairs
        .iter()
        .position(|p| {
            (p.theta() - chord.theta()).abs() <= CHORD_MATCH_TOL
                && (p.alpha() - chord.alpha()).abs() <= CHORD_MATCH_TOL
        })
        .ok_or_else(|| {
            Error::InvalidParameter(
                "chord is not a consecutive distinct pair of this configuration".into(),
            )
        })
}

/// Evaluates the angle-sum identity for one consecutive chord.
///
/// Refuses weight vectors that are not strictly positive: the identity can
/// genuinely fail there, and [`zero_weight_counterexample`] is the explicit
/// path for exploring that regime. Roots come from the factorized path, so
/// circle roots contributed by repeated zeros hit the endpoint convention
/// through exact placement.
pub fn verify_angle_duality(
    config: &ZeroConfiguration,
    weights: &WeightVector,
    chord: &ChordArc,
) -> Result<DualityReport> {
    if !weights.is_strictly_positive() {
        return Err(Error::NonPositiveWeights);
    }
    resolve_chord_index(config, chord)?;
    let roots = roots_of_combination(config, weights)?;
    Ok(duality_report_for_roots(config.degree(), &roots.roots, chord))
}

/// Assembles a [`DualityReport`] from an explicit root multiset.
pub fn duality_report_for_roots(
    degree: usize,
    roots: &[Complex64],
    chord: &ChordArc,
) -> DualityReport {
    let per_root_angles: Vec<AngleValue> =
        roots.iter().map(|&w| subtended_angle(w, chord)).collect();
    let angle_sum: f64 = per_root_angles.iter().map(|a| a.value).sum();
    let rhs = PI + (degree as f64 - 2.0) * chord.half_gap();
    DualityReport {
        chord: chord.clone(),
        per_root_angles,
        angle_sum,
        rhs,
        residual: (angle_sum - rhs).abs(),
    }
}

/// Root-finder-independent check of the angle-sum congruence for pairwise
/// distinct zeros.
///
/// The ratio `L_lambda(z+) / L_lambda(z)` telescopes into
/// `-(lambda_{j+1}/lambda_j) * prod_{l != j, j+1} (z+ - z_l)/(z - z_l)`,
/// so the sum of argument differences over the roots is congruent mod `2pi`
/// to `pi` plus the argument differences at the other zeros -- quantities
/// that involve no roots at all. Returns the representative in `[0, 2pi)`
/// of (that congruence sum minus `pi + (N-2) alpha/2`); the identity by
/// theory forces it to `0 mod 2pi`.
pub fn duality_congruence_oracle(
    config: &ZeroConfiguration,
    weights: &WeightVector,
    chord: &ChordArc,
) -> Result<f64> {
    if config.num_distinct() != config.degree() {
        return Err(Error::MultipleZerosUnsupported);
    }
    if !weights.is_strictly_positive() {
        return Err(Error::NonPositiveWeights);
    }
    let j = resolve_chord_index(config, chord)?;
    let n = config.degree();
    let j_next = (j + 1) % n;

    // The positive weight ratio contributes argument 0; the leading minus
    // sign contributes pi.
    let mut total = PI;
    for ell in 0..n {
        if ell == j || ell == j_next {
            continue;
        }
        total += signed_arg_difference(config.distinct_zero(ell), chord)?;
    }
    let rhs = PI + (n as f64 - 2.0) * chord.half_gap();
    Ok((total - rhs).rem_euclid(TAU))
}

/// `N_eps`: the number of roots at modulus strictly below `1 - eps`,
/// counted with multiplicity.
pub fn count_interior(roots: &RootMultiset, epsilon: f64) -> Result<usize> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    Ok(roots
        .roots
        .iter()
        .filter(|w| w.norm() < 1.0 - epsilon)
        .count())
}

/// Evaluates `N_eps <= 4 pi / (eps * G)` for strictly positive weights.
///
/// With a single distinct zero the wraparound definition gives `G = 2pi`
/// and every root of the combination sits on the circle, so the bound holds
/// with `N_eps = 0`.
pub fn verify_gap_principle(
    config: &ZeroConfiguration,
    weights: &WeightVector,
    epsilon: f64,
) -> Result<GapReport> {
    if !weights.is_strictly_positive() {
        return Err(Error::NonPositiveWeights);
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    let g = if config.num_distinct() >= 2 {
        max_gap(config)?.1
    } else {
        TAU
    };
    let roots = roots_of_combination(config, weights)?;
    let interior_count = count_interior(&roots, epsilon)?;
    let bound = 4.0 * PI / (epsilon * g);
    Ok(GapReport {
        max_gap: g,
        epsilon,
        interior_count,
        bound,
        satisfied: (interior_count as f64) <= bound,
    })
}

/// The fixed instance showing that strict positivity is essential:
/// `(u-1)(u-i)(u+i)` with weights `(0, 1/2, 1/2)` drives the combination to
/// `u(u-1)`, whose angle sum lands a full `pi/2` short of the identity's
/// right-hand side. Returns the report and whether the identity failed
/// (it does).
pub fn zero_weight_counterexample() -> (DualityReport, bool) {
    let config = ZeroConfiguration::simple(&[0.0, FRAC_PI_2, 3.0 * FRAC_PI_2])
        .expect("fixed instance is valid");
    let weights = WeightVector::new(vec![0.0, 0.5, 0.5]).expect("fixed weights are valid");
    let chord = consecutive_pairs(&config).expect("three distinct zeros")[0].clone();
    let combination =
        convex_combination(&config, &weights).expect("weights match the configuration");
    let roots = find_roots(&combination).expect("quadratic with well-separated roots");
    let report = duality_report_for_roots(config.degree(), &roots.roots, &chord);
    let identity_fails = report.residual > 1e-6;
    (report, identity_fails)
}

/// For each distinct zero, the distance to the nearest root of the
/// combination. No bound is asserted: the distance can exceed 1, which is
/// exactly what the radius-1 counterexample demonstrates.
pub fn sendov_distance(
    config: &ZeroConfiguration,
    weights: &WeightVector,
) -> Result<Vec<(Complex64, f64)>> {
    if !weights.is_strictly_positive() {
        return Err(Error::NonPositiveWeights);
    }
    let roots = roots_of_combination(config, weights)?;
    Ok(config
        .distinct_zeros()
        .into_iter()
        .map(|zeta| {
            let dist = roots
                .roots
                .iter()
                .map(|w| (zeta - w).norm())
                .fold(f64::INFINITY, f64::min);
            (zeta, dist)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn three_zero_config() -> ZeroConfiguration {
        ZeroConfiguration::simple(&[0.0, FRAC_PI_2, 3.0 * FRAC_PI_2]).unwrap()
    }

    #[test]
    fn consecutive_pairs_include_wraparound() {
        let config = three_zero_config();
        let chords = consecutive_pairs(&config).unwrap();
        let gaps: Vec<f64> = chords.iter().map(|c| c.alpha()).collect();
        assert!((gaps[0] - FRAC_PI_2).abs() <= 1e-15);
        assert!((gaps[1] - PI).abs() <= 1e-15);
        assert!((gaps[2] - FRAC_PI_2).abs() <= 1e-15);
        assert!((gaps.iter().sum::<f64>() - TAU).abs() <= 1e-12);

        let pair = ZeroConfiguration::simple(&[0.0, FRAC_PI_4]).unwrap();
        let gaps: Vec<f64> = consecutive_pairs(&pair)
            .unwrap()
            .iter()
            .map(|c| c.alpha())
            .collect();
        assert!((gaps[0] - FRAC_PI_4).abs() <= 1e-15);
        assert!((gaps[1] - 7.0 * FRAC_PI_4).abs() <= 1e-15);

        let single = ZeroConfiguration::new(&[(1.0, 2)]).unwrap();
        assert!(matches!(
            consecutive_pairs(&single),
            Err(Error::SingleDistinctZero)
        ));
    }

    #[test]
    fn max_gap_with_tie_breaking() {
        let config = three_zero_config();
        let (chord, g) = max_gap(&config).unwrap();
        assert!((g - PI).abs() <= 1e-15);
        assert!((chord.theta() - FRAC_PI_2).abs() <= 1e-15);

        let five = ZeroConfiguration::roots_of_unity(5).unwrap();
        let (chord, g) = max_gap(&five).unwrap();
        assert!((g - TAU / 5.0).abs() <= 1e-15);
        // All gaps tie; the first (smallest starting angle) wins.
        assert_eq!(chord.theta(), 0.0);

        let pair = ZeroConfiguration::simple(&[0.0, FRAC_PI_4]).unwrap();
        let (chord, g) = max_gap(&pair).unwrap();
        assert!((g - 7.0 * FRAC_PI_4).abs() <= 1e-15);
        assert!((chord.theta() - FRAC_PI_4).abs() <= 1e-15);
    }

    #[test]
    fn duality_on_figure_instance() {
        let config = three_zero_config();
        let chord = consecutive_pairs(&config).unwrap()[0].clone();
        let report = verify_angle_duality(&config, &WeightVector::uniform(3), &chord).unwrap();
        assert_eq!(report.per_root_angles.len(), 2);
        let mut angles: Vec<f64> = report.per_root_angles.iter().map(|a| a.value).collect();
        angles.sort_by(f64::total_cmp);
        assert!((angles[0] - 3.0 * PI / 8.0).abs() <= 1e-12);
        assert!((angles[1] - 7.0 * PI / 8.0).abs() <= 1e-12);
        assert!((report.angle_sum - 5.0 * FRAC_PI_4).abs() <= 1e-12);
        assert!((report.rhs - 5.0 * FRAC_PI_4).abs() <= 1e-15);
        assert!(report.residual <= 1e-12);
    }

    #[test]
    fn duality_on_roots_of_unity() {
        for n in [3usize, 4, 5, 6] {
            let config = ZeroConfiguration::roots_of_unity(n).unwrap();
            let chord = consecutive_pairs(&config).unwrap()[0].clone();
            let report =
                verify_angle_duality(&config, &WeightVector::uniform(n), &chord).unwrap();
            let expected = (n as f64 - 1.0) * TAU / n as f64;
            assert!(
                (report.angle_sum - expected).abs() <= 1e-9,
                "n = {n}: sum {} vs {expected}",
                report.angle_sum
            );
            assert!(report.residual <= 1e-9);
        }
    }

    #[test]
    fn duality_refuses_zero_weights() {
        let config = three_zero_config();
        let chord = consecutive_pairs(&config).unwrap()[0].clone();
        let w = WeightVector::new(vec![0.0, 0.5, 0.5]).unwrap();
        assert!(matches!(
            verify_angle_duality(&config, &w, &chord),
            Err(Error::NonPositiveWeights)
        ));
    }

    #[test]
    fn duality_rejects_foreign_chord() {
        let config = three_zero_config();
        let foreign = ChordArc::new(0.1, 1.0).unwrap();
        assert!(verify_angle_duality(&config, &WeightVector::uniform(3), &foreign).is_err());
    }

    #[test]
    fn duality_with_closed_form_roots() {
        // u^3 - 1 with weights (4/5, 1/10, 1/10): the combination is
        // u^2 + 0.7u + 0.7 with known roots; check the verifier against the
        // angles evaluated directly on them.
        let config = ZeroConfiguration::roots_of_unity(3).unwrap();
        let w = WeightVector::new(vec![0.8, 0.1, 0.1]).unwrap();
        let chord = consecutive_pairs(&config).unwrap()[0].clone();
        let report = verify_angle_duality(&config, &w, &chord).unwrap();
        assert!(report.residual <= 1e-9);

        let im = 231.0f64.sqrt() / 20.0;
        let direct: f64 = [Complex64::new(-0.35, im), Complex64::new(-0.35, -im)]
            .iter()
            .map(|&w| subtended_angle(w, &chord).value)
            .sum();
        assert!((report.angle_sum - direct).abs() <= 1e-9);
    }

    #[test]
    fn congruence_oracle_vanishes_mod_two_pi() {
        let near_zero = |x: f64| x.min(TAU - x);

        let config = three_zero_config();
        let chord = consecutive_pairs(&config).unwrap()[0].clone();
        let v = duality_congruence_oracle(&config, &WeightVector::uniform(3), &chord).unwrap();
        assert!(near_zero(v) <= 1e-12);

        let five = ZeroConfiguration::roots_of_unity(5).unwrap();
        let w = WeightVector::new(vec![0.3, 0.1, 0.25, 0.15, 0.2]).unwrap();
        for chord in consecutive_pairs(&five).unwrap() {
            let v = duality_congruence_oracle(&five, &w, &chord).unwrap();
            assert!(near_zero(v) <= 1e-12);
        }

        let multiple = ZeroConfiguration::new(&[(0.0, 2), (PI, 1)]).unwrap();
        let chord = consecutive_pairs(&multiple).unwrap()[0].clone();
        assert!(matches!(
            duality_congruence_oracle(&multiple, &WeightVector::uniform(3), &chord),
            Err(Error::MultipleZerosUnsupported)
        ));
    }

    #[test]
    fn interior_count_is_strict() {
        let config = ZeroConfiguration::roots_of_unity(4).unwrap();
        let roots = roots_of_combination(&config, &WeightVector::uniform(4)).unwrap();
        // Roots of u^3: all at the origin.
        assert_eq!(count_interior(&roots, 0.5).unwrap(), 3);

        let im = 2.0f64.sqrt() / 3.0;
        let critical = RootMultiset {
            roots: vec![
                Complex64::new(1.0 / 3.0, im),
                Complex64::new(1.0 / 3.0, -im),
            ],
            residuals: vec![0.0, 0.0],
            method: crate::roots::RootMethod::DirectIteration,
        };
        // |w| = sqrt(3)/3 ~ 0.577: inside 0.75 but not inside 0.5.
        assert_eq!(count_interior(&critical, 0.25).unwrap(), 2);
        assert_eq!(count_interior(&critical, 0.5).unwrap(), 0);
        assert!(count_interior(&critical, 0.0).is_err());
        assert!(count_interior(&critical, 1.0).is_err());
    }

    #[test]
    fn gap_principle_on_reference_instances() {
        let config = three_zero_config();
        let report = verify_gap_principle(&config, &WeightVector::uniform(3), 0.25).unwrap();
        assert!((report.max_gap - PI).abs() <= 1e-15);
        assert_eq!(report.interior_count, 2);
        assert!((report.bound - 16.0).abs() <= 1e-12);
        assert!(report.satisfied);

        // Single distinct zero: all roots on the circle.
        let power = ZeroConfiguration::new(&[(2.0, 6)]).unwrap();
        let w = WeightVector::new(vec![0.3, 0.2, 0.1, 0.15, 0.05, 0.2]).unwrap();
        for eps in [0.05, 0.5, 0.9] {
            let report = verify_gap_principle(&power, &w, eps).unwrap();
            assert_eq!(report.interior_count, 0);
            assert!(report.satisfied);
            assert!((report.max_gap - TAU).abs() <= 1e-15);
        }
    }

    #[test]
    fn zero_weight_counterexample_matches_remark() {
        let (report, identity_fails) = zero_weight_counterexample();
        assert!(identity_fails);
        assert!((report.angle_sum - 3.0 * FRAC_PI_4).abs() <= 1e-12);
        assert!((report.rhs - 5.0 * FRAC_PI_4).abs() <= 1e-15);
        assert_eq!(report.per_root_angles.len(), 2);
        assert!(report.per_root_angles.iter().any(|a| a.endpoint_case));
    }

    #[test]
    fn sendov_distances() {
        // u^3 - 1 with (4/5, 1/10, 1/10): both roots at distance
        // sqrt(12/5) > 1 from the zero at 1.
        let config = ZeroConfiguration::roots_of_unity(3).unwrap();
        let w = WeightVector::new(vec![0.8, 0.1, 0.1]).unwrap();
        let distances = sendov_distance(&config, &w).unwrap();
        let expected = (12.0f64 / 5.0).sqrt();
        assert!((distances[0].1 - expected).abs() <= 1e-10);
        assert!(distances[0].1 > 1.0);

        // Uniform weights on u^N - 1: all roots collapse to the origin, so
        // every distance is 1. In f64 the combination's coefficients only
        // cancel to ~2e-16, which splits the multiplicity-(N-1) root at 0
        // by ~eps^(1/(N-1)); the distances inherit that spread.
        let config = ZeroConfiguration::roots_of_unity(7).unwrap();
        let distances = sendov_distance(&config, &WeightVector::uniform(7)).unwrap();
        for (_, d) in distances {
            assert!((d - 1.0).abs() <= 1e-2);
        }

        // Generic uniform case with well-separated critical points: the
        // distances must match the ones computed from L'/N directly.
        let config = ZeroConfiguration::simple(&[0.3, 1.1, 2.0, 3.4, 4.1, 5.9]).unwrap();
        let n = config.degree();
        let distances = sendov_distance(&config, &WeightVector::uniform(n)).unwrap();
        let critical =
            find_roots(&config.full_polynomial().derivative().monic().unwrap()).unwrap();
        for (zeta, d) in distances {
            let oracle = critical
                .roots
                .iter()
                .map(|w| (zeta - w).norm())
                .fold(f64::INFINITY, f64::min);
            assert!((d - oracle).abs() <= 1e-9);
        }
    }
}
