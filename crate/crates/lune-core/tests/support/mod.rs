//! Shared helpers for the integration tests: seeded instance generation,
//! greedy multiset matching, and rejection sampling from a lune.

use std::f64::consts::TAU;

use lune_core::{ChordArc, Complex64, WeightVector, ZeroConfiguration};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random configuration with `n` in `n_range`, multiplicities up to
/// `mult_max`, at least two distinct zeros, and consecutive distinct angles
/// separated by at least `min_sep`.
pub fn random_config(
    rng: &mut ChaCha8Rng,
    n_range: std::ops::RangeInclusive<usize>,
    mult_max: u32,
    min_sep: f64,
) -> ZeroConfiguration {
    let n = rng.random_range(n_range);
    let mut mults: Vec<u32> = Vec::new();
    let mut remaining = n as u32;
    while remaining > 0 {
        let cap = if mults.is_empty() {
            // Keep room for a second distinct zero.
            mult_max.min(remaining.saturating_sub(1)).max(1)
        } else {
            mult_max.min(remaining)
        };
        let m = rng.random_range(1..=cap);
        mults.push(m);
        remaining -= m;
    }

    let m = mults.len();
    let angles = loop {
        let mut angles: Vec<f64> = (0..m).map(|_| rng.random_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let min_gap = angles
            .windows(2)
            .map(|w| w[1] - w[0])
            .chain(std::iter::once(angles[0] + TAU - angles[m - 1]))
            .fold(f64::INFINITY, f64::min);
        if min_gap >= min_sep {
            break angles;
        }
    };

    let pairs: Vec<(f64, u32)> = angles.into_iter().zip(mults).collect();
    ZeroConfiguration::new(&pairs).expect("generated configuration is valid")
}

/// Strictly positive weights on the open simplex with `min lambda_j >=
/// margin`, summing to 1 exactly up to one final rounding.
pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, margin: f64) -> WeightVector {
    let raw: Vec<f64> = (0..n).map(|_| -rng.random_range(0.0f64..1.0).ln()).collect();
    let total: f64 = raw.iter().sum();
    let mut weights: Vec<f64> = raw
        .iter()
        .map(|g| (1.0 - margin * n as f64) * g / total + margin)
        .collect();
    let partial: f64 = weights[..n - 1].iter().sum();
    weights[n - 1] = 1.0 - partial;
    WeightVector::new(weights).expect("generated weights are valid")
}

/// Greedily pairs the two multisets by repeatedly taking the globally
/// closest pair; returns the largest matched distance. For multisets that
/// are small perturbations of each other this realizes the optimal
/// assignment.
pub fn match_multisets(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used_a = vec![false; a.len()];
    let mut used_b = vec![false; b.len()];
    let mut worst = 0.0f64;
    for _ in 0..a.len() {
        let mut best = (f64::INFINITY, 0, 0);
        for (i, &x) in a.iter().enumerate() {
            if used_a[i] {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if used_b[j] {
                    continue;
                }
                let d = (x - y).norm();
                if d < best.0 {
                    best = (d, i, j);
                }
            }
        }
        used_a[best.1] = true;
        used_b[best.2] = true;
        worst = worst.max(best.0);
    }
    worst
}

/// Axis-aligned bounding box of the lune: endpoints of the chord plus any
/// axis extremes of the circle that lie on the closed arc from `theta_plus`
/// around to `theta + 2pi`.
pub fn lune_bounding_box(chord: &ChordArc) -> (f64, f64, f64, f64) {
    let mut xs = vec![chord.z().re, chord.z_plus().re];
    let mut ys = vec![chord.z().im, chord.z_plus().im];
    for k in 0..4 {
        let t = k as f64 * TAU / 4.0;
        // Lift t into [theta_plus, theta + 2pi].
        let mut s = t;
        while s < chord.theta_plus() {
            s += TAU;
        }
        if s <= chord.theta() + TAU {
            xs.push(s.cos());
            ys.push(s.sin());
        }
    }
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (min(&xs), max(&xs), min(&ys), max(&ys))
}

/// Rejection-samples `count` points from the lune of `chord`.
pub fn sample_lune(rng: &mut ChaCha8Rng, chord: &ChordArc, count: usize) -> Vec<Complex64> {
    let (x0, x1, y0, y1) = lune_bounding_box(chord);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        assert!(
            attempts < 20_000_000,
            "lune sampler failed to reach {count} accepted points"
        );
        let u = Complex64::new(rng.random_range(x0..=x1), rng.random_range(y0..=y1));
        if lune_core::in_lune(u, chord) {
            out.push(u);
        }
    }
    out
}

/// A chord with gap `alpha` starting at a random angle.
pub fn random_chord(rng: &mut ChaCha8Rng, alpha: f64) -> ChordArc {
    let theta = rng.random_range(0.0..TAU);
    ChordArc::new(theta, theta + alpha).expect("valid chord")
}
