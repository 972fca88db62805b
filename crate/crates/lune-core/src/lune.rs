//! Geometry of the chord-and-arc lune: subtended angles with the endpoint
//! convention, membership predicates, and the quantitative chord bounds.
//!
//! The lune of a chord `[z, z+]` is the closed unit disk intersected with
//! the closed half-plane on the major-arc side (the side holding the
//! counterclockwise arc from `z+` back to `z`).

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance below which a point is treated as a chord endpoint and the
/// endpoint convention applies. Roots pinned on the circle by the
/// multiplicity factor are placed exactly, so this trigger only fires for
/// structurally exact endpoints or deliberate queries.
pub const TOL_ENDPOINT: f64 = 1e-9;

/// Slack for membership predicates; closed-set semantics, the boundary
/// counts as inside.
pub const TOL_GEOM: f64 = 1e-10;

/// A pair of consecutive distinct unit-circle points `z = e^{i theta}` and
/// `z+ = e^{i theta+}` with gap `alpha = theta+ - theta` in `(0, 2pi)`.
/// `theta+` may exceed `2pi` for the wraparound pair.
#[derive(Clone, Debug, PartialEq)]
pub struct ChordArc {
    theta: f64,
    theta_plus: f64,
    alpha: f64,
}

impl ChordArc {
    pub fn new(theta: f64, theta_plus: f64) -> Result<Self> {
        if !theta.is_finite() || !theta_plus.is_finite() {
            return Err(Error::InvalidParameter("non-finite chord angle".into()));
        }
        if !(0.0..TAU).contains(&theta) {
            return Err(Error::InvalidParameter(format!(
                "chord start angle must lie in [0, 2pi), got {theta}"
            )));
        }
        let alpha = theta_plus - theta;
        if !(alpha > 0.0 && alpha < TAU) {
            return Err(Error::InvalidParameter(format!(
                "chord gap must lie in (0, 2pi), got {alpha}"
            )));
        }
        Ok(Self {
            theta,
            theta_plus,
            alpha,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn theta_plus(&self) -> f64 {
        self.theta_plus
    }

    /// Gap `alpha = theta+ - theta`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn z(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }

    pub fn z_plus(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta_plus)
    }

    /// `alpha / 2`: by the inscribed angle theorem this is the angle
    /// subtended at any circle point off the open arc from `z` to `z+`, and
    /// by convention also the value at the endpoints themselves.
    pub fn half_gap(&self) -> f64 {
        self.alpha / 2.0
    }

    /// Chord length `|z+ - z| = 2 sin(alpha/2)`.
    pub fn chord_length(&self) -> f64 {
        2.0 * (self.alpha / 2.0).sin()
    }
}

/// Unoriented angle in `[0, pi]`, flagged when the endpoint convention
/// supplied the value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleValue {
    pub value: f64,
    pub endpoint_case: bool,
}

/// The angle at `u` between the rays toward `z` and `z+`, in `[0, pi]`.
///
/// Within [`TOL_ENDPOINT`] of either endpoint the convention value
/// `alpha / 2` is returned instead. Elsewhere the angle comes from
/// `atan2(|cross|, dot)` of the two ray directions, which stays fully
/// accurate near collinearity (where an arccos of the normalized dot
/// product loses up to half its digits).
pub fn subtended_angle(u: Complex64, chord: &ChordArc) -> AngleValue {
    let z = chord.z();
    let zp = chord.z_plus();
    if (u - z).norm() <= TOL_ENDPOINT || (u - zp).norm() <= TOL_ENDPOINT {
        return AngleValue {
            value: chord.half_gap(),
            endpoint_case: true,
        };
    }
    let v1 = z - u;
    let v2 = zp - u;
    let h = v1.conj() * v2;
    AngleValue {
        value: h.im.abs().atan2(h.re),
        endpoint_case: false,
    }
}

/// Whether `u` lies in the closed half-plane bounded by the chord line that
/// contains the counterclockwise arc from `z+` to `z`.
pub fn in_half_plane(u: Complex64, chord: &ChordArc) -> bool {
    let z = chord.z();
    let zp = chord.z_plus();
    // Signed area of (z, z+, u); the arc midpoint tests positive.
    ((zp - z).conj() * (u - z)).im >= -TOL_GEOM
}

/// Whether `u` lies in the lune: the closed unit disk intersected with the
/// major-arc half-plane.
pub fn in_lune(u: Complex64, chord: &ChordArc) -> bool {
    u.norm() <= 1.0 + TOL_GEOM && in_half_plane(u, chord)
}

/// The representative of `arg(z+ - w) - arg(z - w)` in `(-pi, pi]`.
///
/// For `w` in the lune this is positive and equals the subtended angle; for
/// `w` in the disk strictly on the other side of the chord line it is the
/// negated subtended angle. Undefined at the endpoints.
pub fn signed_arg_difference(w: Complex64, chord: &ChordArc) -> Result<f64> {
    let z = chord.z();
    let zp = chord.z_plus();
    if (w - z).norm() <= TOL_ENDPOINT || (w - zp).norm() <= TOL_ENDPOINT {
        return Err(Error::EndpointProximity);
    }
    Ok(((zp - w) * (z - w).conj()).arg())
}

/// Checks `|u - z| <= |z+ - z| = 2 sin(alpha/2)`, the diameter bound that
/// holds on the whole lune when the gap exceeds pi. A `false` return for a
/// lune point indicates a geometry bug; the check exists for property tests.
pub fn lune_diameter_bound(u: Complex64, chord: &ChordArc) -> Result<bool> {
    if chord.alpha() <= PI {
        return Err(Error::InvalidParameter(
            "diameter bound requires a gap greater than pi".into(),
        ));
    }
    Ok((u - chord.z()).norm() <= chord.chord_length() + TOL_GEOM)
}

/// The guaranteed angle gain over `alpha / 2` for lune points with
/// `|u| < 1 - epsilon`: `(epsilon/2) sin(alpha/2)` when `alpha <= pi`,
/// `epsilon/2` when `alpha > pi`.
pub fn angle_gain_delta(epsilon: f64, alpha: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    if !(alpha > 0.0 && alpha < TAU) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in (0, 2pi), got {alpha}"
        )));
    }
    if alpha <= PI {
        Ok(epsilon / 2.0 * (alpha / 2.0).sin())
    } else {
        Ok(epsilon / 2.0)
    }
}

/// Whether `u` lies in the closed convex hull of `points`, within
/// [`TOL_GEOM`]. Hull via monotone chain, containment via half-plane tests;
/// degenerate hulls (a point, a segment) are handled by distance.
pub fn convex_hull_contains(points: &[Complex64], u: Complex64) -> bool {
    if points.is_empty() {
        return false;
    }
    let hull = monotone_chain(points);
    match hull.len() {
        0 => false,
        1 => (u - hull[0]).norm() <= TOL_GEOM,
        2 => point_segment_distance(u, hull[0], hull[1]) <= TOL_GEOM,
        _ => hull.iter().enumerate().all(|(i, &a)| {
            let b = hull[(i + 1) % hull.len()];
            cross(b - a, u - a) >= -TOL_GEOM
        }),
    }
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Counterclockwise convex hull; collinear points are dropped.
fn monotone_chain(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let build = |iter: &mut dyn Iterator<Item = Complex64>| {
        let mut chain: Vec<Complex64> = Vec::new();
        for p in iter {
            while chain.len() >= 2
                && cross(
                    chain[chain.len() - 1] - chain[chain.len() - 2],
                    p - chain[chain.len() - 1],
                ) <= 0.0
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain.pop();
        chain
    };
    let mut hull = build(&mut pts.iter().copied());
    hull.extend(build(&mut pts.iter().copied().rev()));
    if hull.len() < 3 {
        // All input points collinear; fall back to the extreme pair.
        return vec![pts[0], *pts.last().unwrap()];
    }
    hull
}

fn point_segment_distance(u: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (u - a).norm();
    }
    let t = (((u - a).conj() * ab).re / len2).clamp(0.0, 1.0);
    (u - (a + ab * t)).norm()
}
