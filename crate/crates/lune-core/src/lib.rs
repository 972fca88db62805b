//! Geometry of zeros of convex combinations of incomplete polynomials with
//! all zeros on the unit circle.
//!
//! Given a monic `L` of degree `N >= 2` with unit-circle zeros and simplex
//! weights `lambda`, the combination `L_lambda = sum_j lambda_j L(u)/(u-z_j)`
//! is monic of degree `N - 1` and generalizes `L'/N`. This crate builds
//! those objects and turns two facts about them into executable checks:
//!
//! * **angle duality** — for any pair of consecutive distinct zeros at
//!   angular distance `alpha`, the subtended angles of the roots of
//!   `L_lambda` sum to exactly `pi + (N - 2) * alpha / 2` (strictly positive
//!   weights required);
//! * **gap principle** — at most `4 pi / (eps * G)` roots can sit at
//!   distance more than `eps` from the circle, where `G` is the largest
//!   zero-free arc.
//!
//! The supporting machinery lives in four modules: polynomial algebra
//! ([`poly`], [`zeros`], [`combination`]), a seeded Aberth–Ehrlich solver
//! ([`roots`]), chord/lune geometry ([`lune`]), and the verifiers
//! ([`theorems`]).

pub mod combination;
pub mod error;
pub mod lune;
pub mod poly;
pub mod roots;
pub mod theorems;
pub mod zeros;

pub use combination::{
    convex_combination, incomplete_polynomial, multiplicity_factorization, roots_of_combination,
    Factorization,
};
pub use error::{Error, Result};
pub use lune::{
    angle_gain_delta, convex_hull_contains, in_half_plane, in_lune, lune_diameter_bound,
    signed_arg_difference, subtended_angle, AngleValue, ChordArc, TOL_ENDPOINT, TOL_GEOM,
};
pub use num_complex::Complex64;
pub use poly::{MonicPolynomial, Polynomial};
pub use roots::{find_roots, RootMethod, RootMultiset};
pub use theorems::{
    consecutive_pairs, count_interior, duality_congruence_oracle, duality_report_for_roots,
    max_gap, sendov_distance, verify_angle_duality, verify_gap_principle,
    zero_weight_counterexample, DualityReport, GapReport,
};
pub use zeros::{group_weights, WeightVector, ZeroConfiguration};
