// SPDX-License-Identifier: Apache-2.0

//! Ready-made models, including deliberately broken ones for negative tests.

use crate::apartment::{Apartment, HalfSpace};
use crate::masure::{build_complex, tree_model, Branch, GluedMasure, Gluing, ModelSpec};
use crate::rational::{q, qvec};
use crate::root_system::{RootGeneratingSystem, WeylElement};

fn above(host: usize, level: i64) -> Branch {
    Branch { host, keep_above: true, level }
}

fn below(host: usize, level: i64) -> Branch {
    Branch { host, keep_above: false, level }
}

/// Rank one, one branch point: three ends and three charts.
pub fn tripod_spec() -> ModelSpec {
    tree_model(Apartment::new(RootGeneratingSystem::rank_one()), 0, &[above(0, 0)]).expect("valid tree")
}

/// Rank one, four ends with branch points at `0` and `-1`: six charts, and
/// charts 0 and 2 are disjoint.
pub fn depth_two_tree_spec() -> ModelSpec {
    tree_model(Apartment::new(RootGeneratingSystem::rank_one()), 0, &[above(0, 0), below(1, -1)]).expect("valid tree")
}

/// Affine `A_1`, folded once along the wall `α_0 = 0`.
pub fn affine_one_fold_spec() -> ModelSpec {
    tree_model(Apartment::new(RootGeneratingSystem::affine_a1()), 0, &[above(0, 0)]).expect("valid tree")
}

/// Affine `A_1` with branch points at `α_0 = 0` and `α_0 = -1` on chart 0.
pub fn affine_two_fold_spec() -> ModelSpec {
    tree_model(Apartment::new(RootGeneratingSystem::affine_a1()), 0, &[above(0, 0), below(0, -1)]).expect("valid tree")
}

/// Affine `A_1` model in which chart 2 meets chart 0 in `0 ≤ α_0 ≤ 2`. Its
/// charts 0, 1, 2 carry the chain produced by `realize_intersection` on that
/// strip, completed to all pairs of ends.
pub fn affine_realized_strip_spec() -> ModelSpec {
    tree_model(Apartment::new(RootGeneratingSystem::affine_a1()), 0, &[above(0, 0), below(1, 2)]).expect("valid tree")
}

pub fn tripod() -> GluedMasure {
    build_complex(tripod_spec()).expect("shipped model is consistent")
}

pub fn depth_two_tree() -> GluedMasure {
    build_complex(depth_two_tree_spec()).expect("shipped model is consistent")
}

pub fn affine_one_fold() -> GluedMasure {
    build_complex(affine_one_fold_spec()).expect("shipped model is consistent")
}

pub fn affine_two_fold() -> GluedMasure {
    build_complex(affine_two_fold_spec()).expect("shipped model is consistent")
}

pub fn affine_realized_strip() -> GluedMasure {
    build_complex(affine_realized_strip_spec()).expect("shipped model is consistent")
}

/// Every shipped model by name.
pub fn shipped() -> Vec<(&'static str, ModelSpec)> {
    vec![
        ("tripod", tripod_spec()),
        ("depth2", depth_two_tree_spec()),
        ("affine-one-fold", affine_one_fold_spec()),
        ("affine-two-fold", affine_two_fold_spec()),
        ("affine-strip", affine_realized_strip_spec()),
    ]
}

/// The tripod with its third chart removed. The germ at `-∞` of chart 0
/// and the germ at `-∞` of chart 1 then lie in no common chart.
pub fn tripod_missing_chart_spec() -> ModelSpec {
    let mut spec = tripod_spec();
    spec.gluings.retain(|g| g.a != 2 && g.b != 2);
    spec.charts = 2;
    spec
}

/// Two rank-one charts identified on `s ≥ 0` by the identity and on
/// `s ≤ -2` by a shift, so their intersection is not convex.
pub fn tampered_transition_spec() -> ModelSpec {
    ModelSpec {
        apartment: Apartment::new(RootGeneratingSystem::rank_one()),
        charts: 2,
        gluings: vec![
            Gluing { a: 0, b: 1, halfspace: HalfSpace::new(qvec(&[1]), q(0)), tau: WeylElement::identity(1) },
            Gluing {
                a: 0,
                b: 1,
                halfspace: HalfSpace::new(qvec(&[-1]), q(-2)),
                tau: WeylElement::translation(qvec(&[-2])),
            },
        ],
    }
}

/// Gluing along a half-apartment whose wall is not in the wall family.
pub fn off_wall_spec() -> ModelSpec {
    ModelSpec {
        apartment: Apartment::new(RootGeneratingSystem::rank_one()),
        charts: 2,
        gluings: vec![Gluing {
            a: 0,
            b: 1,
            halfspace: HalfSpace::new(qvec(&[1]), crate::rational::qf(1, 2)),
            tau: WeylElement::identity(1),
        }],
    }
}

pub fn tampered_transition() -> GluedMasure {
    build_complex(tampered_transition_spec()).expect("tampered model still builds")
}

pub fn tripod_missing_chart() -> GluedMasure {
    build_complex(tripod_missing_chart_spec()).expect("gluing data is consistent")
}
