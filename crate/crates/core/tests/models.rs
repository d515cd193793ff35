// SPDX-License-Identifier: Apache-2.0

//! Invariants of the shipped models, checked exhaustively on grids.

use std::path::PathBuf;

use masure_core::apartment::grid_points;
use masure_core::masure::{check_axioms, Axiom, CatalogBounds};
use masure_core::models;
use masure_core::rational::{q, qf, qvec};
use masure_core::serial::{model_to_json, parse_model};
use masure_core::tits_order::{check_lambda_path, leq, PathCheck};
use masure_core::{build_complex, Error, GluedMasure, MasurePoint, SectorGermRef};

fn shipped() -> Vec<(&'static str, GluedMasure)> {
    models::shipped().into_iter().map(|(name, spec)| (name, build_complex(spec).unwrap())).collect()
}

fn grid(m: &GluedMasure) -> Vec<MasurePoint> {
    let (bound, step) = if m.dim() == 1 { (q(3), qf(1, 2)) } else { (q(2), q(1)) };
    let pts = grid_points(m.dim(), &bound, &step);
    (0..m.charts()).flat_map(|c| pts.iter().map(move |x| MasurePoint::new(c, x.clone()))).collect()
}

#[test]
fn intersections_are_enclosed_and_fixed() {
    for (name, m) in shipped() {
        for a in 0..m.charts() {
            for b in 0..m.charts() {
                if a == b {
                    continue;
                }
                let inter = match m.intersect_apartments(a, b) {
                    Ok(i) => i,
                    Err(Error::EmptyIntersection(..)) => continue,
                    Err(e) => panic!("{name} {a} {b}: {e}"),
                };
                let phi = inter.weyl.to_affine(m.system());
                for p in grid(&m).into_iter().filter(|p| p.chart == a) {
                    let inside = inter.region.contains(&p.coord);
                    let image = MasurePoint::new(b, phi.apply(&p.coord));
                    assert_eq!(m.representation(&p, b).is_some(), inside, "{name}: {p} vs chart {b}");
                    if inside {
                        assert!(m.same_point(&p, &image).unwrap(), "{name}: {p} -> {image}");
                    }
                }
            }
        }
    }
}

#[test]
fn standard_points_are_detected_by_retractions() {
    for (name, m) in shipped() {
        for p in grid(&m) {
            let plus = m.retraction(&SectorGermRef::plus_infinity(0), &p).unwrap();
            let in_a0 = m.same_point(&p, &MasurePoint::new(0, plus)).unwrap();
            assert_eq!(m.characterize_standard(&p).unwrap(), in_a0, "{name}: {p}");
            assert_eq!(m.representation(&p, 0).is_some(), in_a0, "{name}: {p}");
        }
    }
}

#[test]
fn retractions_do_not_depend_on_the_chart() {
    for (name, m) in shipped() {
        for germ in [SectorGermRef::plus_infinity(0), SectorGermRef::minus_infinity(0)] {
            for p in grid(&m) {
                let direct = m.retraction(&germ, &p).unwrap();
                for rep in m.representations(&p) {
                    assert_eq!(m.retraction(&germ, &rep).unwrap(), direct, "{name}: {p}");
                }
            }
        }
    }
}

#[test]
fn retracted_segments_are_lambda_paths() {
    for (name, m) in shipped() {
        let pts: Vec<MasurePoint> = grid(&m).into_iter().step_by(5).collect();
        for germ in [SectorGermRef::plus_infinity(0), SectorGermRef::minus_infinity(0)] {
            for p in &pts {
                for r in pts.iter().filter(|r| r.chart == p.chart) {
                    if leq(m.system(), &p.coord, &r.coord) != Some(true) {
                        continue;
                    }
                    let (path, lambda) = m.retract_segment(&germ, p, r).unwrap();
                    assert_eq!(check_lambda_path(m.system(), &path, &lambda).unwrap(), PathCheck::Valid, "{name}");
                    assert_eq!(path.start, m.retraction(&germ, p).unwrap());
                    assert_eq!(path.end(), m.retraction(&germ, r).unwrap());
                }
            }
        }
    }
}

#[test]
fn distance_is_a_metric_on_the_plus_germ_family() {
    for (name, m) in shipped() {
        let germ = SectorGermRef::plus_infinity(0);
        let charts: Vec<usize> = m.charts_with_germ(&germ).unwrap().into_iter().map(|(c, _)| c).collect();
        let d = |a: usize, b: usize| m.apartment_distance(a, b, Some(&germ)).unwrap();
        for &a in &charts {
            for &b in &charts {
                assert_eq!(d(a, b), d(b, a), "{name}");
                assert_eq!(d(a, b) == 0, a == b, "{name}");
                for &c in &charts {
                    assert!(d(a, c) <= d(a, b) + d(b, c), "{name}");
                }
            }
        }
    }
}

#[test]
fn shipped_models_pass_the_axiom_checks() {
    for (name, m) in shipped() {
        let bounds = CatalogBounds { chimney_half_width: q(0), ..CatalogBounds::default() };
        let report = check_axioms(&m, &Axiom::ALL, &bounds).unwrap();
        assert!(report.all_passed(), "{name}: {:?}", report.results);
    }
}

#[test]
fn realized_strip_matches_the_chain_construction() {
    use masure_core::apartment::{Apartment, HalfSpace, HalfSpaceSet};
    use masure_core::masure::realize_intersection;
    use masure_core::rational::neg;
    use masure_core::RootGeneratingSystem;

    let s = RootGeneratingSystem::affine_a1();
    let a0 = s.root(0).clone();
    let strip = HalfSpaceSet::enclosed(vec![HalfSpace::new(a0.clone(), q(0)), HalfSpace::new(neg(&a0), q(2))]);
    let (chain, k) = realize_intersection(Apartment::new(s), &strip).unwrap();
    let full = models::affine_realized_strip();
    for (a, b) in [(1, 0), (2, 0), (2, 1)] {
        let x = chain.intersect_apartments(a, b).unwrap();
        let y = full.intersect_apartments(a, b).unwrap();
        assert!(x.region.same_set(&y.region, 3), "{a} {b}");
        assert!(x.weyl.equivalent(full.system(), &y.weyl));
    }
    assert!(full.intersect_apartments(k, 0).unwrap().region.same_set(&strip, 3));
}

#[test]
fn depth_two_tree_shape() {
    let m = models::depth_two_tree();
    assert_eq!(m.intersect_apartments(0, 2), Err(Error::EmptyIntersection(0, 2)));
    assert_eq!(m.apartment_distance(0, 2, None).unwrap(), 2);
    // Chart 2 starts with the end branching at -1 off chart 1.
    let p = MasurePoint::new(2, qvec(&[-1]));
    assert!(m.same_point(&p, &MasurePoint::new(1, qvec(&[-1]))).unwrap());
    assert!(m.representation(&MasurePoint::new(2, qvec(&[0])), 1).is_none());
}

fn model_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models")
}

/// The files under `models/` are the serialized builders. Set
/// `MASURE_BLESS=1` to rewrite them.
#[test]
fn model_files_match_builders() {
    let bless = std::env::var_os("MASURE_BLESS").is_some();
    for (name, spec) in models::shipped() {
        let path = model_dir().join(format!("{name}.json"));
        let json = model_to_json(&spec) + "\n";
        if bless {
            std::fs::write(&path, &json).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(parse_model(&on_disk).unwrap(), spec, "{name}");
        assert_eq!(on_disk, json, "{name}");
    }
}
