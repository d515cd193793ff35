// SPDX-License-Identifier: Apache-2.0

//! Bounded axiom checks over a finite catalog of points, faces and germs.
//!
//! Germ containment in a chart only depends on finitely many sign
//! conditions, so each catalog germ is reduced to the bitmask of charts
//! containing it. Pair conditions are then checked on distinct masks.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Germ, GluedMasure, MasurePoint};
use crate::apartment::{grid_points, VectorialFace};
use crate::error::{Error, Result};
use crate::rational::{axpy, dot, format_vector, q, serde_q, sub, Vector, Q};
use crate::tits_order::leq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    #[serde(rename = "MA1")]
    Ma1,
    #[serde(rename = "MAafii")]
    MaAfIi,
    #[serde(rename = "MAiii-pairs")]
    MaIiiPairs,
    #[serde(rename = "MAO")]
    Mao,
    Friendly,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::Ma1, Axiom::MaAfIi, Axiom::MaIiiPairs, Axiom::Mao, Axiom::Friendly];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Ma1 => "MA1",
            Axiom::MaAfIi => "MAafii",
            Axiom::MaIiiPairs => "MAiii-pairs",
            Axiom::Mao => "MAO",
            Axiom::Friendly => "Friendly",
        }
    }

    pub fn parse(s: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.name().eq_ignore_ascii_case(s))
    }
}

/// Catalog parameters, echoed in every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogBounds {
    /// Grid points have coordinates in `[-half_width, half_width]`.
    #[serde(with = "serde_q")]
    pub half_width: Q,
    #[serde(with = "serde_q")]
    pub step: Q,
    /// Chimney germs are based at catalog points within this box.
    #[serde(with = "serde_q")]
    pub chimney_half_width: Q,
    /// Maximal word length for vectorial faces.
    pub window: usize,
    /// Maximal number of catalog germs.
    pub cap: usize,
}

impl Default for CatalogBounds {
    fn default() -> Self {
        CatalogBounds { half_width: q(2), step: q(1), chimney_half_width: q(1), window: 2, cap: 200_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    /// Number of elementary checks performed.
    pub checked: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub bounds: CatalogBounds,
    pub catalog_points: usize,
    pub catalog_germs: usize,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn result(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }
}

struct Entry {
    chart: usize,
    germ: Germ,
    label: &'static str,
}

fn describe(e: &Entry) -> String {
    let mut parts = vec![format!("{} in chart {}", e.label, e.chart)];
    if let Some(b) = &e.germ.base {
        parts.push(format!("base {}", format_vector(b)));
    }
    if let Some(l) = &e.germ.local {
        parts.push(format!("local direction {}", format_vector(l)));
    }
    if let Some(d) = &e.germ.direction {
        parts.push(format!("direction {}", format_vector(d)));
    }
    parts.join(", ")
}

/// Representatives of distinct vectorial faces reached within the window,
/// each flagged chamber / spherical.
fn vectorial_faces(m: &GluedMasure, window: usize) -> Vec<(Vector, bool, bool)> {
    let s = m.system();
    let rank = s.rank();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for word in s.weyl_words(window) {
        for sign in [1i8, -1] {
            for mask in 0..(1usize << rank) {
                let j: Vec<usize> = (0..rank).filter(|i| mask >> i & 1 == 1).collect();
                let face = VectorialFace { sign, word: word.clone(), j };
                let rep = face.representative(s);
                if seen.insert(rep.clone()) {
                    out.push((rep, mask == 0, face.is_spherical(s)));
                }
            }
        }
    }
    out
}

struct Catalog {
    points: Vec<MasurePoint>,
    faces: Vec<Entry>,
    chimneys: Vec<Entry>,
}

fn catalog(m: &GluedMasure, b: &CatalogBounds) -> Result<Catalog> {
    let n = m.dim();
    let grid = grid_points(n, &b.half_width, &b.step);
    let mut points = BTreeSet::new();
    for c in 0..m.charts() {
        for x in &grid {
            points.insert(m.canonical(&MasurePoint::new(c, x.clone())));
        }
    }
    let points: Vec<MasurePoint> = points.into_iter().collect();
    let vfaces = vectorial_faces(m, b.window);
    let in_small_box = |x: &[Q]| x.iter().all(|c| c.abs() <= b.chimney_half_width);

    let mut faces = Vec::new();
    let mut chimneys = Vec::new();
    for p in &points {
        for (local, _, _) in &vfaces {
            faces.push(Entry { chart: p.chart, germ: Germ::face(p.coord.clone(), local.clone()), label: "face" });
        }
        if in_small_box(&p.coord) {
            for (dir, chamber, spherical) in &vfaces {
                if *chamber || !*spherical || dir.iter().all(Zero::is_zero) {
                    continue;
                }
                for (local, _, _) in &vfaces {
                    chimneys.push(Entry {
                        chart: p.chart,
                        germ: Germ::chimney(p.coord.clone(), local.clone(), dir.clone()),
                        label: "chimney germ",
                    });
                }
            }
        }
    }
    for c in 0..m.charts() {
        for (dir, chamber, _) in &vfaces {
            if *chamber {
                chimneys.push(Entry { chart: c, germ: Germ::sector(dir.clone()), label: "sector germ" });
            }
        }
    }
    let total = faces.len() + chimneys.len();
    if total > b.cap {
        return Err(Error::CatalogTooLarge { size: total, cap: b.cap });
    }
    Ok(Catalog { points, faces, chimneys })
}

/// Distinct chart masks, each with the first entry producing it.
fn masks<'a>(m: &GluedMasure, entries: &'a [Entry]) -> BTreeMap<u128, &'a Entry> {
    let mut out = BTreeMap::new();
    for e in entries {
        out.entry(m.chart_mask(e.chart, &e.germ)).or_insert(e);
    }
    out
}

fn pair_check(
    axiom: Axiom,
    left: &BTreeMap<u128, &Entry>,
    right: &BTreeMap<u128, &Entry>,
    checked: usize,
) -> AxiomResult {
    for (ml, el) in left {
        for (mr, er) in right {
            if ml & mr == 0 {
                return AxiomResult {
                    axiom,
                    passed: false,
                    checked,
                    witness: Some(format!("no chart contains both the {} and the {}", describe(el), describe(er))),
                };
            }
        }
    }
    AxiomResult { axiom, passed: true, checked, witness: None }
}

fn check_ma1(m: &GluedMasure) -> AxiomResult {
    let ap = m.apartment();
    let s = m.system();
    for (i, g) in m.spec().gluings.iter().enumerate() {
        let ok = ap.in_qvee(&g.tau.translation)
            && s.is_real_root(&g.halfspace.root)
            && ap.admits_level(&g.halfspace.root, &g.halfspace.k);
        if !ok {
            return AxiomResult {
                axiom: Axiom::Ma1,
                passed: false,
                checked: i + 1,
                witness: Some(format!("gluing {i} ({}-{}) is not along a wall by an element of W", g.a, g.b)),
            };
        }
    }
    AxiomResult { axiom: Axiom::Ma1, passed: true, checked: m.spec().gluings.len(), witness: None }
}

fn check_ma_af_ii(m: &GluedMasure) -> AxiomResult {
    let mut checked = 0;
    for a in 0..m.charts() {
        for b in a + 1..m.charts() {
            checked += 1;
            match m.intersect_apartments(a, b) {
                Ok(_) | Err(Error::EmptyIntersection(..)) => {}
                Err(e) => {
                    return AxiomResult { axiom: Axiom::MaAfIi, passed: false, checked, witness: Some(e.to_string()) }
                }
            }
        }
    }
    AxiomResult { axiom: Axiom::MaAfIi, passed: true, checked, witness: None }
}

/// Pieces from `c1` to `c2` carrying `[x0, x1]` onto `[y0, y1]` cover the
/// whole segment.
fn segment_coincides(m: &GluedMasure, c1: usize, c2: usize, x0: &[Q], x1: &[Q], y0: &[Q], y1: &[Q]) -> bool {
    let dir = sub(x1, x0);
    let ydir = sub(y1, y0);
    let mut intervals: Vec<(Q, Q)> = Vec::new();
    for piece in m.pieces(c1, c2) {
        let mut lo = Q::zero();
        let mut hi = q(1);
        let mut hit = true;
        for h in &piece.region.closed {
            let a = h.value(x0);
            let b = dot(&h.root, &dir);
            if b.is_zero() {
                hit &= !a.is_negative();
            } else if b.is_positive() {
                lo = lo.max(-a / b);
            } else {
                hi = hi.min(-a / b);
            }
        }
        if !hit || lo > hi {
            continue;
        }
        let ends_match = [&lo, &hi].iter().all(|t| piece.map.apply(&axpy(x0, t, &dir)) == axpy(y0, t, &ydir));
        if ends_match {
            intervals.push((lo, hi));
        }
    }
    intervals.sort();
    let mut reach = Q::zero();
    let mut started = false;
    for (lo, hi) in intervals {
        if lo > reach || (!started && !lo.is_zero()) {
            return false;
        }
        started = true;
        reach = reach.max(hi);
    }
    started && reach >= q(1)
}

fn check_mao(m: &GluedMasure, points: &[MasurePoint]) -> AxiomResult {
    let s = m.system();
    let reps: Vec<Vec<MasurePoint>> = points.iter().map(|p| m.representations(p)).collect();
    let mut checked = 0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let common: Vec<(&MasurePoint, &MasurePoint)> =
                reps[i].iter().filter_map(|a| reps[j].iter().find(|b| b.chart == a.chart).map(|b| (a, b))).collect();
            if common.len() < 2 {
                continue;
            }
            let (p1, q1) = common[0];
            if leq(s, &p1.coord, &q1.coord) != Some(true) && leq(s, &q1.coord, &p1.coord) != Some(true) {
                continue;
            }
            for (p2, q2) in &common[1..] {
                checked += 1;
                if !segment_coincides(m, p1.chart, p2.chart, &p1.coord, &q1.coord, &p2.coord, &q2.coord) {
                    return AxiomResult {
                        axiom: Axiom::Mao,
                        passed: false,
                        checked,
                        witness: Some(format!(
                            "segment {} - {} differs between charts {} and {}",
                            points[i], points[j], p1.chart, p2.chart
                        )),
                    };
                }
            }
        }
    }
    AxiomResult { axiom: Axiom::Mao, passed: true, checked, witness: None }
}

/// Run the requested checks over the catalog described by `bounds`.
pub fn check_axioms(m: &GluedMasure, suite: &[Axiom], bounds: &CatalogBounds) -> Result<AxiomReport> {
    if m.charts() > 128 {
        return Err(Error::CatalogTooLarge { size: m.charts(), cap: 128 });
    }
    let cat = catalog(m, bounds)?;
    let needs_germs = suite.iter().any(|a| matches!(a, Axiom::MaIiiPairs | Axiom::Friendly));
    let (face_masks, chimney_masks) =
        if needs_germs { (masks(m, &cat.faces), masks(m, &cat.chimneys)) } else { Default::default() };
    let mut results = Vec::new();
    let mut suite = suite.to_vec();
    suite.sort();
    suite.dedup();
    for axiom in suite {
        let r = match axiom {
            Axiom::Ma1 => check_ma1(m),
            Axiom::MaAfIi => check_ma_af_ii(m),
            Axiom::Mao => check_mao(m, &cat.points),
            Axiom::Friendly => {
                let n = cat.faces.len();
                pair_check(axiom, &face_masks, &face_masks, n * (n + 1) / 2)
            }
            Axiom::MaIiiPairs => {
                let mut others = face_masks.clone();
                for (k, v) in &chimney_masks {
                    others.entry(*k).or_insert(v);
                }
                let n = cat.chimneys.len();
                pair_check(axiom, &chimney_masks, &others, n * (n + cat.faces.len()))
            }
        };
        results.push(r);
    }
    Ok(AxiomReport {
        bounds: bounds.clone(),
        catalog_points: cat.points.len(),
        catalog_germs: cat.faces.len() + cat.chimneys.len(),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;

    fn small() -> CatalogBounds {
        CatalogBounds {
            half_width: q(3),
            step: crate::rational::qf(1, 2),
            chimney_half_width: q(1),
            window: 2,
            cap: 100_000,
        }
    }

    #[test]
    fn tripod_passes() {
        let r = check_axioms(&models::tripod(), &Axiom::ALL, &small()).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn missing_chart_fails_ma_iii() {
        let r = check_axioms(&models::tripod_missing_chart(), &Axiom::ALL, &small()).unwrap();
        let ma3 = r.result(Axiom::MaIiiPairs).unwrap();
        assert!(!ma3.passed);
        assert!(ma3.witness.as_ref().unwrap().contains("no chart contains both"));
    }

    #[test]
    fn tampered_fails_ma_af_ii() {
        let r = check_axioms(&models::tampered_transition(), &[Axiom::MaAfIi], &small()).unwrap();
        assert!(!r.all_passed());
    }

    #[test]
    fn catalog_cap() {
        let b = CatalogBounds { cap: 10, ..small() };
        assert!(matches!(check_axioms(&models::tripod(), &Axiom::ALL, &b), Err(Error::CatalogTooLarge { .. })));
    }
}
