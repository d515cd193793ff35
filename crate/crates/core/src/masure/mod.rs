// SPDX-License-Identifier: Apache-2.0

//! Finite masure models: copies of the standard apartment glued along
//! half-apartments by Weyl transitions.
//!
//! Building a model computes, for every ordered pair of charts, the list of
//! *pieces*: an enclosed region of the source chart together with the affine
//! Weyl map carrying it into the target chart. Pieces come from walking the
//! gluing graph, so two chart points are identified exactly when some piece
//! sends one to the other.

mod axioms;
mod intersection;
mod realize;
mod retraction;
mod tree;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::apartment::{Apartment, HalfSpace, HalfSpaceSet, VectorialFace};
use crate::error::{Error, Result};
use crate::polyhedron::Polyhedron;
use crate::rational::{dot, format_vector, serde_qvec, Vector, Q};
use crate::root_system::{AffineMap, RootGeneratingSystem, WeylElement};

pub use axioms::{check_axioms, Axiom, AxiomReport, AxiomResult, CatalogBounds};
pub use intersection::{Intersection, IntersectionPiece};
pub use realize::realize_intersection;
pub use tree::{tree_model, Branch};

/// Points of chart `b` over `τ(D)` are identified with points of chart `a`
/// over `D` (in `a`'s coordinates).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gluing {
    pub a: usize,
    pub b: usize,
    pub halfspace: HalfSpace,
    pub tau: WeylElement,
}

/// Input of [`build_complex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSpec {
    pub apartment: Apartment,
    pub charts: usize,
    pub gluings: Vec<Gluing>,
}

/// Region of a source chart and the Weyl map into a target chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub region: HalfSpaceSet,
    pub weyl: WeylElement,
    pub map: AffineMap,
}

/// A point given in chart coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MasurePoint {
    pub chart: usize,
    #[serde(with = "serde_qvec")]
    pub coord: Vector,
}

impl MasurePoint {
    pub fn new(chart: usize, coord: Vector) -> Self {
        MasurePoint { chart, coord }
    }
}

impl fmt::Display for MasurePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.chart, format_vector(&self.coord))
    }
}

/// The sector germ of `x + ε w.C^v_f` in a chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SectorGermRef {
    pub chart: usize,
    pub sign: i8,
    pub word: Vec<usize>,
}

impl SectorGermRef {
    pub fn plus_infinity(chart: usize) -> Self {
        SectorGermRef { chart, sign: 1, word: Vec::new() }
    }

    pub fn minus_infinity(chart: usize) -> Self {
        SectorGermRef { chart, sign: -1, word: Vec::new() }
    }

    pub fn germ(&self, s: &RootGeneratingSystem) -> Germ {
        Germ::sector(VectorialFace::chamber(self.sign, self.word.clone()).representative(s))
    }
}

/// Finite data of a filter germ in chart coordinates.
///
/// `local` and `direction` are interior points of vectorial faces; every
/// real root has constant sign on such a face, so signs at these points
/// decide containment. A face has a base and a local direction; a sector
/// germ only a direction; a chimney germ all three.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Germ {
    pub base: Option<Vector>,
    pub local: Option<Vector>,
    pub direction: Option<Vector>,
}

impl Germ {
    pub fn sector(direction: Vector) -> Self {
        Germ { base: None, local: None, direction: Some(direction) }
    }

    pub fn face(base: Vector, local: Vector) -> Self {
        Germ { base: Some(base), local: Some(local), direction: None }
    }

    pub fn chimney(base: Vector, local: Vector, direction: Vector) -> Self {
        Germ { base: Some(base), local: Some(local), direction: Some(direction) }
    }

    pub fn transported(&self, map: &AffineMap) -> Germ {
        Germ {
            base: self.base.as_ref().map(|b| map.apply(b)),
            local: self.local.as_ref().map(|v| map.apply_linear(v)),
            direction: self.direction.as_ref().map(|v| map.apply_linear(v)),
        }
    }

    /// Some element of the filter lies in the enclosed `region`.
    pub fn within(&self, region: &HalfSpaceSet) -> bool {
        region.closed.iter().all(|h| self.within_halfspace(h, false))
            && region.open.iter().all(|h| self.within_halfspace(h, true))
    }

    fn within_halfspace(&self, h: &HalfSpace, strict: bool) -> bool {
        if let Some(d) = &self.direction {
            let sd = dot(&h.root, d);
            if sd.is_positive() {
                return true;
            }
            if sd.is_negative() {
                return false;
            }
        }
        let Some(x) = &self.base else {
            return h.root.iter().all(Zero::is_zero) && (h.k.is_positive() || (!strict && h.k.is_zero()));
        };
        let v = h.value(x);
        if v.is_positive() {
            return true;
        }
        if v.is_negative() {
            return false;
        }
        match &self.local {
            Some(l) => {
                let sl = dot(&h.root, l);
                sl.is_positive() || (!strict && sl.is_zero())
            }
            None => !strict,
        }
    }
}

/// A built model with its precomputed closure.
#[derive(Clone, Debug)]
pub struct GluedMasure {
    spec: ModelSpec,
    pieces: Vec<Vec<Vec<Piece>>>,
    adjacency: OnceLock<Vec<Vec<bool>>>,
}

/// Default cap on the number of closure pieces.
pub const DEFAULT_PIECE_CAP: usize = 20_000;

struct OrientedGluing {
    from: usize,
    to: usize,
    region: HalfSpace,
    tau: WeylElement,
}

fn agree_on_hull(p: &Polyhedron, f: &AffineMap, g: &AffineMap) -> Option<Vector> {
    let (point, dirs) = p.affine_hull()?;
    if f.apply(&point) != g.apply(&point) {
        return Some(point);
    }
    for d in dirs {
        if f.apply_linear(&d) != g.apply_linear(&d) {
            return Some(crate::rational::add(&point, &d));
        }
    }
    None
}

/// Maps agree on the affine hull of the region (`None`) or a point where
/// they may differ.
pub(crate) fn disagreement(region: &HalfSpaceSet, dim: usize, f: &AffineMap, g: &AffineMap) -> Option<Vector> {
    if f == g {
        return None;
    }
    agree_on_hull(&region.to_polyhedron(dim), f, g)
}

/// Two identifications of chart `a` with chart `b` must agree where both apply.
fn conflict(a: usize, b: usize, n: usize, p: &Piece, region: &HalfSpaceSet, map: &AffineMap) -> Result<()> {
    let overlap = p.region.intersect(region);
    let poly = overlap.to_polyhedron(n);
    if poly.is_empty() {
        return Ok(());
    }
    if agree_on_hull(&poly, &p.map, map).is_none() {
        return Ok(());
    }
    let x = poly.sample().expect("nonempty overlap");
    let (y, z) = (p.map.apply(&x), map.apply(&x));
    if y != z {
        return Err(Error::InconsistentGluing(format!(
            "point {a}:{} is identified with both {b}:{} and {b}:{}",
            format_vector(&x),
            format_vector(&y),
            format_vector(&z)
        )));
    }
    Err(Error::InconsistentGluing(format!(
        "two transitions from chart {a} to chart {b} disagree on a region through {}",
        format_vector(&x)
    )))
}

fn validate_gluing(ap: &Apartment, charts: usize, g: &Gluing) -> Result<()> {
    let s = &ap.system;
    for c in [g.a, g.b] {
        if c >= charts {
            return Err(Error::UnknownChart(c));
        }
    }
    s.check_dim(&g.halfspace.root)?;
    s.check_word(&g.tau.word)?;
    s.check_dim(&g.tau.translation)?;
    if !s.is_real_root(&g.halfspace.root) {
        return Err(Error::NotARealRoot(format_vector(&g.halfspace.root)));
    }
    let level_error =
        || Error::LevelNotInLambda { root: format_vector(&g.halfspace.root), level: g.halfspace.k.to_string() };
    if !ap.admits_level(&g.halfspace.root, &g.halfspace.k) {
        return Err(level_error());
    }
    if !g.tau.is_translation(s) && !ap.in_half_alpha_qvee(&g.halfspace.root, &g.halfspace.k) {
        return Err(level_error());
    }
    if !ap.in_qvee(&g.tau.translation) {
        return Err(Error::InconsistentGluing(format!(
            "translation {} of gluing {}-{} is not in the coroot lattice",
            format_vector(&g.tau.translation),
            g.a,
            g.b
        )));
    }
    Ok(())
}

/// Validate the gluing data and compute the identification closure.
pub fn build_complex(spec: ModelSpec) -> Result<GluedMasure> {
    build_complex_with_cap(spec, DEFAULT_PIECE_CAP)
}

pub fn build_complex_with_cap(spec: ModelSpec, cap: usize) -> Result<GluedMasure> {
    let ap = &spec.apartment;
    let s = &ap.system;
    let n = ap.dim();
    if spec.charts == 0 {
        return Err(Error::UnknownChart(0));
    }
    for g in &spec.gluings {
        validate_gluing(ap, spec.charts, g)?;
    }
    let mut oriented = Vec::new();
    for g in &spec.gluings {
        let inv = g.tau.inverse(s);
        let (root, k) = inv.to_affine(s).pullback_form(&g.halfspace.root, &g.halfspace.k);
        oriented.push(OrientedGluing { from: g.a, to: g.b, region: g.halfspace.clone(), tau: g.tau.clone() });
        oriented.push(OrientedGluing { from: g.b, to: g.a, region: HalfSpace::new(root, k), tau: inv });
    }

    let mut pieces = Vec::with_capacity(spec.charts);
    let mut total = 0usize;
    for source in 0..spec.charts {
        let mut found: Vec<Vec<Piece>> = vec![Vec::new(); spec.charts];
        let id = WeylElement::identity(n);
        found[source].push(Piece { region: HalfSpaceSet::whole(), map: id.to_affine(s), weyl: id.clone() });
        let mut queue = VecDeque::from([(source, HalfSpaceSet::whole(), id)]);
        while let Some((chart, region, weyl)) = queue.pop_front() {
            let map = weyl.to_affine(s);
            for og in oriented.iter().filter(|og| og.from == chart) {
                let (root, k) = map.pullback_form(&og.region.root, &og.region.k);
                let mut next_region = region.clone();
                next_region.closed.push(HalfSpace::new(root, k));
                if next_region.is_empty(n) {
                    continue;
                }
                let next_region = next_region.simplified(n);
                let next_weyl = og.tau.compose(s, &weyl);
                let next_map = next_weyl.to_affine(s);
                let target = &mut found[og.to];
                let subsumed = target.iter().any(|p| {
                    next_region.subset_of(&p.region, n) && disagreement(&next_region, n, &p.map, &next_map).is_none()
                });
                if subsumed {
                    continue;
                }
                for p in target.iter() {
                    conflict(source, og.to, n, p, &next_region, &next_map)?;
                }
                target.retain(|p| {
                    !(p.region.subset_of(&next_region, n) && disagreement(&p.region, n, &p.map, &next_map).is_none())
                });
                total += 1;
                if total > cap {
                    return Err(Error::ClosureTooLarge(cap));
                }
                target.push(Piece { region: next_region.clone(), weyl: next_weyl.clone(), map: next_map });
                queue.push_back((og.to, next_region, next_weyl));
            }
        }
        // The identity piece must survive on the diagonal.
        if !found[source].iter().any(|p| p.region.closed.is_empty() && p.map.is_identity()) {
            found[source].insert(
                0,
                Piece { region: HalfSpaceSet::whole(), map: AffineMap::identity(n), weyl: WeylElement::identity(n) },
            );
        }
        pieces.push(found);
    }

    Ok(GluedMasure { spec, pieces, adjacency: OnceLock::new() })
}

impl GluedMasure {
    pub fn spec(&self) -> &ModelSpec {
        &self.spec
    }

    pub fn apartment(&self) -> &Apartment {
        &self.spec.apartment
    }

    pub fn system(&self) -> &RootGeneratingSystem {
        &self.spec.apartment.system
    }

    pub fn charts(&self) -> usize {
        self.spec.charts
    }

    pub fn dim(&self) -> usize {
        self.spec.apartment.dim()
    }

    /// Pieces carrying chart `a` into chart `b`.
    pub fn pieces(&self, a: usize, b: usize) -> &[Piece] {
        &self.pieces[a][b]
    }

    fn check_chart(&self, c: usize) -> Result<()> {
        if c < self.charts() {
            Ok(())
        } else {
            Err(Error::UnknownChart(c))
        }
    }

    pub fn check_point(&self, p: &MasurePoint) -> Result<()> {
        self.check_chart(p.chart)?;
        self.system().check_dim(&p.coord)
    }

    /// Coordinates of `p` in chart `c`, if `p` lies in that chart.
    pub fn representation(&self, p: &MasurePoint, c: usize) -> Option<Vector> {
        self.pieces[p.chart][c].iter().find(|pc| pc.region.contains(&p.coord)).map(|pc| pc.map.apply(&p.coord))
    }

    /// All charts containing `p`, with coordinates.
    pub fn representations(&self, p: &MasurePoint) -> Vec<MasurePoint> {
        (0..self.charts()).filter_map(|c| self.representation(p, c).map(|coord| MasurePoint::new(c, coord))).collect()
    }

    /// Lexicographically least representative.
    pub fn canonical(&self, p: &MasurePoint) -> MasurePoint {
        self.representations(p).into_iter().min().unwrap_or_else(|| p.clone())
    }

    pub fn same_point(&self, p: &MasurePoint, q: &MasurePoint) -> Result<bool> {
        self.check_point(p)?;
        self.check_point(q)?;
        Ok(self.representation(p, q.chart).as_ref() == Some(&q.coord))
    }

    /// Charts containing a germ given in chart `c`, each with the piece
    /// (from `c`) that contains it.
    pub fn charts_containing(&self, c: usize, germ: &Germ) -> Vec<(usize, &Piece)> {
        (0..self.charts())
            .filter_map(|t| self.pieces[c][t].iter().find(|p| germ.within(&p.region)).map(|p| (t, p)))
            .collect()
    }

    /// Bitmask of charts containing the germ (at most 128 charts).
    pub fn chart_mask(&self, c: usize, germ: &Germ) -> u128 {
        self.charts_containing(c, germ).iter().fold(0u128, |m, (t, _)| m | 1u128 << t)
    }

    /// Charts in `𝒜(germ)`.
    pub fn charts_with_germ(&self, germ: &SectorGermRef) -> Result<Vec<(usize, &Piece)>> {
        self.check_chart(germ.chart)?;
        self.system().check_word(&germ.word)?;
        Ok(self.charts_containing(germ.chart, &germ.germ(self.system())))
    }

    /// `p + u` for `u ∈ 𝔸_in`, computed in `p`'s chart.
    pub fn ain_translate(&self, p: &MasurePoint, u: &[Q]) -> Result<MasurePoint> {
        self.check_point(p)?;
        self.system().check_dim(u)?;
        if !self.system().in_inessential(u) {
            return Err(Error::NotInAIn);
        }
        Ok(self.canonical(&MasurePoint::new(p.chart, crate::rational::add(&p.coord, u))))
    }
}
