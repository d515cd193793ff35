// SPDX-License-Identifier: Apache-2.0

//! Walls, half-apartments and enclosed sets of the standard apartment.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyhedron::{Ineq, Optimum, Polyhedron};
use crate::rational::{
    ceil, dot, floor, neg, q, rational_gcd, scale, serde_q, serde_qvec, solve, zeros, QStr, Vector, Q,
};
use crate::root_system::{classify_type, validate_gcm, BlockType, RootGeneratingSystem};

/// Admissible wall levels `Λ'_α`.
///
/// `Explicit` lists levels per root, keyed by the root's coordinates in the
/// simple-root basis (for example `"1,0"`). Lookups fall back to `-α` (with
/// negated levels), then to the simple root in the same Weyl orbit, then to
/// all integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WallFamily {
    #[default]
    Integers,
    Explicit {
        values: BTreeMap<String, Vec<QStr>>,
    },
}

/// Admissible levels for one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Levels {
    Integers,
    Finite(Vec<Q>),
}

impl Levels {
    pub fn contains(&self, k: &Q) -> bool {
        match self {
            Levels::Integers => k.is_integer(),
            Levels::Finite(v) => v.contains(k),
        }
    }

    /// Least admissible level `≥ lower` (or `> lower` when `strict`).
    pub fn least_above(&self, lower: &Q, strict: bool) -> Option<Q> {
        match self {
            Levels::Integers => {
                let c = ceil(lower);
                Some(if strict && &c == lower { c + Q::one() } else { c })
            }
            Levels::Finite(v) => v.iter().filter(|k| if strict { *k > lower } else { *k >= lower }).min().cloned(),
        }
    }

    /// Greatest admissible level `≤ upper`.
    pub fn greatest_below(&self, upper: &Q) -> Option<Q> {
        match self {
            Levels::Integers => Some(floor(upper)),
            Levels::Finite(v) => v.iter().filter(|k| *k <= upper).max().cloned(),
        }
    }
}

fn root_key(coords: &[Q]) -> String {
    coords.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl WallFamily {
    pub fn levels(&self, s: &RootGeneratingSystem, alpha: &[Q]) -> Levels {
        let WallFamily::Explicit { values } = self else {
            return Levels::Integers;
        };
        let lookup = |form: &[Q]| -> Option<Vec<Q>> {
            let c = s.simple_root_coords(form)?;
            values.get(&root_key(&c)).map(|v| v.iter().map(|x| x.0.clone()).collect())
        };
        if let Some(v) = lookup(alpha) {
            return Levels::Finite(v);
        }
        if let Some(v) = lookup(&neg(alpha)) {
            return Levels::Finite(v.iter().map(|x| -x).collect());
        }
        if let Some((i, sign, _)) = s.real_root_orbit(alpha) {
            if let Some(v) = lookup(s.root(i)) {
                return Levels::Finite(if sign > 0 { v } else { v.iter().map(|x| -x).collect() });
            }
            if let Some(v) = lookup(&neg(s.root(i))) {
                return Levels::Finite(if sign > 0 { v.iter().map(|x| -x).collect() } else { v });
            }
        }
        Levels::Integers
    }

    /// Generator of `Λ̃_{α_i}`: 1 for integer walls, else the rational gcd of
    /// the listed levels of the simple root (1 when none are listed).
    pub fn lattice_step(&self, s: &RootGeneratingSystem, i: usize) -> Q {
        match self.levels(s, s.root(i)) {
            Levels::Integers => Q::one(),
            Levels::Finite(v) => {
                let g = rational_gcd(&v);
                if g.is_zero() {
                    Q::one()
                } else {
                    g
                }
            }
        }
    }
}

/// The standard apartment: a root generating system and its walls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Apartment {
    pub system: RootGeneratingSystem,
    pub walls: WallFamily,
}

impl Apartment {
    pub fn new(system: RootGeneratingSystem) -> Self {
        Apartment { system, walls: WallFamily::Integers }
    }

    pub fn dim(&self) -> usize {
        self.system.dim()
    }

    /// `t ∈ Q^∨ = ⊕ Λ̃_{α_i} α_i^∨`.
    pub fn in_qvee(&self, t: &[Q]) -> bool {
        let Some(c) = self.system.coroot_coords(t) else {
            return false;
        };
        c.iter().enumerate().all(|(i, ci)| (ci / self.walls.lattice_step(&self.system, i)).is_integer())
    }

    /// `k ∈ ½ α(Q^∨)`.
    pub fn in_half_alpha_qvee(&self, alpha: &[Q], k: &Q) -> bool {
        let gens: Vec<Q> = (0..self.system.rank())
            .map(|i| dot(alpha, self.system.coroot(i)) * self.walls.lattice_step(&self.system, i))
            .collect();
        let g = rational_gcd(&gens) / q(2);
        if g.is_zero() {
            k.is_zero()
        } else {
            (k / g).is_integer()
        }
    }

    pub fn admits_level(&self, alpha: &[Q], k: &Q) -> bool {
        self.walls.levels(&self.system, alpha).contains(k)
    }

    /// Real roots from words of length at most `max_len`.
    pub fn root_window(&self, max_len: usize) -> Vec<Vector> {
        self.system.enumerate_real_roots(max_len).0
    }
}

/// `D(α,k) = {v | α(v) + k ≥ 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfSpace {
    #[serde(with = "serde_qvec")]
    pub root: Vector,
    #[serde(with = "serde_q")]
    pub k: Q,
}

impl HalfSpace {
    pub fn new(root: Vector, k: Q) -> Self {
        HalfSpace { root, k }
    }

    pub fn value(&self, v: &[Q]) -> Q {
        dot(&self.root, v) + &self.k
    }

    pub fn closed_ineq(&self) -> Ineq {
        Ineq::closed(self.root.clone(), self.k.clone())
    }

    pub fn open_ineq(&self) -> Ineq {
        Ineq::open(self.root.clone(), self.k.clone())
    }

    /// The opposite half-apartment sharing the wall.
    pub fn opposite(&self) -> HalfSpace {
        HalfSpace { root: neg(&self.root), k: -self.k.clone() }
    }
}

/// Finite intersection of closed and open half-apartments.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfSpaceSet {
    #[serde(default)]
    pub closed: Vec<HalfSpace>,
    #[serde(default)]
    pub open: Vec<HalfSpace>,
}

impl HalfSpaceSet {
    pub fn whole() -> Self {
        HalfSpaceSet::default()
    }

    pub fn enclosed(closed: Vec<HalfSpace>) -> Self {
        HalfSpaceSet { closed, open: Vec::new() }
    }

    pub fn is_enclosed(&self) -> bool {
        self.open.is_empty()
    }

    pub fn to_polyhedron(&self, dim: usize) -> Polyhedron {
        let mut p = Polyhedron::new(dim);
        for h in &self.closed {
            p.push(h.closed_ineq());
        }
        for h in &self.open {
            p.push(h.open_ineq());
        }
        p
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.closed.iter().all(|h| !h.value(v).is_negative()) && self.open.iter().all(|h| h.value(v).is_positive())
    }

    pub fn is_empty(&self, dim: usize) -> bool {
        self.to_polyhedron(dim).is_empty()
    }

    pub fn intersect(&self, other: &HalfSpaceSet) -> HalfSpaceSet {
        let mut out = self.clone();
        out.closed.extend(other.closed.iter().cloned());
        out.open.extend(other.open.iter().cloned());
        out.dedup();
        out
    }

    pub fn dedup(&mut self) {
        self.closed.sort();
        self.closed.dedup();
        self.open.sort();
        self.open.dedup();
    }

    /// Same point set.
    pub fn same_set(&self, other: &HalfSpaceSet, dim: usize) -> bool {
        let a = self.to_polyhedron(dim);
        let b = other.to_polyhedron(dim);
        a.subset_of(&b) && b.subset_of(&a)
    }

    pub fn subset_of(&self, other: &HalfSpaceSet, dim: usize) -> bool {
        self.to_polyhedron(dim).subset_of(&other.to_polyhedron(dim))
    }

    /// Drop constraints implied by the others.
    pub fn simplified(&self, dim: usize) -> HalfSpaceSet {
        let mut out = self.clone();
        out.dedup();
        let mut i = 0;
        while i < out.closed.len() {
            let h = out.closed.remove(i);
            if !out.to_polyhedron(dim).implies(&h.closed_ineq()) {
                out.closed.insert(i, h);
                i += 1;
            }
        }
        let mut i = 0;
        while i < out.open.len() {
            let h = out.open.remove(i);
            if !out.to_polyhedron(dim).implies(&h.open_ineq()) {
                out.open.insert(i, h);
                i += 1;
            }
        }
        out
    }

    pub fn sample(&self, dim: usize) -> Option<Vector> {
        self.to_polyhedron(dim).sample()
    }
}

/// Input of the enclosure map.
#[derive(Clone, Debug)]
pub enum EnclosureInput {
    Points(Vec<Vector>),
    Set(HalfSpaceSet),
}

/// `cl^#` over a finite root window: for each root, the least admissible
/// level whose half-apartment contains `U`; roots unbounded below on `U`
/// contribute nothing.
pub fn enclosure_cl_sharp(ap: &Apartment, window: &[Vector], u: &EnclosureInput) -> Result<HalfSpaceSet> {
    let n = ap.dim();
    let minimum = |alpha: &Vector| -> Result<Option<Q>> {
        match u {
            EnclosureInput::Points(ps) => {
                for p in ps {
                    ap.system.check_dim(p)?;
                }
                Ok(ps.iter().map(|p| dot(alpha, p)).min())
            }
            EnclosureInput::Set(set) => match set.to_polyhedron(n).minimize(alpha) {
                Optimum::Infeasible => Err(Error::EmptyInput),
                Optimum::Unbounded => Ok(None),
                Optimum::Bounded { value, .. } => Ok(Some(value)),
            },
        }
    };
    if matches!(u, EnclosureInput::Points(ps) if ps.is_empty()) {
        return Err(Error::EmptyInput);
    }
    let mut closed = Vec::new();
    for alpha in window {
        let Some(m) = minimum(alpha)? else {
            continue;
        };
        if let Some(k) = ap.walls.levels(&ap.system, alpha).least_above(&-m, false) {
            closed.push(HalfSpace::new(alpha.clone(), k));
        }
    }
    Ok(HalfSpaceSet::enclosed(closed))
}

/// Affine span of an enclosed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Support {
    pub point: Vector,
    pub directions: Vec<Vector>,
    /// Indices into `closed` of the walls whose intersection is the support.
    pub walls: Vec<usize>,
}

impl Support {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// Membership in the affine span.
    pub fn contains(&self, v: &[Q]) -> bool {
        let d = crate::rational::sub(v, &self.point);
        if self.directions.is_empty() {
            return d.iter().all(Zero::is_zero);
        }
        let m = crate::rational::transpose(&self.directions, d.len());
        solve(&m, &d, self.directions.len()).is_some()
    }
}

pub fn support_of_enclosed(e: &HalfSpaceSet, dim: usize) -> Result<Support> {
    let p = e.to_polyhedron(dim);
    let point = p.sample().ok_or(Error::EmptySet)?;
    let walls: Vec<usize> = p.implicit_equalities().into_iter().filter(|&i| i < e.closed.len()).collect();
    let normals: Vec<Vector> = walls.iter().map(|&i| e.closed[i].root.clone()).collect();
    let directions = if normals.is_empty() {
        (0..dim).map(|i| crate::rational::unit(dim, i)).collect()
    } else {
        crate::rational::nullspace(&normals, dim)
    };
    Ok(Support { point, directions, walls })
}

/// Gauge `j_C(s) = inf{t > 0 | s ∈ tC}` of a closed convex set with the
/// origin in its interior.
pub fn gauge_value(c: &HalfSpaceSet, s: &[Q]) -> Result<Q> {
    if !c.open.is_empty() || c.closed.iter().any(|h| !h.k.is_positive()) {
        return Err(Error::OriginNotInterior);
    }
    Ok(c.closed.iter().map(|h| -dot(&h.root, s) / &h.k).fold(Q::zero(), |acc, x| if x > acc { x } else { acc }))
}

/// `Fr(s) = s / j_C(s)`.
pub fn frontier_point(c: &HalfSpaceSet, s: &[Q]) -> Result<Vector> {
    let j = gauge_value(c, s)?;
    if j.is_zero() {
        return Err(Error::ZeroGauge);
    }
    Ok(scale(&j.recip(), s))
}

/// `conv_k(P)`: all convex combinations of at most `2^k` points of `P`.
///
/// By Carathéodory this is the union of `conv(T)` over subsets `T` with
/// `|T| ≤ min(2^k, d + 1)`, where `d` is the affine dimension of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvIterate {
    pub points: Vec<Vector>,
    pub k: usize,
    pub affine_dim: usize,
    pub cell_size: usize,
}

pub fn affine_dimension(points: &[Vector]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let diffs: Vec<Vector> = points[1..].iter().map(|p| crate::rational::sub(p, &points[0])).collect();
    crate::rational::rank(&diffs)
}

pub fn conv_iterate(points: &[Vector], k: usize) -> ConvIterate {
    let d = affine_dimension(points);
    let reach = if k >= usize::BITS as usize - 1 { usize::MAX } else { 1usize << k };
    let cell_size = reach.min(d + 1).min(points.len().max(1));
    ConvIterate { points: points.to_vec(), k, affine_dim: d, cell_size }
}

/// `x ∈ conv(points)` by one exact feasibility problem in the weights.
pub fn hull_contains(points: &[Vector], x: &[Q]) -> bool {
    let m = points.len();
    if m == 0 {
        return false;
    }
    let mut p = Polyhedron::new(m);
    for i in 0..m {
        p.push(Ineq::closed(crate::rational::unit(m, i), Q::zero()));
    }
    p.push_eq(vec![Q::one(); m], -Q::one());
    for (j, xj) in x.iter().enumerate() {
        p.push_eq(points.iter().map(|pt| pt[j].clone()).collect(), -xj.clone());
    }
    !p.is_empty()
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

impl ConvIterate {
    /// True when the iterate has reached the convex hull.
    pub fn is_full_hull(&self) -> bool {
        self.cell_size > self.affine_dim || self.cell_size >= self.points.len()
    }

    /// The simplices whose union is `conv_k(P)`.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        subsets(self.points.len(), self.cell_size)
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.cells().iter().any(|cell| {
            let pts: Vec<Vector> = cell.iter().map(|&i| self.points[i].clone()).collect();
            hull_contains(&pts, x)
        })
    }

    /// Vertices of the closure: the extreme points of `conv(P)` once the
    /// hull is reached, otherwise every distinct point of `P`.
    pub fn vertices(&self) -> Vec<Vector> {
        let mut pts = self.points.clone();
        pts.sort();
        pts.dedup();
        if !self.is_full_hull() {
            return pts;
        }
        extreme_points(&pts)
    }
}

pub fn extreme_points(points: &[Vector]) -> Vec<Vector> {
    (0..points.len())
        .filter(|&i| {
            let others: Vec<Vector> =
                points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            !hull_contains(&others, &points[i])
        })
        .map(|i| points[i].clone())
        .collect()
}

/// `ε w.F^v(J)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VectorialFace {
    pub sign: i8,
    pub word: Vec<usize>,
    pub j: Vec<usize>,
}

impl VectorialFace {
    pub fn chamber(sign: i8, word: Vec<usize>) -> Self {
        VectorialFace { sign, word, j: Vec::new() }
    }

    /// The point `ε w(ν_J)` with `α_j(ν_J) = 0` on `J` and `1` off `J`.
    pub fn representative(&self, s: &RootGeneratingSystem) -> Vector {
        let target: Vector = (0..s.rank()).map(|i| if self.j.contains(&i) { Q::zero() } else { Q::one() }).collect();
        let nu = solve(s.roots(), &target, s.dim()).expect("simple roots are free");
        let v = s.apply_word(&self.word, &nu);
        if self.sign < 0 {
            neg(&v)
        } else {
            v
        }
    }

    /// Spherical iff the parabolic submatrix on `J` is of finite type.
    pub fn is_spherical(&self, s: &RootGeneratingSystem) -> bool {
        if self.j.is_empty() {
            return true;
        }
        let sub: Vec<Vec<i64>> =
            self.j.iter().map(|&a| self.j.iter().map(|&b| s.gcm().entry(a, b)).collect()).collect();
        let gcm = validate_gcm(&sub).expect("principal submatrix of a GCM");
        classify_type(&gcm).iter().all(|b| b.kind == BlockType::Finite)
    }

    /// Linear constraints cutting out the closure of the face.
    pub fn closure_polyhedron(&self, s: &RootGeneratingSystem) -> Polyhedron {
        let n = s.dim();
        let mut p = Polyhedron::new(n);
        for i in 0..s.rank() {
            let mut form = s.apply_word_form(&self.word, s.root(i));
            if self.sign < 0 {
                form = neg(&form);
            }
            if self.j.contains(&i) {
                p.push_eq(form, Q::zero());
            } else {
                p.push(Ineq::closed(form, Q::zero()));
            }
        }
        p
    }

    /// Constraints cutting out the (relatively open) face itself.
    pub fn open_polyhedron(&self, s: &RootGeneratingSystem) -> Polyhedron {
        let n = s.dim();
        let mut p = Polyhedron::new(n);
        for i in 0..s.rank() {
            let mut form = s.apply_word_form(&self.word, s.root(i));
            if self.sign < 0 {
                form = neg(&form);
            }
            if self.j.contains(&i) {
                p.push_eq(form, Q::zero());
            } else {
                p.push(Ineq::open(form, Q::zero()));
            }
        }
        p
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FaceKind {
    LocalFace,
    Face,
    Chimney { direction: VectorialFace },
    SectorGerm,
    RayGerm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDescriptor {
    #[serde(with = "serde_qvec")]
    pub base: Vector,
    pub face: VectorialFace,
    pub kind: FaceKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceData {
    pub halfspaces: HalfSpaceSet,
    pub spherical: bool,
}

fn sign_of(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Finite defining data of a face, chimney or germ over a root window.
///
/// For each root `α` with `a = α(x)`, let `l` be its sign on the local
/// direction and `d` its sign on the chimney direction. The germ lies in
/// `D(α,k)` or `D°(α,k)` exactly when `a + k` clears the bound dictated by
/// these signs; the finest such half-apartment is recorded.
pub fn face_descriptor_data(ap: &Apartment, window: &[Vector], f: &FaceDescriptor) -> FaceData {
    let s = &ap.system;
    let local = f.face.representative(s);
    let (direction, spherical) = match &f.kind {
        FaceKind::Chimney { direction } => (Some(direction.representative(s)), direction.is_spherical(s)),
        FaceKind::SectorGerm | FaceKind::RayGerm => (Some(local.clone()), f.face.is_spherical(s)),
        FaceKind::LocalFace | FaceKind::Face => (None, f.face.is_spherical(s)),
    };
    let local_sign = |alpha: &Vector| {
        if matches!(f.kind, FaceKind::RayGerm) {
            0
        } else {
            sign_of(&dot(alpha, &local))
        }
    };
    let mut out = HalfSpaceSet::default();
    for alpha in window {
        let a = dot(alpha, &f.base);
        let levels = ap.walls.levels(s, alpha);
        let l = local_sign(alpha);
        let d = direction.as_ref().map_or(0, |dv| sign_of(&dot(alpha, dv)));
        match (l, d) {
            (_, -1) => {}
            (0, 0) => {
                if levels.contains(&-a.clone()) {
                    out.closed.push(HalfSpace::new(alpha.clone(), -a));
                } else if let Some(k) = levels.least_above(&-a, true) {
                    out.open.push(HalfSpace::new(alpha.clone(), k));
                }
            }
            (-1, _) => {
                if let Some(k) = levels.least_above(&-a, true) {
                    out.open.push(HalfSpace::new(alpha.clone(), k));
                }
            }
            _ => {
                if let Some(k) = levels.least_above(&-a, false) {
                    out.open.push(HalfSpace::new(alpha.clone(), k));
                }
            }
        }
    }
    FaceData { halfspaces: out, spherical }
}

/// All points of a cubic grid `{-b, …, b}^n` with the given step.
pub fn grid_points(dim: usize, bound: &Q, step: &Q) -> Vec<Vector> {
    let count = (bound / step).floor().to_integer();
    let count: i64 = num_traits::ToPrimitive::to_i64(&count).unwrap_or(0);
    let axis: Vec<Q> = (-count..=count).map(|i| q(i) * step).collect();
    let mut out = vec![zeros(0)];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |x| {
                    let mut p2 = p.clone();
                    p2.push(x.clone());
                    p2
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qf, qvec};

    fn rank1() -> Apartment {
        Apartment::new(RootGeneratingSystem::rank_one())
    }

    fn hs(root: &[i64], k: i64) -> HalfSpace {
        HalfSpace::new(qvec(root), q(k))
    }

    #[test]
    fn enclosure_examples() {
        let ap = rank1();
        let w = ap.root_window(1);
        let e = enclosure_cl_sharp(&ap, &w, &EnclosureInput::Points(vec![vec![qf(3, 10)], vec![qf(17, 10)]])).unwrap();
        assert!(e.same_set(&HalfSpaceSet::enclosed(vec![hs(&[1], 0), hs(&[-1], 2)]), 1));
        assert_eq!(e.closed.len(), 2);
        let e = enclosure_cl_sharp(&ap, &w, &EnclosureInput::Points(vec![qvec(&[1])])).unwrap();
        assert!(e.closed.contains(&hs(&[1], -1)) && e.closed.contains(&hs(&[-1], 1)));
        let d = HalfSpaceSet::enclosed(vec![hs(&[1], 0)]);
        let e = enclosure_cl_sharp(&ap, &w, &EnclosureInput::Set(d.clone())).unwrap();
        assert_eq!(e, d);
        assert_eq!(enclosure_cl_sharp(&ap, &w, &EnclosureInput::Points(vec![])), Err(Error::EmptyInput));
    }

    #[test]
    fn support_examples() {
        let e = HalfSpaceSet::enclosed(vec![hs(&[1], -1), hs(&[-1], 1)]);
        let s = support_of_enclosed(&e, 1).unwrap();
        assert_eq!((s.point.clone(), s.dim(), s.walls.clone()), (qvec(&[1]), 0, vec![0, 1]));
        let s = support_of_enclosed(&HalfSpaceSet::enclosed(vec![hs(&[1], 0)]), 1).unwrap();
        assert_eq!((s.dim(), s.walls.len()), (1, 0));
        let a0 = qvec(&[2, -2, 1]);
        let e = HalfSpaceSet::enclosed(vec![HalfSpace::new(a0.clone(), q(0)), HalfSpace::new(neg(&a0), q(0))]);
        let s = support_of_enclosed(&e, 3).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.walls, vec![0, 1]);
        assert!(s.contains(&qvec(&[1, 1, 0])));
        assert!(!s.contains(&qvec(&[1, 0, 0])));
        let empty = HalfSpaceSet::enclosed(vec![hs(&[1], -2), hs(&[-1], 1)]);
        assert_eq!(support_of_enclosed(&empty, 1), Err(Error::EmptySet));
    }

    #[test]
    fn gauge_examples() {
        let c = HalfSpaceSet::enclosed(vec![hs(&[1], 1), hs(&[-1], 2)]);
        assert_eq!(gauge_value(&c, &qvec(&[4])).unwrap(), q(2));
        assert_eq!(gauge_value(&c, &qvec(&[0])).unwrap(), q(0));
        assert_eq!(gauge_value(&c, &[qf(-1, 2)]).unwrap(), qf(1, 2));
        assert_eq!(frontier_point(&c, &qvec(&[4])).unwrap(), qvec(&[2]));
        assert_eq!(frontier_point(&c, &[qf(-1, 2)]).unwrap(), qvec(&[-1]));
        assert_eq!(frontier_point(&c, &qvec(&[2])).unwrap(), qvec(&[2]));
        assert_eq!(frontier_point(&c, &qvec(&[0])), Err(Error::ZeroGauge));
        let bad = HalfSpaceSet::enclosed(vec![hs(&[1], 0)]);
        assert_eq!(gauge_value(&bad, &qvec(&[1])), Err(Error::OriginNotInterior));
    }

    #[test]
    fn conv_examples() {
        let tri = vec![qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1])];
        let c0 = conv_iterate(&tri, 0);
        assert_eq!(c0.vertices(), {
            let mut t = tri.clone();
            t.sort();
            t
        });
        assert!(!c0.contains(&[qf(1, 2), q(0)]));
        let c1 = conv_iterate(&tri, 1);
        assert!(c1.contains(&[qf(1, 2), q(0)]));
        assert!(!c1.contains(&[qf(1, 4), qf(1, 4)]));
        let c2 = conv_iterate(&tri, 2);
        assert!(c2.is_full_hull());
        assert!(c2.contains(&[qf(1, 4), qf(1, 4)]));
        assert_eq!(c2.vertices().len(), 3);
        let seg = conv_iterate(&[qvec(&[0]), qvec(&[1])], 1);
        assert!(seg.contains(&[qf(1, 2)]));
        assert_eq!(seg.vertices(), vec![qvec(&[0]), qvec(&[1])]);
    }

    #[test]
    fn face_data_examples() {
        let ap = rank1();
        let w = ap.root_window(1);
        let f = FaceDescriptor { base: qvec(&[0]), face: VectorialFace::chamber(1, vec![]), kind: FaceKind::Face };
        let d = face_descriptor_data(&ap, &w, &f);
        assert!(d.spherical);
        assert!(d.halfspaces.closed.is_empty());
        assert!(d.halfspaces.open.contains(&hs(&[1], 0)));
        assert!(d.halfspaces.open.contains(&hs(&[-1], 1)));

        let ap = Apartment::new(RootGeneratingSystem::affine_a1());
        let w = ap.root_window(2);
        let f = FaceDescriptor {
            base: qvec(&[0, 0, 0]),
            face: VectorialFace { sign: 1, word: vec![], j: vec![0, 1] },
            kind: FaceKind::Face,
        };
        let d = face_descriptor_data(&ap, &w, &f);
        assert!(!d.spherical);
        assert!(d.halfspaces.open.is_empty());
        assert_eq!(d.halfspaces.closed.len(), w.len());
        assert!(d.halfspaces.closed.iter().all(|h| h.k.is_zero()));
    }

    #[test]
    fn explicit_wall_levels() {
        let s = RootGeneratingSystem::rank_one();
        let mut values = BTreeMap::new();
        values.insert("1".to_string(), vec![QStr(q(0)), QStr(qf(1, 2))]);
        let walls = WallFamily::Explicit { values };
        assert!(walls.levels(&s, &qvec(&[1])).contains(&qf(1, 2)));
        assert!(walls.levels(&s, &qvec(&[-1])).contains(&qf(-1, 2)));
        assert!(!walls.levels(&s, &qvec(&[1])).contains(&q(1)));
        assert_eq!(walls.lattice_step(&s, 0), qf(1, 2));
    }
}
