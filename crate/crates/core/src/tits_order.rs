// SPDX-License-Identifier: Apache-2.0

//! Tits cone membership, the preorders it induces, and λ-paths.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{add, axpy, serde_q, serde_qvec, sub, Vector, Q};
use crate::root_system::{classify_type, validate_gcm, BlockType, RootGeneratingSystem, SystemKind};

/// Where a vector sits relative to the Tits cone `𝒯`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum TitsMembership {
    InteriorT,
    BoundaryT,
    NotInT,
    /// Dominance did not settle within `bound` reflections.
    Unknown {
        bound: usize,
    },
}

impl TitsMembership {
    pub fn in_cone(self) -> Option<bool> {
        match self {
            TitsMembership::InteriorT | TitsMembership::BoundaryT => Some(true),
            TitsMembership::NotInT => Some(false),
            TitsMembership::Unknown { .. } => None,
        }
    }
}

/// Finite type: `𝒯 = 𝔸`. Affine type: decided by the null root. Otherwise a
/// bounded dominance run; on success the dominant representative is interior
/// exactly when its stabilizer type is finite.
pub fn tits_cone_membership(s: &RootGeneratingSystem, v: &[Q]) -> TitsMembership {
    match s.kind() {
        SystemKind::Finite => TitsMembership::InteriorT,
        SystemKind::Affine => {
            let delta = s.null_root().expect("affine system has a null root");
            let d = delta.eval(v);
            if d.is_positive() {
                TitsMembership::InteriorT
            } else if d.is_zero() && s.in_inessential(v) {
                TitsMembership::BoundaryT
            } else {
                TitsMembership::NotInT
            }
        }
        SystemKind::Other => {
            let bound = RootGeneratingSystem::default_dominance_bound(v);
            match s.dominant_representative_bounded(v, bound) {
                Err(_) => TitsMembership::Unknown { bound },
                Ok((lambda, _)) => {
                    let zeros: Vec<usize> =
                        (0..s.rank()).filter(|&i| crate::rational::dot(s.root(i), &lambda).is_zero()).collect();
                    if zeros.is_empty() {
                        return TitsMembership::InteriorT;
                    }
                    let sub: Vec<Vec<i64>> =
                        zeros.iter().map(|&a| zeros.iter().map(|&b| s.gcm().entry(a, b)).collect()).collect();
                    let finite = classify_type(&validate_gcm(&sub).expect("principal submatrix"))
                        .iter()
                        .all(|b| b.kind == BlockType::Finite);
                    if finite {
                        TitsMembership::InteriorT
                    } else {
                        TitsMembership::BoundaryT
                    }
                }
            }
        }
    }
}

/// `x ≤ y ⟺ y − x ∈ 𝒯`; `None` when undecided.
pub fn leq(s: &RootGeneratingSystem, x: &[Q], y: &[Q]) -> Option<bool> {
    tits_cone_membership(s, &sub(y, x)).in_cone()
}

/// `x ≤̊ y ⟺ y − x ∈ 𝒯̊ ∪ {0}`; `None` when undecided.
pub fn open_leq(s: &RootGeneratingSystem, x: &[Q], y: &[Q]) -> Option<bool> {
    let d = sub(y, x);
    if d.iter().all(Zero::is_zero) {
        return Some(true);
    }
    match tits_cone_membership(s, &d) {
        TitsMembership::InteriorT => Some(true),
        TitsMembership::BoundaryT | TitsMembership::NotInT => Some(false),
        TitsMembership::Unknown { .. } => None,
    }
}

/// `x ≤_{Q^∨} y ⟺ y − x ∈ Σ ℝ₊ α_i^∨`. The coroots are free, so the
/// coefficients are unique when they exist.
pub fn qvee_leq(s: &RootGeneratingSystem, x: &[Q], y: &[Q]) -> bool {
    match s.difference_in_coroots(x, y) {
        Some(c) => c.iter().all(|ci| !ci.is_negative()),
        None => false,
    }
}

/// `d^v(x, y)`: the dominant representative of `y − x`.
pub fn vectorial_distance(s: &RootGeneratingSystem, x: &[Q], y: &[Q]) -> Result<Vector> {
    if leq(s, x, y) != Some(true) {
        return Err(Error::NotComparable);
    }
    Ok(s.dominant_representative(&sub(y, x))?.0)
}

/// Piecewise-linear path on `[0, 1]` with constant velocity on each piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaPath {
    #[serde(with = "serde_qvec")]
    pub start: Vector,
    #[serde(with = "serde_qvec")]
    pub breakpoints: Vec<Q>,
    pub velocities: Vec<Velocity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Velocity(#[serde(with = "serde_qvec")] pub Vector);

impl LambdaPath {
    pub fn new(start: Vector, breakpoints: Vec<Q>, velocities: Vec<Vector>) -> Self {
        LambdaPath { start, breakpoints, velocities: velocities.into_iter().map(Velocity).collect() }
    }

    /// The straight path `t ↦ a + tλ`.
    pub fn straight(a: Vector, lambda: Vector) -> Self {
        LambdaPath::new(a, vec![Q::zero(), Q::one()], vec![lambda])
    }

    pub fn is_well_formed(&self) -> bool {
        let b = &self.breakpoints;
        b.len() == self.velocities.len() + 1
            && b.first().is_some_and(Zero::is_zero)
            && b.last().is_some_and(One::is_one)
            && b.windows(2).all(|w| w[0] < w[1])
            && self.velocities.iter().all(|v| v.0.len() == self.start.len())
    }

    /// Positions at the breakpoints.
    pub fn vertices(&self) -> Vec<Vector> {
        let mut out = vec![self.start.clone()];
        for (j, v) in self.velocities.iter().enumerate() {
            let dt = &self.breakpoints[j + 1] - &self.breakpoints[j];
            let next = axpy(out.last().unwrap(), &dt, &v.0);
            out.push(next);
        }
        out
    }

    pub fn end(&self) -> Vector {
        self.vertices().pop().unwrap()
    }

    pub fn at(&self, t: &Q) -> Vector {
        let verts = self.vertices();
        for j in 0..self.velocities.len() {
            if t <= &self.breakpoints[j + 1] {
                return axpy(&verts[j], &(t - &self.breakpoints[j]), &self.velocities[j].0);
            }
        }
        verts.last().unwrap().clone()
    }

    /// Merge consecutive pieces with equal velocity.
    pub fn merged(&self) -> LambdaPath {
        let mut bps = vec![self.breakpoints[0].clone()];
        let mut vels: Vec<Velocity> = Vec::new();
        for (j, v) in self.velocities.iter().enumerate() {
            if vels.last() == Some(v) {
                *bps.last_mut().unwrap() = self.breakpoints[j + 1].clone();
            } else {
                vels.push(v.clone());
                bps.push(self.breakpoints[j + 1].clone());
            }
        }
        LambdaPath { start: self.start.clone(), breakpoints: bps, velocities: vels }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", content = "segment")]
pub enum PathCheck {
    Valid,
    /// One-based index of the first offending piece.
    InvalidSegment(usize),
}

pub fn check_lambda_path(s: &RootGeneratingSystem, path: &LambdaPath, lambda: &[Q]) -> Result<PathCheck> {
    if !s.is_dominant(lambda) {
        return Err(Error::NonDominantLambda);
    }
    if !path.is_well_formed() {
        return Err(Error::Parse("malformed path: breakpoints must run 0 < … < 1".into()));
    }
    for (j, v) in path.velocities.iter().enumerate() {
        match s.dominant_representative(&v.0) {
            Ok((l, _)) if l == lambda => {}
            _ => return Ok(PathCheck::InvalidSegment(j + 1)),
        }
    }
    Ok(PathCheck::Valid)
}

/// `π(1) − π(0) ≤_{Q^∨} λ`.
pub fn path_endpoint_bound(s: &RootGeneratingSystem, path: &LambdaPath, lambda: &[Q]) -> bool {
    let disp = sub(&path.end(), &path.start);
    qvee_leq(s, &disp, lambda)
}

/// True iff a valid λ-path from `a` to `a + λ` is the straight one.
pub fn unique_straight_path(s: &RootGeneratingSystem, a: &[Q], lambda: &[Q], path: &LambdaPath) -> Result<bool> {
    if check_lambda_path(s, path, lambda)? != PathCheck::Valid || path.start != a || path.end() != add(a, lambda) {
        return Err(Error::Parse("path is not a valid λ-path from a to a + λ".into()));
    }
    Ok(path.velocities.iter().all(|v| v.0 == lambda))
}

/// The orbit `W^v.λ` reached by words of length at most `max_len`.
pub fn orbit(s: &RootGeneratingSystem, lambda: &[Q], max_len: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = vec![lambda.to_vec()];
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for v in &frontier {
            for i in 0..s.rank() {
                let w = s.reflect(i, v);
                if !out.contains(&w) {
                    out.push(w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Every λ-path from `a` with at most `max_pieces` pieces, breakpoints in
/// `(1/denominator)ℤ`, velocities in the orbit window, ending at `target`.
pub fn lambda_paths_between(
    s: &RootGeneratingSystem,
    a: &[Q],
    target: &[Q],
    lambda: &[Q],
    max_pieces: usize,
    denominator: i64,
    orbit_len: usize,
) -> Vec<LambdaPath> {
    let velocities = orbit(s, lambda, orbit_len);
    let grid: Vec<Q> = (1..denominator).map(|i| crate::rational::qf(i, denominator)).collect();
    let mut out = Vec::new();
    for pieces in 1..=max_pieces {
        for interior in choose(&grid, pieces - 1) {
            let mut bps = vec![Q::zero()];
            bps.extend(interior);
            bps.push(Q::one());
            for_each_tuple(velocities.len(), pieces, &mut |idx| {
                let path =
                    LambdaPath::new(a.to_vec(), bps.clone(), idx.iter().map(|&i| velocities[i].clone()).collect());
                if path.end() == target {
                    out.push(path);
                }
            });
        }
    }
    out
}

fn choose(items: &[Q], k: usize) -> Vec<Vec<Q>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        for mut rest in choose(&items[i + 1..], k - 1) {
            rest.insert(0, items[i].clone());
            out.push(rest);
        }
    }
    out
}

fn for_each_tuple(base: usize, len: usize, f: &mut dyn FnMut(&[usize])) {
    let mut idx = vec![0usize; len];
    loop {
        f(&idx);
        let mut p = 0;
        loop {
            if p == len {
                return;
            }
            idx[p] += 1;
            if idx[p] < base {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

/// Serializable summary of an order query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub leq: Option<bool>,
    pub open_leq: Option<bool>,
    #[serde(with = "opt_vec")]
    pub dv: Option<Vector>,
}

mod opt_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vector>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            None => s.serialize_none(),
            Some(v) => s.collect_seq(v.iter().map(ToString::to_string)),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Vector>, D::Error> {
        #[derive(Deserialize)]
        struct W(#[serde(with = "serde_q")] Q);
        let v: Option<Vec<W>> = Option::deserialize(d)?;
        Ok(v.map(|ws| ws.into_iter().map(|w| w.0).collect()))
    }
}

pub fn order_summary(s: &RootGeneratingSystem, x: &[Q], y: &[Q]) -> OrderSummary {
    OrderSummary { leq: leq(s, x, y), open_leq: open_leq(s, x, y), dv: vectorial_distance(s, x, y).ok() }
}
