// SPDX-License-Identifier: Apache-2.0

//! Apartment intersections, directional frontiers and chart distances.

use std::collections::VecDeque;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{disagreement, GluedMasure, SectorGermRef};
use crate::apartment::HalfSpaceSet;
use crate::error::{Error, Result};
use crate::polyhedron::Polyhedron;
use crate::rational::{axpy, dot, format_vector, Vector, Q};
use crate::root_system::WeylElement;
use crate::tits_order::{tits_cone_membership, TitsMembership};

/// One convex part of `A ∩ B` with its Weyl map into `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionPiece {
    pub region: HalfSpaceSet,
    pub weyl: WeylElement,
}

/// `A ∩ B` as an enclosed subset of `A` and a single Weyl isomorphism onto
/// its image in `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intersection {
    pub region: HalfSpaceSet,
    pub weyl: WeylElement,
}

/// A point of `e` outside every region, if there is one.
fn uncovered(e: Polyhedron, regions: &[HalfSpaceSet]) -> Option<Vector> {
    if e.is_empty() {
        return None;
    }
    let Some((first, rest)) = regions.split_first() else {
        return e.sample();
    };
    let mut acc = e;
    for h in &first.closed {
        let outside = acc.clone().with(h.closed_ineq().negation());
        if let Some(x) = uncovered(outside, rest) {
            return Some(x);
        }
        acc.push(h.closed_ineq());
    }
    None
}

impl GluedMasure {
    fn check_pair(&self, a: usize, b: usize) -> Result<()> {
        self.check_chart(a)?;
        self.check_chart(b)?;
        if a == b {
            return Err(Error::SameChart(a));
        }
        Ok(())
    }

    /// Maximal pieces of `A ∩ B` (in `A`'s coordinates).
    pub fn decompose_intersection(&self, a: usize, b: usize) -> Result<Vec<IntersectionPiece>> {
        self.check_pair(a, b)?;
        let n = self.dim();
        let ps = self.pieces(a, b);
        if ps.is_empty() {
            return Err(Error::EmptyIntersection(a, b));
        }
        let mut out: Vec<IntersectionPiece> = Vec::new();
        for (i, p) in ps.iter().enumerate() {
            let dominated = ps.iter().enumerate().any(|(j, r)| {
                j != i && p.region.subset_of(&r.region, n) && (j < i || !r.region.subset_of(&p.region, n))
            });
            if !dominated {
                out.push(IntersectionPiece { region: p.region.clone(), weyl: p.weyl.clone() });
            }
        }
        Ok(out)
    }

    /// `A ∩ B` with a Weyl isomorphism fixing it, or a violation witness.
    pub fn intersect_apartments(&self, a: usize, b: usize) -> Result<Intersection> {
        let pieces = self.decompose_intersection(a, b)?;
        let n = self.dim();
        let s = self.system();
        let polys: Vec<Polyhedron> = pieces.iter().map(|p| p.region.to_polyhedron(n)).collect();
        let mut valid = Vec::new();
        for p in &pieces {
            for h in &p.region.closed {
                if polys.iter().all(|poly| poly.implies(&h.closed_ineq())) {
                    valid.push(h.clone());
                }
            }
        }
        let hull = HalfSpaceSet::enclosed(valid).simplified(n);
        let regions: Vec<HalfSpaceSet> = pieces.iter().map(|p| p.region.clone()).collect();
        if let Some(x) = uncovered(hull.to_polyhedron(n), &regions) {
            return Err(Error::TheoremViolation(format!(
                "charts {a} and {b}: {} lies in the enclosure of the intersection but not in the intersection",
                format_vector(&x)
            )));
        }
        let maps: Vec<_> = pieces.iter().map(|p| p.weyl.to_affine(s)).collect();
        let mut order: Vec<usize> = (0..pieces.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(polys[i].affine_hull().map_or(0, |(_, d)| d.len())));
        for &i in &order {
            if pieces.iter().zip(&maps).all(|(p, m)| disagreement(&p.region, n, m, &maps[i]).is_none()) {
                return Ok(Intersection { region: hull, weyl: pieces[i].weyl.clone() });
            }
        }
        Err(Error::TheoremViolation(format!("charts {a} and {b}: no single Weyl element identifies the intersection")))
    }

    /// The least point of `(u + ℝν) ∩ A ∩ B`, in `A`'s coordinates.
    pub fn directional_frontier(&self, a: usize, b: usize, nu: &[Q], u: &[Q]) -> Result<Vector> {
        let s = self.system();
        s.check_dim(nu)?;
        s.check_dim(u)?;
        let inter = self.intersect_apartments(a, b)?;
        if tits_cone_membership(s, nu) != TitsMembership::InteriorT {
            return Err(Error::NotGenericDirection);
        }
        let mut lower: Option<Q> = None;
        let mut upper: Option<Q> = None;
        for h in &inter.region.closed {
            let at_u = h.value(u);
            let slope = dot(&h.root, nu);
            if slope.is_zero() {
                if at_u.is_negative() {
                    return Err(Error::LineMissesIntersection);
                }
                continue;
            }
            let bound = -at_u / &slope;
            if slope.is_positive() {
                if lower.as_ref().is_none_or(|l| &bound > l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|h| &bound < h) {
                upper = Some(bound);
            }
        }
        if let (Some(l), Some(h)) = (&lower, &upper) {
            if l > h {
                return Err(Error::LineMissesIntersection);
            }
        }
        match (lower, upper) {
            (Some(l), None) => Ok(axpy(u, &l, nu)),
            _ => Err(Error::NotGenericDirection),
        }
    }

    /// `A ∩ B` is a half-apartment.
    fn half_apartment_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency()[a][b]
    }

    fn adjacency(&self) -> &Vec<Vec<bool>> {
        self.adjacency.get_or_init(|| {
            let k = self.charts();
            let mut adj = vec![vec![false; k]; k];
            for a in 0..k {
                for b in a + 1..k {
                    let yes = self.intersect_apartments(a, b).is_ok_and(|i| i.region.closed.len() == 1);
                    adj[a][b] = yes;
                    adj[b][a] = yes;
                }
            }
            adj
        })
    }

    /// A shortest chain of charts from `a` to `b`, consecutive ones meeting in
    /// a half-apartment, optionally within `𝒜(germ)`.
    pub fn gallery(&self, a: usize, b: usize, germ: Option<&SectorGermRef>) -> Result<Vec<usize>> {
        self.check_chart(a)?;
        self.check_chart(b)?;
        let allowed: Vec<bool> = match germ {
            None => vec![true; self.charts()],
            Some(g) => {
                let mut v = vec![false; self.charts()];
                for (c, _) in self.charts_with_germ(g)? {
                    v[c] = true;
                }
                v
            }
        };
        if !allowed[a] || !allowed[b] {
            return Err(Error::NotConnected(a, b));
        }
        let mut prev = vec![usize::MAX; self.charts()];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(c) = queue.pop_front() {
            if c == b {
                let mut path = vec![b];
                let mut x = b;
                while x != a {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Ok(path);
            }
            for d in 0..self.charts() {
                if allowed[d] && prev[d] == usize::MAX && self.half_apartment_adjacent(c, d) {
                    prev[d] = c;
                    queue.push_back(d);
                }
            }
        }
        Err(Error::NotConnected(a, b))
    }

    pub fn apartment_distance(&self, a: usize, b: usize, germ: Option<&SectorGermRef>) -> Result<usize> {
        Ok(self.gallery(a, b, germ)?.len() - 1)
    }
}
