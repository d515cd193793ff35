// SPDX-License-Identifier: Apache-2.0

//! The null-root functional on affine models and the order it decides.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::masure::{GluedMasure, MasurePoint, SectorGermRef};
use crate::polyhedron::Polyhedron;
use crate::rational::{format_vector, serde_qvec, sub, Vector, Q};
use crate::root_system::NullRoot;
use crate::tits_order::open_leq;

/// `δ` on a model of affine type.
#[derive(Clone, Debug)]
pub struct DeltaFunctional<'a> {
    pub base: NullRoot,
    model: &'a GluedMasure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    OpenLess,
    OpenGreater,
    NC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub relation: Relation,
    /// Some chart contains both points with difference in `𝔸_in`.
    pub same_class: bool,
}

/// One step of a certificate: `from ≤̊ to` inside `chart`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    pub chart: usize,
    #[serde(with = "serde_qvec")]
    pub from: Vector,
    #[serde(with = "serde_qvec")]
    pub to: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub links: Vec<Link>,
}

pub fn delta_value(model: &GluedMasure, p: &MasurePoint) -> Result<Q> {
    DeltaFunctional::new(model)?.value(p)
}

impl<'a> DeltaFunctional<'a> {
    pub fn new(model: &'a GluedMasure) -> Result<Self> {
        Ok(DeltaFunctional { base: model.system().null_root()?, model })
    }

    pub fn model(&self) -> &GluedMasure {
        self.model
    }

    /// `δ_𝔸(ρ_{+∞}(p))`.
    pub fn value(&self, p: &MasurePoint) -> Result<Q> {
        self.value_via(&SectorGermRef::plus_infinity(0), p)
    }

    /// `δ_𝔸(ρ_𝔮(p))` for another sector germ `𝔮`.
    pub fn value_via(&self, germ: &SectorGermRef, p: &MasurePoint) -> Result<Q> {
        Ok(self.base.eval(&self.model.retraction(germ, p)?))
    }

    /// A chart of `𝒜(+∞)` containing `p`, with coordinates.
    fn home(&self, p: &MasurePoint) -> Result<Option<MasurePoint>> {
        let charts = self.model.charts_with_germ(&SectorGermRef::plus_infinity(0))?;
        Ok(charts.iter().find_map(|(c, _)| self.model.representation(p, *c).map(|x| MasurePoint::new(*c, x))))
    }

    fn homes(&self, p: &MasurePoint, q: &MasurePoint) -> Result<(MasurePoint, MasurePoint)> {
        match (self.home(p)?, self.home(q)?) {
            (Some(a), Some(b)) => {
                self.model.gallery(a.chart, b.chart, Some(&SectorGermRef::plus_infinity(0)))?;
                Ok((a, b))
            }
            _ => Err(Error::NotConnected(p.chart, q.chart)),
        }
    }

    pub fn compare(&self, p: &MasurePoint, q: &MasurePoint) -> Result<Comparison> {
        self.homes(p, q)?;
        let dp = self.value(p)?;
        let dq = self.value(q)?;
        let relation = if dp < dq {
            Relation::OpenLess
        } else if dp > dq {
            Relation::OpenGreater
        } else {
            Relation::NC
        };
        let s = self.model.system();
        let same_class = self
            .model
            .representations(p)
            .iter()
            .any(|a| self.model.representation(q, a.chart).is_some_and(|b| s.in_inessential(&sub(&b, &a.coord))));
        Ok(Comparison { relation, same_class })
    }

    /// A chain `p = z_0 <̊ z_1 <̊ … <̊ z_n = q`, consecutive points sharing a
    /// chart, along a shortest gallery of `𝒜(+∞)`.
    pub fn certify(&self, p: &MasurePoint, q: &MasurePoint) -> Result<Certificate> {
        let (hp, hq) = self.homes(p, q)?;
        let dp = self.value(p)?;
        let dq = self.value(q)?;
        if dp >= dq {
            return Err(Error::NotComparable);
        }
        let m = self.model;
        let gallery = m.gallery(hp.chart, hq.chart, Some(&SectorGermRef::plus_infinity(0)))?;
        let steps = gallery.len();
        let n = m.dim();
        let mut links = Vec::with_capacity(steps);
        let mut from = hp.coord.clone();
        for (i, w) in gallery.windows(2).enumerate() {
            let (c, d) = (w[0], w[1]);
            let target =
                &dp + (&dq - &dp) * Q::from_integer((i as i64 + 1).into()) / Q::from_integer((steps as i64).into());
            let inter = m.intersect_apartments(c, d)?;
            let mut poly: Polyhedron = inter.region.to_polyhedron(n);
            poly.push_eq(self.base.as_form.clone(), -target.clone());
            let z = poly
                .sample()
                .ok_or_else(|| Error::TheoremViolation(format!("charts {c} and {d} share no point at δ = {target}")))?;
            links.push(Link { chart: c, from: from.clone(), to: z.clone() });
            from = inter.weyl.to_affine(m.system()).apply(&z);
        }
        links.push(Link { chart: hq.chart, from, to: hq.coord.clone() });
        let cert = Certificate { links };
        if !self.verify(&cert, p, q) {
            return Err(Error::TheoremViolation("certificate does not replay".into()));
        }
        Ok(cert)
    }

    /// Replay a certificate: each link is a strict `≤̊` step inside its chart
    /// and consecutive links meet in the same point.
    pub fn verify(&self, cert: &Certificate, p: &MasurePoint, q: &MasurePoint) -> bool {
        let m = self.model;
        let s = m.system();
        let (Some(first), Some(last)) = (cert.links.first(), cert.links.last()) else {
            return false;
        };
        let at = |chart: usize, x: &Vector| MasurePoint::new(chart, x.clone());
        let same = |a: &MasurePoint, b: &MasurePoint| m.same_point(a, b).unwrap_or(false);
        if cert.links.iter().any(|l| l.chart >= m.charts() || l.from.len() != m.dim() || l.to.len() != m.dim()) {
            return false;
        }
        if !same(p, &at(first.chart, &first.from)) || !same(q, &at(last.chart, &last.to)) {
            return false;
        }
        let steps_ok = cert.links.iter().all(|l| l.from != l.to && open_leq(s, &l.from, &l.to) == Some(true));
        let joins_ok = cert.links.windows(2).all(|w| same(&at(w[0].chart, &w[0].to), &at(w[1].chart, &w[1].from)));
        steps_ok && joins_ok
    }
}

/// Depth-bounded reachability by strict chart-local `≤̊` steps between
/// points of a finite catalog.
pub struct ChainSearch {
    points: Vec<MasurePoint>,
    reach: Vec<Vec<u64>>,
}

impl ChainSearch {
    /// Chains of at most `depth` steps whose intermediate points lie in
    /// `points`.
    pub fn new(model: &GluedMasure, points: Vec<MasurePoint>, depth: usize) -> Self {
        let s = model.system();
        let n = points.len();
        let words = n.div_ceil(64);
        let reps: Vec<Vec<MasurePoint>> = points.iter().map(|p| model.representations(p)).collect();
        let mut step = vec![vec![0u64; words]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let linked = reps[i].iter().any(|a| {
                    reps[j].iter().any(|b| {
                        b.chart == a.chart && b.coord != a.coord && open_leq(s, &a.coord, &b.coord) == Some(true)
                    })
                });
                if linked {
                    step[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut reach = step.clone();
        for _ in 1..depth {
            let mut next = reach.clone();
            for (i, row) in reach.iter().enumerate() {
                for k in 0..n {
                    if row[k / 64] >> (k % 64) & 1 == 1 {
                        for (w, bits) in step[k].iter().enumerate() {
                            next[i][w] |= bits;
                        }
                    }
                }
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        ChainSearch { points, reach }
    }

    pub fn points(&self) -> &[MasurePoint] {
        &self.points
    }

    pub fn reachable(&self, i: usize, j: usize) -> bool {
        self.reach[i][j / 64] >> (j % 64) & 1 == 1
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, l) in self.links.iter().enumerate() {
            if i > 0 {
                write!(f, " ; ")?;
            }
            write!(f, "[{}] {} -> {}", l.chart, format_vector(&l.from), format_vector(&l.to))?;
        }
        Ok(())
    }
}

/// Sign of `δ(q) − δ(p)` computed directly in a shared chart.
pub fn chart_delta_sign(base: &NullRoot, a: &[Q], b: &[Q]) -> i8 {
    let d = base.eval(&sub(b, a));
    if d.is_positive() {
        1
    } else if d.is_zero() {
        0
    } else {
        -1
    }
}
