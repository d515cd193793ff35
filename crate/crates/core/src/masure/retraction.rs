// SPDX-License-Identifier: Apache-2.0

//! Retractions centred at sector germs.

use num_traits::{One, Signed, Zero};

use super::{GluedMasure, MasurePoint, SectorGermRef};
use crate::apartment::HalfSpaceSet;
use crate::error::{Error, Result};
use crate::rational::{axpy, dot, format_vector, sub, Vector, Q};
use crate::root_system::AffineMap;
use crate::tits_order::{check_lambda_path, leq, vectorial_distance, LambdaPath, PathCheck};

/// Parameters `t ∈ [0, 1]` with `x0 + t·dir` in the region.
fn segment_interval(region: &HalfSpaceSet, x0: &[Q], dir: &[Q]) -> Option<(Q, Q)> {
    let mut lo = Q::zero();
    let mut hi = Q::one();
    for h in &region.closed {
        let a = h.value(x0);
        let b = dot(&h.root, dir);
        if b.is_zero() {
            if a.is_negative() {
                return None;
            }
        } else if b.is_positive() {
            lo = lo.max(-a / b);
        } else {
            hi = hi.min(-a / b);
        }
    }
    (lo <= hi).then_some((lo, hi))
}

impl GluedMasure {
    /// Charts containing the germ, each with the map back to the germ's chart.
    fn germ_frame(&self, germ: &SectorGermRef) -> Result<Vec<(usize, AffineMap)>> {
        let s = self.system();
        Ok(self.charts_with_germ(germ)?.into_iter().map(|(c, piece)| (c, piece.weyl.inverse(s).to_affine(s))).collect())
    }

    /// `ρ_{A,𝔮}(p)` in the coordinates of the germ's chart `A`.
    pub fn retraction(&self, germ: &SectorGermRef, p: &MasurePoint) -> Result<Vector> {
        self.check_point(p)?;
        let mut image: Option<(usize, Vector)> = None;
        for (c, back) in self.germ_frame(germ)? {
            let Some(y) = self.representation(p, c) else { continue };
            let x = back.apply(&y);
            match &image {
                None => image = Some((c, x)),
                Some((c0, x0)) if *x0 != x => {
                    return Err(Error::TheoremViolation(format!(
                        "retraction of {p} is {} through chart {c0} but {} through chart {c}",
                        format_vector(x0),
                        format_vector(&x)
                    )))
                }
                Some(_) => {}
            }
        }
        image.map(|(_, x)| x).ok_or_else(|| Error::NoApartmentContainsBoth(p.to_string()))
    }

    /// `p ∈ A_0` decided by comparing the retractions from `±∞` of chart 0.
    pub fn characterize_standard(&self, p: &MasurePoint) -> Result<bool> {
        let plus = self.retraction(&SectorGermRef::plus_infinity(0), p)?;
        let minus = self.retraction(&SectorGermRef::minus_infinity(0), p)?;
        Ok(plus == minus)
    }

    /// Image of the segment `[p, q]` under the retraction, with `λ = d^v(p, q)`.
    ///
    /// The image is returned as a piecewise-linear path and checked to be a
    /// λ-path.
    pub fn retract_segment(
        &self,
        germ: &SectorGermRef,
        p: &MasurePoint,
        q: &MasurePoint,
    ) -> Result<(LambdaPath, Vector)> {
        self.check_point(p)?;
        self.check_point(q)?;
        let s = self.system();
        let mut shared = false;
        let mut chosen = None;
        for c in 0..self.charts() {
            if let (Some(pc), Some(qc)) = (self.representation(p, c), self.representation(q, c)) {
                shared = true;
                if leq(s, &pc, &qc) == Some(true) {
                    chosen = Some((c, pc, qc));
                    break;
                }
            }
        }
        let Some((c, x0, x1)) = chosen else {
            return Err(if shared { Error::NotComparable } else { Error::NoCommonChart });
        };
        let lambda = vectorial_distance(s, &x0, &x1)?;
        let dir = sub(&x1, &x0);

        let mut records: Vec<(Q, Q, AffineMap)> = Vec::new();
        for (d, back) in self.germ_frame(germ)? {
            for piece in self.pieces(c, d) {
                if let Some((lo, hi)) = segment_interval(&piece.region, &x0, &dir) {
                    records.push((lo, hi, back.compose(&piece.map)));
                }
            }
        }
        let mut cuts: Vec<Q> = vec![Q::zero(), Q::one()];
        for (lo, hi, _) in &records {
            cuts.push(lo.clone());
            cuts.push(hi.clone());
        }
        cuts.sort();
        cuts.dedup();

        let gap = || Error::NoApartmentContainsBoth(format!("part of the segment {p} - {q}"));
        let mut start: Option<Vector> = None;
        let mut position: Option<Vector> = None;
        let mut breakpoints = vec![Q::zero()];
        let mut velocities = Vec::new();
        for w in cuts.windows(2) {
            let (t0, t1) = (&w[0], &w[1]);
            let (_, _, f) = records.iter().find(|(lo, hi, _)| lo <= t0 && t1 <= hi).ok_or_else(gap)?;
            let here = f.apply(&axpy(&x0, t0, &dir));
            match &position {
                None => start = Some(here.clone()),
                Some(x) if *x != here => {
                    return Err(Error::TheoremViolation(format!(
                        "retracted segment {p} - {q} is discontinuous at t = {t0}"
                    )))
                }
                Some(_) => {}
            }
            let v = f.apply_linear(&dir);
            position = Some(axpy(&here, &(t1 - t0), &v));
            velocities.push(v);
            breakpoints.push(t1.clone());
        }
        if velocities.is_empty() {
            // p = q: a constant path.
            let (_, _, f) = records.first().ok_or_else(gap)?;
            start = Some(f.apply(&x0));
            breakpoints.push(Q::one());
            velocities.push(dir.clone());
        }
        let path = LambdaPath::new(start.expect("path has a piece"), breakpoints, velocities).merged();
        match check_lambda_path(s, &path, &lambda)? {
            PathCheck::Valid => Ok((path, lambda)),
            PathCheck::InvalidSegment(j) => Err(Error::TheoremViolation(format!(
                "retracted segment {p} - {q} is not a λ-path: piece {j} has the wrong direction"
            ))),
        }
    }
}
