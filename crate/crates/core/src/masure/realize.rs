// SPDX-License-Identifier: Apache-2.0

//! A model realizing a given enclosed set as the intersection of two charts.

use super::{build_complex, GluedMasure, Gluing, ModelSpec};
use crate::apartment::{Apartment, HalfSpaceSet};
use crate::error::{Error, Result};
use crate::rational::format_vector;
use crate::root_system::WeylElement;

/// Chain `A_0, B_1, …, B_k` with `B_i` glued to `B_{i-1}` along the `i`-th
/// half-apartment by the identity. Returns the model and the index `k` of
/// the last chart, so that `A_0 ∩ B_k` is `p`.
pub fn realize_intersection(apartment: Apartment, p: &HalfSpaceSet) -> Result<(GluedMasure, usize)> {
    let s = &apartment.system;
    let n = apartment.dim();
    if !p.is_enclosed() {
        return Err(Error::Parse("expected a finite intersection of closed half-apartments".into()));
    }
    if p.closed.is_empty() {
        return Err(Error::EmptyInput);
    }
    for h in &p.closed {
        s.check_dim(&h.root)?;
        if !s.is_real_root(&h.root) {
            return Err(Error::NotARealRoot(format_vector(&h.root)));
        }
        if !apartment.admits_level(&h.root, &h.k) || !apartment.in_half_alpha_qvee(&h.root, &h.k) {
            return Err(Error::LevelNotReflectable(h.k.to_string()));
        }
    }
    let interior = HalfSpaceSet { closed: Vec::new(), open: p.closed.clone() };
    if interior.is_empty(n) {
        return Err(Error::EmptyInterior);
    }
    for i in 0..p.closed.len() {
        let mut rest = p.closed.clone();
        let h = rest.remove(i);
        if HalfSpaceSet::enclosed(rest).to_polyhedron(n).implies(&h.closed_ineq()) {
            return Err(Error::NotMinimalWriting(i));
        }
    }
    let k = p.closed.len();
    let gluings = p
        .closed
        .iter()
        .enumerate()
        .map(|(i, h)| Gluing { a: i, b: i + 1, halfspace: h.clone(), tau: WeylElement::identity(n) })
        .collect();
    let model = build_complex(ModelSpec { apartment, charts: k + 1, gluings })?;
    let inter = model.intersect_apartments(k, 0)?;
    if !inter.region.same_set(p, n) || !inter.weyl.to_affine(model.system()).is_identity() {
        return Err(Error::TheoremViolation("the realized intersection differs from the input".into()));
    }
    Ok((model, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartment::HalfSpace;
    use crate::rational::{q, qf, qvec};
    use crate::root_system::RootGeneratingSystem;

    fn box_set(lo: i64, hi: i64) -> HalfSpaceSet {
        HalfSpaceSet::enclosed(vec![HalfSpace::new(qvec(&[1]), q(-lo)), HalfSpace::new(qvec(&[-1]), q(hi))])
    }

    #[test]
    fn rank_one_segment() {
        let ap = Apartment::new(RootGeneratingSystem::rank_one());
        let (m, k) = realize_intersection(ap, &box_set(0, 2)).unwrap();
        assert_eq!(k, 2);
        assert_eq!(m.charts(), 3);
        let i = m.intersect_apartments(2, 0).unwrap();
        assert!(i.region.same_set(&box_set(0, 2), 1));
    }

    #[test]
    fn rejections() {
        let ap = Apartment::new(RootGeneratingSystem::rank_one());
        let half =
            HalfSpaceSet::enclosed(vec![HalfSpace::new(qvec(&[1]), q(0)), HalfSpace::new(qvec(&[-1]), qf(3, 2))]);
        assert_eq!(realize_intersection(ap.clone(), &half).err(), Some(Error::LevelNotReflectable("3/2".into())));
        assert_eq!(realize_intersection(ap.clone(), &box_set(1, 1)).err(), Some(Error::EmptyInterior));
        let redundant =
            HalfSpaceSet::enclosed(vec![HalfSpace::new(qvec(&[1]), q(0)), HalfSpace::new(qvec(&[1]), q(1))]);
        assert_eq!(realize_intersection(ap, &redundant).err(), Some(Error::NotMinimalWriting(1)));
    }

    #[test]
    fn affine_strip() {
        let s = RootGeneratingSystem::affine_a1();
        let a0 = s.root(0).clone();
        let strip = HalfSpaceSet::enclosed(vec![
            HalfSpace::new(a0.clone(), q(0)),
            HalfSpace::new(crate::rational::neg(&a0), q(2)),
        ]);
        let (m, k) = realize_intersection(Apartment::new(s), &strip).unwrap();
        assert!(m.intersect_apartments(0, k).unwrap().region.same_set(&strip, 3));
    }
}
