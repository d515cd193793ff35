// SPDX-License-Identifier: Apache-2.0

//! Exact feasibility, optimization and sampling for small rational polyhedra.
//!
//! A [`Polyhedron`] is a finite conjunction of linear equalities, closed
//! inequalities and strict inequalities. All decisions go through
//! Fourier–Motzkin elimination with strictness tracking, which is exact and
//! perfectly adequate for the dimensions used here (at most a handful of
//! variables after equality substitution).

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::rational::{ceil, dot, floor, primitive_integer, zeros, Vector, Q};

/// `coeffs · x + constant ≥ 0`, or `> 0` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ineq {
    pub coeffs: Vector,
    pub constant: Q,
    pub strict: bool,
}

impl Ineq {
    pub fn closed(coeffs: Vector, constant: Q) -> Self {
        Ineq { coeffs, constant, strict: false }
    }

    pub fn open(coeffs: Vector, constant: Q) -> Self {
        Ineq { coeffs, constant, strict: true }
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        dot(&self.coeffs, x) + &self.constant
    }

    pub fn holds(&self, x: &[Q]) -> bool {
        let v = self.eval(x);
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }

    /// The complement `{ not self }`.
    pub fn negation(&self) -> Ineq {
        Ineq {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            constant: -self.constant.clone(),
            strict: !self.strict,
        }
    }

    /// Truth value when no variable appears.
    fn trivial(&self) -> Option<bool> {
        if self.coeffs.iter().all(Zero::is_zero) {
            Some(if self.strict { self.constant.is_positive() } else { !self.constant.is_negative() })
        } else {
            None
        }
    }

    /// Positive rescaling to coprime integer coefficients.
    fn normalized(self) -> Ineq {
        let mut all = self.coeffs.clone();
        all.push(self.constant.clone());
        if self.coeffs.iter().all(Zero::is_zero) {
            let constant = if self.constant.is_zero() {
                Q::zero()
            } else if self.constant.is_positive() {
                Q::one()
            } else {
                -Q::one()
            };
            return Ineq { coeffs: self.coeffs, constant, strict: self.strict };
        }
        let mut p = primitive_integer(&all);
        let constant = p.pop().unwrap();
        Ineq { coeffs: p, constant, strict: self.strict }
    }
}

/// Outcome of minimizing a linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Optimum {
    Infeasible,
    Unbounded,
    /// Infimum `value`; `attained` is false when only strict constraints bind.
    Bounded {
        value: Q,
        attained: bool,
    },
}

/// Finite conjunction of linear constraints on `Q^dim`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polyhedron {
    pub dim: usize,
    pub ineqs: Vec<Ineq>,
    /// `coeffs · x + constant = 0`
    pub eqs: Vec<(Vector, Q)>,
}

struct Substitution {
    var: usize,
    /// `x_var = expr · x + constant`
    expr: Vector,
    constant: Q,
}

impl Polyhedron {
    pub fn new(dim: usize) -> Self {
        Polyhedron { dim, ineqs: Vec::new(), eqs: Vec::new() }
    }

    pub fn push(&mut self, ineq: Ineq) {
        debug_assert_eq!(ineq.coeffs.len(), self.dim);
        self.ineqs.push(ineq);
    }

    pub fn push_eq(&mut self, coeffs: Vector, constant: Q) {
        debug_assert_eq!(coeffs.len(), self.dim);
        self.eqs.push((coeffs, constant));
    }

    pub fn with(mut self, ineq: Ineq) -> Self {
        self.push(ineq);
        self
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.ineqs.iter().all(|c| c.holds(x)) && self.eqs.iter().all(|(a, c)| (dot(a, x) + c).is_zero())
    }

    pub fn is_empty(&self) -> bool {
        self.sample().is_none()
    }

    /// True when every point of `self` satisfies `ineq`.
    pub fn implies(&self, ineq: &Ineq) -> bool {
        self.clone().with(ineq.negation()).is_empty()
    }

    /// `self ⊆ other`
    pub fn subset_of(&self, other: &Polyhedron) -> bool {
        if self.is_empty() {
            return true;
        }
        other.ineqs.iter().all(|c| self.implies(c))
            && other.eqs.iter().all(|(a, c)| {
                self.implies(&Ineq::closed(a.clone(), c.clone()))
                    && self.implies(&Ineq::closed(a.iter().map(|x| -x).collect(), -c.clone()))
            })
    }

    pub fn intersect(&self, other: &Polyhedron) -> Polyhedron {
        let mut out = self.clone();
        out.ineqs.extend(other.ineqs.iter().cloned());
        out.eqs.extend(other.eqs.iter().cloned());
        out
    }

    /// Substitute equalities away. Returns the remaining inequalities and the
    /// substitutions in application order, or `None` if inconsistent.
    fn eliminate_equalities(&self, keep: &[usize]) -> Option<(Vec<Ineq>, Vec<Substitution>)> {
        let mut ineqs = self.ineqs.clone();
        let mut eqs = self.eqs.clone();
        let mut subs = Vec::new();
        while let Some((a, c)) = eqs.pop() {
            let Some(j) = (0..self.dim).find(|&j| !a[j].is_zero() && !keep.contains(&j)) else {
                if a.iter().all(Zero::is_zero) {
                    if !c.is_zero() {
                        return None;
                    }
                } else {
                    ineqs.push(Ineq::closed(a.clone(), c.clone()));
                    ineqs.push(Ineq::closed(a.iter().map(|x| -x).collect(), -c));
                }
                continue;
            };
            // x_j = -(sum_{i != j} a_i x_i + c) / a_j
            let aj = a[j].clone();
            let mut expr: Vector = a.iter().map(|x| -x / &aj).collect();
            expr[j] = Q::zero();
            let constant = -&c / &aj;
            let apply = |coeffs: &mut Vector, cst: &mut Q| {
                let f = coeffs[j].clone();
                if !f.is_zero() {
                    coeffs[j] = Q::zero();
                    for (x, e) in coeffs.iter_mut().zip(&expr) {
                        *x += &f * e;
                    }
                    *cst += &f * &constant;
                }
            };
            for ineq in ineqs.iter_mut() {
                apply(&mut ineq.coeffs, &mut ineq.constant);
            }
            for (ea, ec) in eqs.iter_mut() {
                apply(ea, ec);
            }
            for s in subs.iter_mut() {
                let s: &mut Substitution = s;
                apply(&mut s.expr, &mut s.constant);
            }
            subs.push(Substitution { var: j, expr, constant });
        }
        Some((ineqs, subs))
    }

    /// Eliminate every variable outside `keep`. Returns the stages (variable,
    /// system before eliminating it), the final system and the equality
    /// substitutions; `None` if infeasible.
    #[allow(clippy::type_complexity)]
    fn project(&self, keep: &[usize]) -> Option<(Vec<(usize, Vec<Ineq>)>, Vec<Ineq>, Vec<Substitution>)> {
        let (ineqs, subs) = self.eliminate_equalities(keep)?;
        let mut current = tidy(ineqs)?;
        let mut stages = Vec::new();
        loop {
            let candidates: Vec<usize> = (0..self.dim)
                .filter(|j| !keep.contains(j) && current.iter().any(|c| !c.coeffs[*j].is_zero()))
                .collect();
            let Some(&j) = candidates.iter().min_by_key(|&&j| {
                let pos = current.iter().filter(|c| c.coeffs[j].is_positive()).count();
                let neg = current.iter().filter(|c| c.coeffs[j].is_negative()).count();
                pos * neg
            }) else {
                break;
            };
            let next = eliminate(&current, j)?;
            stages.push((j, std::mem::replace(&mut current, next)));
        }
        Some((stages, current, subs))
    }

    /// A point of the polyhedron, preferring small integers when available.
    pub fn sample(&self) -> Option<Vector> {
        let (stages, fin, subs) = self.project(&[])?;
        debug_assert!(fin.iter().all(|c| c.trivial() == Some(true)));
        let mut x = zeros(self.dim);
        for (var, system) in stages.iter().rev() {
            x[*var] = pick_value(system, *var, &x)?;
        }
        for s in subs.iter().rev() {
            x[s.var] = dot(&s.expr, &x) + &s.constant;
        }
        debug_assert!(self.contains(&x), "sample left the polyhedron");
        Some(x)
    }

    /// Infimum of `form · x` over the polyhedron.
    pub fn minimize(&self, form: &[Q]) -> Optimum {
        let t = self.dim;
        let lift = |v: &Vector| {
            let mut w = v.clone();
            w.push(Q::zero());
            w
        };
        let mut lifted = Polyhedron::new(self.dim + 1);
        for c in &self.ineqs {
            lifted.push(Ineq { coeffs: lift(&c.coeffs), constant: c.constant.clone(), strict: c.strict });
        }
        for (a, c) in &self.eqs {
            lifted.push_eq(lift(a), c.clone());
        }
        let mut def = lift(&form.to_vec());
        def[t] = -Q::one();
        lifted.push_eq(def, Q::zero());
        let Some((_, fin, _)) = lifted.project(&[t]) else {
            return Optimum::Infeasible;
        };
        let mut best: Option<(Q, bool)> = None;
        for c in &fin {
            if c.coeffs[t].is_positive() {
                let bound = -&c.constant / &c.coeffs[t];
                best = match best {
                    None => Some((bound, c.strict)),
                    Some((b, _)) if bound > b => Some((bound, c.strict)),
                    Some((b, s)) if bound == b => Some((b, s || c.strict)),
                    keep => keep,
                };
            }
        }
        match best {
            None => Optimum::Unbounded,
            Some((value, strict)) => Optimum::Bounded { value, attained: !strict },
        }
    }

    pub fn maximize(&self, form: &[Q]) -> Optimum {
        let negf: Vector = form.iter().map(|x| -x).collect();
        match self.minimize(&negf) {
            Optimum::Bounded { value, attained } => Optimum::Bounded { value: -value, attained },
            other => other,
        }
    }

    /// Indices of closed inequalities that hold with equality on the whole
    /// (nonempty) polyhedron.
    pub fn implicit_equalities(&self) -> Vec<usize> {
        (0..self.ineqs.len())
            .filter(|&i| {
                let c = &self.ineqs[i];
                !c.strict && self.clone().with(Ineq { strict: true, ..c.clone() }).is_empty()
            })
            .collect()
    }

    /// Affine hull: a point and a basis of directions. `None` if empty.
    pub fn affine_hull(&self) -> Option<(Vector, Vec<Vector>)> {
        let p = self.sample()?;
        let mut normals: Vec<Vector> = self.eqs.iter().map(|(a, _)| a.clone()).collect();
        normals.extend(self.implicit_equalities().into_iter().map(|i| self.ineqs[i].coeffs.clone()));
        let dirs = if normals.is_empty() {
            (0..self.dim).map(|i| crate::rational::unit(self.dim, i)).collect()
        } else {
            crate::rational::nullspace(&normals, self.dim)
        };
        Some((p, dirs))
    }

    /// Drop inequalities implied by the others.
    pub fn remove_redundant(&mut self) {
        let mut i = 0;
        while i < self.ineqs.len() {
            let c = self.ineqs.remove(i);
            if !self.implies(&c) {
                self.ineqs.insert(i, c);
                i += 1;
            }
        }
    }
}

/// Normalize, drop tautologies, keep the tightest constraint per direction.
fn tidy(ineqs: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut best: HashMap<Vector, (Q, bool)> = HashMap::new();
    let mut order = Vec::new();
    for c in ineqs {
        let c = c.normalized();
        match c.trivial() {
            Some(true) => continue,
            Some(false) => return None,
            None => {}
        }
        match best.get_mut(&c.coeffs) {
            None => {
                order.push(c.coeffs.clone());
                best.insert(c.coeffs, (c.constant, c.strict));
            }
            Some((k, s)) => {
                if c.constant < *k {
                    *k = c.constant;
                    *s = c.strict;
                } else if c.constant == *k {
                    *s = *s || c.strict;
                }
            }
        }
    }
    Some(
        order
            .into_iter()
            .map(|coeffs| {
                let (constant, strict) = best.remove(&coeffs).unwrap();
                Ineq { coeffs, constant, strict }
            })
            .collect(),
    )
}

fn eliminate(system: &[Ineq], j: usize) -> Option<Vec<Ineq>> {
    let mut out = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for c in system {
        if c.coeffs[j].is_positive() {
            pos.push(c);
        } else if c.coeffs[j].is_negative() {
            neg.push(c);
        } else {
            out.push(c.clone());
        }
    }
    for p in &pos {
        for n in &neg {
            let ap = p.coeffs[j].clone();
            let an = -n.coeffs[j].clone();
            let coeffs: Vector = p.coeffs.iter().zip(&n.coeffs).map(|(x, y)| x * &an + y * &ap).collect();
            let constant = &p.constant * &an + &n.constant * &ap;
            out.push(Ineq { coeffs, constant, strict: p.strict || n.strict });
        }
    }
    tidy(out)
}

/// Choose a value of `x[var]` satisfying `system` given the other fixed values.
fn pick_value(system: &[Ineq], var: usize, x: &[Q]) -> Option<Q> {
    let mut lo: Option<(Q, bool)> = None;
    let mut hi: Option<(Q, bool)> = None;
    for c in system {
        let a = &c.coeffs[var];
        if a.is_zero() {
            continue;
        }
        let rest = c.eval(x) - a * &x[var];
        let bound = -rest / a;
        if a.is_positive() {
            lo = Some(match lo {
                Some((b, s)) if b > bound => (b, s),
                Some((b, s)) if b == bound => (b, s || c.strict),
                _ => (bound, c.strict),
            });
        } else {
            hi = Some(match hi {
                Some((b, s)) if b < bound => (b, s),
                Some((b, s)) if b == bound => (b, s || c.strict),
                _ => (bound, c.strict),
            });
        }
    }
    let ok = |v: &Q| {
        lo.as_ref().is_none_or(|(b, s)| if *s { v > b } else { v >= b })
            && hi.as_ref().is_none_or(|(b, s)| if *s { v < b } else { v <= b })
    };
    let zero = Q::zero();
    if ok(&zero) {
        return Some(zero);
    }
    let value = match (&lo, &hi) {
        (None, None) => zero,
        (Some((b, _)), None) => {
            if ok(b) {
                b.clone()
            } else {
                floor(b) + Q::one()
            }
        }
        (None, Some((b, _))) => {
            if ok(b) {
                b.clone()
            } else {
                ceil(b) - Q::one()
            }
        }
        (Some((l, _)), Some((h, _))) => {
            let c = ceil(l);
            if ok(&c) {
                c
            } else if ok(&(c.clone() + Q::one())) {
                c + Q::one()
            } else if ok(l) {
                l.clone()
            } else {
                (l + h) / Q::from_integer(2.into())
            }
        }
    };
    ok(&value).then_some(value)
}
