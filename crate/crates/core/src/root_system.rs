// SPDX-License-Identifier: Apache-2.0

//! Generalized Cartan matrices, root generating systems and the Weyl group.
//!
//! Conventions: `a[i][j] = α_j(α_i^∨)`, roots are linear forms on the
//! apartment given by coordinate rows, coroots are vectors, and the simple
//! reflection is `r_i(v) = v − α_i(v) α_i^∨`.

use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{
    abs_sum, axpy, ceil, det, dot, identity, mat_mul, mat_vec, nullspace, primitive_integer, q, qvec, rank, serde_qvec,
    solve, sub, transpose, unit, zeros, Matrix, Vector, Q,
};

/// A validated generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct KacMoodyMatrix {
    entries: Vec<Vec<i64>>,
}

impl TryFrom<Vec<Vec<i64>>> for KacMoodyMatrix {
    type Error = Error;

    fn try_from(entries: Vec<Vec<i64>>) -> Result<Self> {
        validate_gcm(&entries)
    }
}

impl From<KacMoodyMatrix> for Vec<Vec<i64>> {
    fn from(a: KacMoodyMatrix) -> Self {
        a.entries
    }
}

/// Check the three defining conditions of a generalized Cartan matrix.
pub fn validate_gcm(entries: &[Vec<i64>]) -> Result<KacMoodyMatrix> {
    let m = entries.len();
    if m == 0 || entries.iter().any(|r| r.len() != m) {
        return Err(Error::NotSquare);
    }
    for i in 0..m {
        if entries[i][i] != 2 {
            return Err(Error::DiagonalNotTwo(i));
        }
    }
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            if entries[i][j] > 0 {
                return Err(Error::PositiveOffDiagonal(i, j));
            }
            if (entries[i][j] == 0) != (entries[j][i] == 0) {
                let (a, b) = if entries[i][j] == 0 { (i, j) } else { (j, i) };
                return Err(Error::AsymmetricZero(a, b));
            }
        }
    }
    Ok(KacMoodyMatrix { entries: entries.to_vec() })
}

/// Type of one indecomposable block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum BlockType {
    Finite,
    Affine { marks: Vec<i64> },
    Indefinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub indices: Vec<usize>,
    pub kind: BlockType,
}

impl KacMoodyMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    fn submatrix(&self, idx: &[usize]) -> Matrix {
        idx.iter().map(|&i| idx.iter().map(|&j| q(self.entries[i][j])).collect()).collect()
    }

    /// Connected components of the Dynkin graph.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let m = self.size();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..m {
                    if !seen[j] && self.entries[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        self.blocks().len() == 1
    }
}

fn all_principal_minors_positive(a: &Matrix, proper_only: bool) -> bool {
    let k = a.len();
    let full = (1usize << k) - 1;
    (1..=full).filter(|&mask| !(proper_only && mask == full)).all(|mask| {
        let idx: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Matrix = idx.iter().map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect()).collect();
        det(&sub).is_positive()
    })
}

/// Label each indecomposable block finite, affine (with marks) or indefinite.
///
/// Uses the principal-minor test: finite iff all principal minors are
/// positive, affine iff the determinant vanishes and all proper principal
/// minors are positive. Marks are the primitive positive kernel vector `c`
/// with `A c = 0`, which makes `Σ c_i α_i` vanish on every simple coroot.
pub fn classify_type(a: &KacMoodyMatrix) -> Vec<Block> {
    a.blocks()
        .into_iter()
        .map(|indices| {
            let sub = a.submatrix(&indices);
            let kind = if all_principal_minors_positive(&sub, false) {
                BlockType::Finite
            } else if det(&sub).is_zero() && all_principal_minors_positive(&sub, true) {
                let ker = nullspace(&sub, sub.len());
                let mut c = primitive_integer(&ker[0]);
                if c[0].is_negative() {
                    c = c.into_iter().map(|x| -x).collect();
                }
                BlockType::Affine { marks: c.iter().map(|x| x.to_integer().to_i64().unwrap()).collect() }
            } else {
                BlockType::Indefinite
            };
            Block { indices, kind }
        })
        .collect()
}

/// A realization of a generalized Cartan matrix on `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootGeneratingSystem {
    gcm: KacMoodyMatrix,
    dim: usize,
    roots: Matrix,
    coroots: Matrix,
}

/// An element of `W = W^v ⋉ Q^∨`: `v ↦ translation + r_{i_1}∘…∘r_{i_k}(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
    #[serde(with = "serde_qvec")]
    pub translation: Vector,
}

/// Normal form of a Weyl element: `v ↦ linear · v + translation`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub linear: Matrix,
    pub translation: Vector,
}

impl AffineMap {
    pub fn identity(n: usize) -> Self {
        AffineMap { linear: identity(n), translation: zeros(n) }
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        mat_vec(&self.linear, v).into_iter().zip(&self.translation).map(|(a, b)| a + b).collect()
    }

    pub fn apply_linear(&self, v: &[Q]) -> Vector {
        mat_vec(&self.linear, v)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap { linear: mat_mul(&self.linear, &other.linear), translation: self.apply(&other.translation) }
    }

    /// Pull back the linear form `α` with constant `k`: returns `(α∘L, k + α(t))`.
    pub fn pullback_form(&self, alpha: &[Q], k: &Q) -> (Vector, Q) {
        let n = self.linear.len();
        let form = (0..n).map(|j| (0..n).fold(Q::zero(), |acc, i| acc + &alpha[i] * &self.linear[i][j])).collect();
        (form, k + dot(alpha, &self.translation))
    }

    pub fn is_identity(&self) -> bool {
        self.linear == identity(self.linear.len()) && self.translation.iter().all(Zero::is_zero)
    }
}

/// The affine null root of an affine system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullRoot {
    pub marks: Vec<i64>,
    #[serde(with = "serde_qvec")]
    pub as_form: Vector,
}

impl NullRoot {
    pub fn eval(&self, v: &[Q]) -> Q {
        dot(&self.as_form, v)
    }
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { word: Vec::new(), translation: zeros(n) }
    }

    pub fn reflection(i: usize, n: usize) -> Self {
        WeylElement { word: vec![i], translation: zeros(n) }
    }

    pub fn translation(t: Vector) -> Self {
        WeylElement { word: Vec::new(), translation: t }
    }

    pub fn from_word(word: Vec<usize>, n: usize) -> Self {
        WeylElement { word, translation: zeros(n) }
    }

    /// Evaluate on a point, innermost letter last in the word.
    pub fn apply(&self, s: &RootGeneratingSystem, v: &[Q]) -> Result<Vector> {
        s.check_word(&self.word)?;
        s.check_dim(&self.translation)?;
        Ok(crate::rational::add(&s.apply_word(&self.word, v), &self.translation))
    }

    /// `self ∘ other`
    pub fn compose(&self, s: &RootGeneratingSystem, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend(other.word.iter().copied());
        let translation = crate::rational::add(&self.translation, &s.apply_word(&self.word, &other.translation));
        WeylElement { word: cancel_pairs(word), translation }
    }

    pub fn inverse(&self, s: &RootGeneratingSystem) -> WeylElement {
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        let t = s.apply_word(&word, &self.translation);
        WeylElement { word, translation: t.into_iter().map(|x| -x).collect() }
    }

    pub fn to_affine(&self, s: &RootGeneratingSystem) -> AffineMap {
        let n = s.dim();
        let cols: Vec<Vector> = (0..n).map(|j| s.apply_word(&self.word, &unit(n, j))).collect();
        AffineMap { linear: transpose(&cols, n), translation: self.translation.clone() }
    }

    /// Equality as maps of the apartment.
    pub fn equivalent(&self, s: &RootGeneratingSystem, other: &WeylElement) -> bool {
        self.to_affine(s) == other.to_affine(s)
    }

    /// Linear part only: true when it is the identity of `W^v`.
    pub fn is_translation(&self, s: &RootGeneratingSystem) -> bool {
        self.to_affine(s).linear == identity(s.dim())
    }
}

/// Remove adjacent repeated letters (`r_i r_i = 1`) until none remain.
pub fn cancel_pairs(word: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(word.len());
    for i in word {
        if out.last() == Some(&i) {
            out.pop();
        } else {
            out.push(i);
        }
    }
    out
}

impl RootGeneratingSystem {
    /// Build and check compatibility `⟨root_j, coroot_i⟩ = a[i][j]` and freeness.
    pub fn new(gcm: KacMoodyMatrix, roots: Matrix, coroots: Matrix) -> Result<Self> {
        let m = gcm.size();
        if roots.len() != m || coroots.len() != m {
            return Err(Error::InvalidRealization(format!("expected {m} roots and {m} coroots")));
        }
        let dim = roots[0].len();
        if dim == 0 || roots.iter().chain(&coroots).any(|r| r.len() != dim) {
            return Err(Error::InvalidRealization("ragged coordinate rows".into()));
        }
        for i in 0..m {
            for j in 0..m {
                if dot(&roots[j], &coroots[i]) != q(gcm.entry(i, j)) {
                    return Err(Error::InvalidRealization(format!(
                        "<root {j}, coroot {i}> != a[{i}][{j}] = {}",
                        gcm.entry(i, j)
                    )));
                }
            }
        }
        if rank(&roots) != m || rank(&coroots) != m {
            return Err(Error::InvalidRealization("roots or coroots are not free".into()));
        }
        Ok(RootGeneratingSystem { gcm, dim, roots, coroots })
    }

    /// Realization of dimension `2m − rank A`: coroots are the first `m`
    /// basis vectors; each root row starts with its column of `A`, and one
    /// extra unit coordinate is appended per root outside a row basis of `Aᵀ`.
    pub fn minimal_realization(gcm: KacMoodyMatrix) -> Self {
        let m = gcm.size();
        let at: Matrix = (0..m).map(|j| (0..m).map(|i| q(gcm.entry(i, j))).collect()).collect();
        let mut basis: Vec<usize> = Vec::new();
        for j in 0..m {
            let mut trial: Matrix = basis.iter().map(|&b| at[b].clone()).collect();
            trial.push(at[j].clone());
            if rank(&trial) == trial.len() {
                basis.push(j);
            }
        }
        let extra: Vec<usize> = (0..m).filter(|j| !basis.contains(j)).collect();
        let dim = m + extra.len();
        let roots: Matrix = (0..m)
            .map(|j| {
                let mut row = at[j].clone();
                row.extend(extra.iter().map(|&e| if e == j { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        let coroots: Matrix = (0..m).map(|i| unit(dim, i)).collect();
        RootGeneratingSystem::new(gcm, roots, coroots).expect("minimal realization is valid")
    }

    /// Rank one: `α(v) = v`, `α^∨ = 2`.
    pub fn rank_one() -> Self {
        let gcm = validate_gcm(&[vec![2]]).unwrap();
        RootGeneratingSystem::new(gcm, vec![qvec(&[1])], vec![qvec(&[2])]).unwrap()
    }

    /// Type A2 with coroots the standard basis.
    pub fn a2() -> Self {
        let gcm = validate_gcm(&[vec![2, -1], vec![-1, 2]]).unwrap();
        RootGeneratingSystem::new(gcm, vec![qvec(&[2, -1]), qvec(&[-1, 2])], vec![qvec(&[1, 0]), qvec(&[0, 1])])
            .unwrap()
    }

    /// Affine A1 on `Q^3` with `δ = (0,0,1)`.
    pub fn affine_a1() -> Self {
        let gcm = validate_gcm(&[vec![2, -2], vec![-2, 2]]).unwrap();
        RootGeneratingSystem::new(
            gcm,
            vec![qvec(&[2, -2, 1]), qvec(&[-2, 2, 0])],
            vec![qvec(&[1, 0, 0]), qvec(&[0, 1, 0])],
        )
        .unwrap()
    }

    /// Affine A2, minimal realization.
    pub fn affine_a2() -> Self {
        let gcm = validate_gcm(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).unwrap();
        Self::minimal_realization(gcm)
    }

    pub fn gcm(&self) -> &KacMoodyMatrix {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.size()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn roots(&self) -> &Matrix {
        &self.roots
    }

    pub fn coroots(&self) -> &Matrix {
        &self.coroots
    }

    pub fn root(&self, i: usize) -> &Vector {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &Vector {
        &self.coroots[i]
    }

    pub(crate) fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&i| i >= self.rank()) {
            Some(&i) => Err(Error::IndexOutOfRange(i)),
            None => Ok(()),
        }
    }

    pub fn check_dim(&self, v: &[Q]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, got: v.len() })
        }
    }

    pub fn reflect(&self, i: usize, v: &[Q]) -> Vector {
        let c = dot(&self.roots[i], v);
        axpy(v, &-c, &self.coroots[i])
    }

    /// `r_{i_1} ∘ … ∘ r_{i_k}` applied to `v`.
    pub fn apply_word(&self, word: &[usize], v: &[Q]) -> Vector {
        word.iter().rev().fold(v.to_vec(), |acc, &i| self.reflect(i, &acc))
    }

    /// Action of `r_i` on a linear form: `β ↦ β − β(α_i^∨) α_i`.
    pub fn reflect_form(&self, i: usize, beta: &[Q]) -> Vector {
        let c = dot(beta, &self.coroots[i]);
        axpy(beta, &-c, &self.roots[i])
    }

    /// `w.β = β ∘ w⁻¹` for the word `w`.
    pub fn apply_word_form(&self, word: &[usize], beta: &[Q]) -> Vector {
        word.iter().rev().fold(beta.to_vec(), |acc, &i| self.reflect_form(i, &acc))
    }

    pub fn apply_weyl(&self, w: &WeylElement, v: &[Q]) -> Result<Vector> {
        w.apply(self, v)
    }

    pub fn is_dominant(&self, v: &[Q]) -> bool {
        self.roots.iter().all(|a| !dot(a, v).is_negative())
    }

    pub fn default_dominance_bound(v: &[Q]) -> usize {
        let b = ceil(&(q(10) * (Q::one() + abs_sum(v))));
        b.to_integer().to_usize().unwrap_or(usize::MAX)
    }

    /// Dominant representative with the default iteration bound.
    pub fn dominant_representative(&self, v: &[Q]) -> Result<(Vector, WeylElement)> {
        self.dominant_representative_bounded(v, Self::default_dominance_bound(v))
    }

    /// Repeatedly reflect along the first simple root negative on `v`.
    /// Returns `λ` and `w` with `λ = w.v`.
    pub fn dominant_representative_bounded(&self, v: &[Q], bound: usize) -> Result<(Vector, WeylElement)> {
        self.check_dim(v)?;
        let mut cur = v.to_vec();
        let mut applied = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| dot(&self.roots[i], &cur).is_negative()) {
            if applied.len() >= bound {
                return Err(Error::NotInTitsCone { bound });
            }
            cur = self.reflect(i, &cur);
            applied.push(i);
        }
        applied.reverse();
        Ok((cur, WeylElement::from_word(applied, self.dim)))
    }

    /// All `w.α_i` with `ℓ(w) ≤ max_len` (seeded with `±α_i`), and whether
    /// one more layer adds nothing.
    pub fn enumerate_real_roots(&self, max_len: usize) -> (Vec<Vector>, bool) {
        let mut seen: HashSet<Vector> = HashSet::new();
        let mut order: Vec<Vector> = Vec::new();
        let mut frontier: Vec<Vector> = Vec::new();
        for r in &self.roots {
            for f in [r.clone(), r.iter().map(|x| -x).collect::<Vector>()] {
                if seen.insert(f.clone()) {
                    order.push(f.clone());
                    frontier.push(f);
                }
            }
        }
        for depth in 0..=max_len {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..self.rank() {
                    let g = self.reflect_form(i, beta);
                    if !seen.contains(&g) {
                        if depth == max_len {
                            return (order, false);
                        }
                        seen.insert(g.clone());
                        order.push(g.clone());
                        next.push(g);
                    }
                }
            }
            if next.is_empty() {
                return (order, true);
            }
            frontier = next;
        }
        (order, false)
    }

    /// Coordinates of a linear form in the basis of simple roots.
    pub fn simple_root_coords(&self, beta: &[Q]) -> Option<Vector> {
        let at = transpose(&self.roots, self.dim);
        solve(&at, beta, self.rank())
    }

    /// Coordinates of a vector in the basis of simple coroots.
    pub fn coroot_coords(&self, v: &[Q]) -> Option<Vector> {
        let at = transpose(&self.coroots, self.dim);
        solve(&at, v, self.rank())
    }

    /// Reduce a real root to `±α_i` by height-lowering reflections. Returns
    /// `(i, sign)` and a word `w` with `β = sign · w.α_i`.
    pub fn real_root_orbit(&self, beta: &[Q]) -> Option<(usize, i8, Vec<usize>)> {
        let c = self.simple_root_coords(beta)?;
        if c.iter().any(|x| !x.is_integer()) || c.iter().all(Zero::is_zero) {
            return None;
        }
        let sign: i8 = if c.iter().all(|x| !x.is_negative()) {
            1
        } else if c.iter().all(|x| !x.is_positive()) {
            -1
        } else {
            return None;
        };
        let mut cur: Vector = if sign > 0 { beta.to_vec() } else { beta.iter().map(|x| -x).collect() };
        let mut word = Vec::new();
        loop {
            let c = self.simple_root_coords(&cur)?;
            if c.iter().any(Signed::is_negative) {
                return None;
            }
            let nonzero: Vec<usize> = (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
            if nonzero.len() == 1 && c[nonzero[0]].is_one() {
                word.reverse();
                return Some((nonzero[0], sign, word));
            }
            let i = (0..self.rank()).find(|&i| dot(&cur, &self.coroots[i]).is_positive())?;
            cur = self.reflect_form(i, &cur);
            word.push(i);
        }
    }

    pub fn is_real_root(&self, beta: &[Q]) -> bool {
        self.real_root_orbit(beta).is_some()
    }

    /// The coroot `β^∨` of a real root `β`.
    pub fn coroot_of(&self, beta: &[Q]) -> Option<Vector> {
        let (i, sign, word) = self.real_root_orbit(beta)?;
        let v = self.apply_word(&word, &self.coroots[i]);
        Some(if sign > 0 { v } else { v.into_iter().map(|x| -x).collect() })
    }

    /// The orthogonal reflection `v ↦ v − β(v) β^∨` for a real root.
    pub fn root_reflection_word(&self, beta: &[Q]) -> Option<Vec<usize>> {
        let (i, _, word) = self.real_root_orbit(beta)?;
        let mut w = word.clone();
        w.push(i);
        w.extend(word.iter().rev().copied());
        Some(cancel_pairs(w))
    }

    /// `u ∈ 𝔸_in`: every simple root vanishes on `u`.
    pub fn in_inessential(&self, u: &[Q]) -> bool {
        self.roots.iter().all(|a| dot(a, u).is_zero())
    }

    /// The affine null root. Requires an indecomposable affine matrix.
    pub fn null_root(&self) -> Result<NullRoot> {
        let blocks = classify_type(&self.gcm);
        match blocks.as_slice() {
            [Block { kind: BlockType::Affine { marks }, .. }] => {
                let as_form = (0..self.dim)
                    .map(|j| (0..self.rank()).fold(Q::zero(), |acc, i| acc + q(marks[i]) * &self.roots[i][j]))
                    .collect();
                Ok(NullRoot { marks: marks.clone(), as_form })
            }
            _ => Err(Error::NotAffine),
        }
    }

    /// Block types, as a convenience.
    pub fn kind(&self) -> SystemKind {
        let blocks = classify_type(&self.gcm);
        if blocks.iter().all(|b| b.kind == BlockType::Finite) {
            SystemKind::Finite
        } else if blocks.len() == 1 && matches!(blocks[0].kind, BlockType::Affine { .. }) {
            SystemKind::Affine
        } else {
            SystemKind::Other
        }
    }

    /// All distinct linear parts reachable by words of length `≤ max_len`,
    /// each with a shortest word.
    pub fn weyl_words(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<Vec<Vector>> = BTreeSet::new();
        let basis_image =
            |w: &[usize]| -> Vec<Vector> { (0..self.dim).map(|j| self.apply_word(w, &unit(self.dim, j))).collect() };
        let mut out = vec![Vec::new()];
        seen.insert(basis_image(&[]));
        let mut frontier = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..self.rank() {
                    let mut w2 = vec![i];
                    w2.extend(w.iter().copied());
                    if seen.insert(basis_image(&w2)) {
                        out.push(w2.clone());
                        next.push(w2);
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// `y − x` in the coroot basis, if it lies in the coroot span.
    pub fn difference_in_coroots(&self, x: &[Q], y: &[Q]) -> Option<Vector> {
        self.coroot_coords(&sub(y, x))
    }
}

/// Coarse classification of a whole system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    Finite,
    Affine,
    Other,
}
