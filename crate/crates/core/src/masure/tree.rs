// SPDX-License-Identifier: Apache-2.0

//! Models whose wall structure along one root is a metric tree.
//!
//! Every chart is a line of the tree through two ends, with coordinate
//! `s = β(x)` for a fixed simple root `β`. Lines sharing an end are glued
//! along the common ray, by a translation when the end sits on the same side
//! in both charts and by `r_β` followed by a translation otherwise.

use std::collections::VecDeque;

use num_traits::One;

use super::{Gluing, ModelSpec};
use crate::apartment::{Apartment, HalfSpace};
use crate::error::{Error, Result};
use crate::rational::{neg, q, scale, Q};
use crate::root_system::WeylElement;

/// Branch a new end off line `host` at coordinate `level`, keeping the part
/// `s ≥ level` of the host (`keep_above`) or `s ≤ level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Branch {
    pub host: usize,
    pub keep_above: bool,
    pub level: i64,
}

#[derive(Clone, Copy, Debug)]
struct Line {
    left: usize,
    right: usize,
    anchor: (usize, i64),
}

#[derive(Default)]
struct Tree {
    adj: Vec<Vec<(usize, i64)>>,
    attach: Vec<usize>,
    level: Vec<i64>,
}

impl Tree {
    fn add_node(&mut self, level: i64) -> usize {
        self.adj.push(Vec::new());
        self.level.push(level);
        self.adj.len() - 1
    }

    fn link(&mut self, a: usize, b: usize, len: i64) {
        self.adj[a].push((b, len));
        self.adj[b].push((a, len));
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a].retain(|&(x, _)| x != b);
        self.adj[b].retain(|&(x, _)| x != a);
    }

    fn path(&self, from: usize, to: usize) -> Vec<(usize, i64)> {
        let mut prev = vec![None; self.adj.len()];
        prev[from] = Some((from, 0));
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &(y, len) in &self.adj[x] {
                if prev[y].is_none() {
                    prev[y] = Some((x, len));
                    queue.push_back(y);
                }
            }
        }
        // Each node with the length of the edge to the next one.
        let mut nodes = vec![to];
        let mut lens = Vec::new();
        let mut x = to;
        while x != from {
            let (p, len) = prev[x].expect("tree is connected");
            nodes.push(p);
            lens.push(len);
            x = p;
        }
        nodes.reverse();
        lens.reverse();
        nodes.into_iter().zip(lens.into_iter().chain([0])).collect()
    }

    /// Nodes of the line `left → right` with their coordinates.
    fn coords(&self, line: &Line) -> Vec<(usize, i64)> {
        let path = self.path(self.attach[line.left], self.attach[line.right]);
        let mut acc = 0;
        let mut raw = Vec::with_capacity(path.len());
        for &(n, len) in &path {
            raw.push((n, acc));
            acc += len;
        }
        let (anchor, s) = line.anchor;
        let offset = s - raw.iter().find(|(n, _)| *n == anchor).expect("anchor lies on its line").1;
        raw.into_iter().map(|(n, c)| (n, c + offset)).collect()
    }

    /// The node at coordinate `k` of `line`, created if needed.
    fn node_at(&mut self, line: &Line, k: i64) -> usize {
        let coords = self.coords(line);
        if let Some(&(n, _)) = coords.iter().find(|(_, c)| *c == k) {
            return n;
        }
        let m = self.add_node(k);
        let (first, c_first) = coords[0];
        let (last, c_last) = *coords.last().unwrap();
        if k < c_first {
            self.link(m, first, c_first - k);
            self.attach[line.left] = m;
        } else if k > c_last {
            self.link(last, m, k - c_last);
            self.attach[line.right] = m;
        } else {
            let w = coords.windows(2).find(|w| w[0].1 < k && k < w[1].1).expect("k lies inside the line");
            let ((a, ca), (b, cb)) = (w[0], w[1]);
            self.unlink(a, b);
            self.link(a, m, k - ca);
            self.link(m, b, cb - k);
        }
        m
    }
}

/// Gluing data of the tree model generated by `branches`, starting from the
/// standard apartment as line 0. Charts are the lines in order of creation,
/// then every remaining pair of ends.
pub fn tree_model(apartment: Apartment, root: usize, branches: &[Branch]) -> Result<ModelSpec> {
    let s = &apartment.system;
    if root >= s.rank() {
        return Err(Error::IndexOutOfRange(root));
    }
    let mut tree = Tree::default();
    let origin = tree.add_node(0);
    tree.attach = vec![origin, origin];
    let mut lines = vec![Line { left: 0, right: 1, anchor: (origin, 0) }];
    for b in branches {
        let host = *lines.get(b.host).ok_or(Error::IndexOutOfRange(b.host))?;
        let m = tree.node_at(&host, b.level);
        let end = tree.attach.len();
        tree.attach.push(m);
        let line = if b.keep_above {
            Line { left: end, right: host.right, anchor: (m, b.level) }
        } else {
            Line { left: host.left, right: end, anchor: (m, b.level) }
        };
        lines.push(line);
    }
    let ends = tree.attach.len();
    let mut charts = lines.clone();
    for e in 0..ends {
        for f in e + 1..ends {
            if !charts.iter().any(|l| (l.left, l.right) == (e, f) || (l.left, l.right) == (f, e)) {
                let a = tree.attach[e];
                charts.push(Line { left: e, right: f, anchor: (a, tree.level[a]) });
            }
        }
    }

    let beta = s.root(root).clone();
    let coroot = s.coroot(root).clone();
    let n = s.dim();
    let coords: Vec<Vec<(usize, i64)>> = charts.iter().map(|l| tree.coords(l)).collect();
    let mut gluings = Vec::new();
    for c in 0..charts.len() {
        for d in c + 1..charts.len() {
            for end in [charts[c].left, charts[c].right] {
                let Some(side_d) = side(&charts[d], end) else { continue };
                let side_c = side(&charts[c], end).unwrap();
                let from_end = |i: usize, left: bool| -> Vec<(usize, i64)> {
                    let mut v = coords[i].clone();
                    if !left {
                        v.reverse();
                    }
                    v
                };
                let seq_c = from_end(c, side_c);
                let seq_d = from_end(d, side_d);
                let shared = seq_c.iter().zip(&seq_d).take_while(|(x, y)| x.0 == y.0).last().expect("common end node");
                let (s_c, s_d) = (shared.0 .1, shared.1 .1);
                let halfspace =
                    if side_c { HalfSpace::new(neg(&beta), q(s_c)) } else { HalfSpace::new(beta.clone(), q(-s_c)) };
                let flip = side_c != side_d;
                let t = if flip { s_d + s_c } else { s_d - s_c };
                if t % 2 != 0 {
                    return Err(Error::InconsistentGluing(format!("charts {c} and {d}: odd shift {t}")));
                }
                let translation = scale(&Q::new((t / 2).into(), One::one()), &coroot);
                let tau = WeylElement { word: if flip { vec![root] } else { Vec::new() }, translation };
                debug_assert_eq!(tau.translation.len(), n);
                gluings.push(Gluing { a: c, b: d, halfspace, tau });
            }
        }
    }
    Ok(ModelSpec { apartment, charts: charts.len(), gluings })
}

/// `Some(true)` if `end` is the left end of `line`, `Some(false)` if the right.
fn side(line: &Line, end: usize) -> Option<bool> {
    if line.left == end {
        Some(true)
    } else if line.right == end {
        Some(false)
    } else {
        None
    }
}
