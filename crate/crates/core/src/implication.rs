//! The forcing relation on ordered pairs, implication classes, the auxiliary
//! pair graph and invertible-pair certificates.
//!
//! `(u, v)` forces `(u', v')` when the pairs are equal, or when `uu'` and
//! `vv'` are edges while `uv'` and `vu'` are not (loops count as edges).
//! Implication classes are the connected components of this relation.
//! The auxiliary graph joins `(u, v)` to `(v', u')` whenever `(u, v)` forces
//! `(u', v')`; it is bipartite exactly when no pair `(u, v)` is forced, through
//! a chain, into `(v, u)`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{DiagonalMode, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct OrderedPair {
    pub u: usize,
    pub v: usize,
}

impl OrderedPair {
    pub fn new(u: usize, v: usize) -> Self {
        OrderedPair { u, v }
    }

    pub fn flipped(self) -> Self {
        OrderedPair { u: self.v, v: self.u }
    }

    pub(crate) fn index(self, n: usize) -> usize {
        self.u * n + self.v
    }

    pub(crate) fn from_index(i: usize, n: usize) -> Self {
        OrderedPair { u: i / n, v: i % n }
    }
}

impl From<(usize, usize)> for OrderedPair {
    fn from((u, v): (usize, usize)) -> Self {
        OrderedPair { u, v }
    }
}

impl From<OrderedPair> for (usize, usize) {
    fn from(p: OrderedPair) -> Self {
        (p.u, p.v)
    }
}

fn check_pair(g: &Graph, p: OrderedPair) -> Result<()> {
    g.check_vertex(p.u)?;
    g.check_vertex(p.v)?;
    if p.u == p.v {
        return Err(Error::Precondition(format!(
            "pair ({}, {}) is not of distinct vertices",
            p.u, p.v
        )));
    }
    Ok(())
}

pub fn forces(g: &Graph, p: OrderedPair, q: OrderedPair) -> Result<bool> {
    g.require_mode(DiagonalMode::Reflexive)?;
    check_pair(g, p)?;
    check_pair(g, q)?;
    Ok(forces_unchecked(g, p, q))
}

#[inline]
pub(crate) fn forces_unchecked(g: &Graph, p: OrderedPair, q: OrderedPair) -> bool {
    p == q || (g.has_edge(p.u, q.u) && g.has_edge(p.v, q.v) && !g.has_edge(p.u, q.v) && !g.has_edge(p.v, q.u))
}

/// Calls `f` for every `q != p` forced by `p`.
///
/// Such `q = (u', v')` has `u'` in `N[u] \ N[v]` and `v'` in `N[v] \ N[u]`.
pub(crate) fn for_each_forced(g: &Graph, p: OrderedPair, scratch: &mut ForceScratch, mut f: impl FnMut(OrderedPair)) {
    let (ru, rv) = (g.row(p.u), g.row(p.v));
    scratch.a.clear();
    scratch.b.clear();
    scratch.a.extend(ru.iter().zip(rv).map(|(x, y)| x & !y));
    scratch.b.extend(rv.iter().zip(ru).map(|(x, y)| x & !y));
    for u2 in bits::ones(&scratch.a) {
        for v2 in bits::ones(&scratch.b) {
            let q = OrderedPair::new(u2, v2);
            if q != p {
                f(q);
            }
        }
    }
}

#[derive(Default)]
pub(crate) struct ForceScratch {
    a: Vec<u64>,
    b: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationClass {
    /// Sorted; the first entry is the representative.
    pub pairs: Vec<OrderedPair>,
}

impl ImplicationClass {
    pub fn representative(&self) -> OrderedPair {
        self.pairs[0]
    }

    pub fn is_trivial(&self) -> bool {
        self.pairs.len() == 1
    }

    pub fn contains(&self, p: OrderedPair) -> bool {
        self.pairs.binary_search(&p).is_ok()
    }

    pub fn inverse(&self) -> ImplicationClass {
        let mut pairs: Vec<_> = self.pairs.iter().map(|p| p.flipped()).collect();
        pairs.sort_unstable();
        ImplicationClass { pairs }
    }
}

/// Partition of all ordered pairs of distinct vertices into implication classes.
#[derive(Debug, Clone)]
pub struct ImplicationClasses {
    n: usize,
    class_of: Vec<usize>,
    classes: Vec<ImplicationClass>,
}

impl ImplicationClasses {
    /// Classes ordered by representative.
    pub fn classes(&self) -> &[ImplicationClass] {
        &self.classes
    }

    pub fn class_of(&self, p: OrderedPair) -> usize {
        self.class_of[p.index(self.n)]
    }

    /// Index of the class `{(v, u) : (u, v) in classes[i]}`.
    pub fn inverse_of(&self, i: usize) -> usize {
        self.class_of(self.classes[i].representative().flipped())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as root so roots are class minima.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

pub fn implication_classes(g: &Graph) -> Result<ImplicationClasses> {
    g.require_mode(DiagonalMode::Reflexive)?;
    let n = g.n();
    let mut uf = UnionFind::new(n * n);
    let mut scratch = ForceScratch::default();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let p = OrderedPair::new(u, v);
            let pi = p.index(n);
            for_each_forced(g, p, &mut scratch, |q| uf.union(pi, q.index(n)));
        }
    }
    let mut class_of = vec![usize::MAX; n * n];
    let mut root_class = vec![usize::MAX; n * n];
    let mut classes: Vec<ImplicationClass> = Vec::new();
    // Pair indices grow lexicographically, so classes appear in representative order.
    for (i, slot) in class_of.iter_mut().enumerate() {
        let p = OrderedPair::from_index(i, n);
        if p.u == p.v {
            continue;
        }
        let r = uf.find(i);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(ImplicationClass { pairs: Vec::new() });
        }
        *slot = root_class[r];
        classes[root_class[r]].pairs.push(p);
    }
    Ok(ImplicationClasses { n, class_of, classes })
}

/// The auxiliary graph on ordered pairs, evaluated on demand.
#[derive(Debug, Clone, Copy)]
pub struct PairGraph<'a> {
    g: &'a Graph,
}

pub fn build_pair_graph(g: &Graph) -> Result<PairGraph<'_>> {
    g.require_mode(DiagonalMode::Reflexive)?;
    Ok(PairGraph { g })
}

impl<'a> PairGraph<'a> {
    pub fn graph(&self) -> &'a Graph {
        self.g
    }

    /// All ordered pairs of distinct vertices, lexicographically.
    pub fn vertices(&self) -> impl Iterator<Item = OrderedPair> + '_ {
        let n = self.g.n();
        (0..n).flat_map(move |u| (0..n).filter(move |&v| v != u).map(move |v| OrderedPair::new(u, v)))
    }

    pub fn is_edge(&self, p: OrderedPair, q: OrderedPair) -> bool {
        p.u != p.v && q.u != q.v && forces_unchecked(self.g, p, q.flipped())
    }

    /// Neighbours of `p`, the matching partner `(v, u)` first.
    pub fn neighbors(&self, p: OrderedPair) -> Vec<OrderedPair> {
        let mut out = vec![p.flipped()];
        for_each_forced(self.g, p, &mut ForceScratch::default(), |q| out.push(q.flipped()));
        out
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|p| self.neighbors(p).len()).sum::<usize>() / 2
    }
}

/// A forcing chain from `(u, v)` to `(v, u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvertiblePairCertificate {
    pub pair: OrderedPair,
    pub walk: Vec<OrderedPair>,
}

/// Two-colours the auxiliary graph by breadth-first search in lexicographic
/// pair order. On the first odd cycle `c1 c2 ... c(2k+1)` the chain
/// `c1, flip(c2), c3, flip(c4), ..., c(2k+1), flip(c1)` is returned.
pub fn find_invertible_pair(g: &Graph) -> Result<Option<InvertiblePairCertificate>> {
    g.require_mode(DiagonalMode::Reflexive)?;
    let n = g.n();
    const NONE: u32 = u32::MAX;
    let mut color = vec![u8::MAX; n * n];
    let mut parent = vec![NONE; n * n];
    let mut depth = vec![0u32; n * n];
    let mut queue = VecDeque::new();
    let mut scratch = ForceScratch::default();
    let mut nbrs: Vec<usize> = Vec::new();
    for s in 0..n * n {
        let sp = OrderedPair::from_index(s, n);
        if sp.u == sp.v || color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            let xp = OrderedPair::from_index(x, n);
            nbrs.clear();
            nbrs.push(xp.flipped().index(n));
            for_each_forced(g, xp, &mut scratch, |q| nbrs.push(q.flipped().index(n)));
            for &w in &nbrs {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[x];
                    parent[w] = x as u32;
                    depth[w] = depth[x] + 1;
                    queue.push_back(w);
                } else if color[w] == color[x] {
                    let cycle = odd_cycle(x, w, &parent, &depth);
                    return Ok(Some(certificate_from_cycle(&cycle, n)));
                }
            }
        }
    }
    Ok(None)
}

/// Tree paths from `x` and `w` up to their lowest common ancestor, joined
/// by the edge `w - x`.
fn odd_cycle(x: usize, w: usize, parent: &[u32], depth: &[u32]) -> Vec<usize> {
    let (mut a, mut b) = (x, w);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a] as usize;
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b] as usize;
        up_b.push(b);
    }
    while a != b {
        a = parent[a] as usize;
        b = parent[b] as usize;
        up_a.push(a);
        up_b.push(b);
    }
    up_b.pop();
    up_b.reverse();
    up_a.extend(up_b);
    debug_assert_eq!(up_a.len() % 2, 1);
    up_a
}

fn certificate_from_cycle(cycle: &[usize], n: usize) -> InvertiblePairCertificate {
    let mut walk: Vec<OrderedPair> = Vec::with_capacity(cycle.len() + 1);
    for (i, &c) in cycle.iter().enumerate() {
        let p = OrderedPair::from_index(c, n);
        let step = if i % 2 == 0 { p } else { p.flipped() };
        if walk.last() != Some(&step) {
            walk.push(step);
        }
    }
    let first = OrderedPair::from_index(cycle[0], n);
    if walk.last() != Some(&first.flipped()) {
        walk.push(first.flipped());
    }
    InvertiblePairCertificate { pair: first, walk }
}

/// Whether `c` is a forcing chain in `g` from `c.pair` to its reverse.
pub fn verify_certificate(g: &Graph, c: &InvertiblePairCertificate) -> bool {
    if !g.is_reflexive() || c.walk.is_empty() {
        return false;
    }
    if c.walk
        .iter()
        .chain([&c.pair])
        .any(|p| p.u >= g.n() || p.v >= g.n() || p.u == p.v)
    {
        return false;
    }
    if c.walk[0] != c.pair || *c.walk.last().unwrap() != c.pair.flipped() {
        return false;
    }
    c.walk.windows(2).all(|w| forces_unchecked(g, w[0], w[1]))
}
