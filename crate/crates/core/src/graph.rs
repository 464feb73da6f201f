//! Symmetric 0,1-matrices with a uniform diagonal, viewed as graphs.
//!
//! A [`Graph`] is either reflexive (every vertex carries a loop, the matrix
//! has a 1-diagonal) or irreflexive (0-diagonal). Mixed diagonals cannot be
//! constructed. Vertices are the indices `0..n`, and every ordering or
//! witness produced by this crate refers to those indices.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagonalMode {
    Reflexive,
    Irreflexive,
}

impl DiagonalMode {
    pub fn toggled(self) -> Self {
        match self {
            DiagonalMode::Reflexive => DiagonalMode::Irreflexive,
            DiagonalMode::Irreflexive => DiagonalMode::Reflexive,
        }
    }

    pub fn diagonal_bit(self) -> bool {
        self == DiagonalMode::Reflexive
    }
}

impl fmt::Display for DiagonalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagonalMode::Reflexive => "reflexive",
            DiagonalMode::Irreflexive => "irreflexive",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    mode: DiagonalMode,
}

impl Graph {
    /// The graph on `n` vertices with no edges besides the loops implied by `mode`.
    pub fn empty(n: usize, mode: DiagonalMode) -> Self {
        let words = bits::words_for(n);
        let mut g = Graph {
            n,
            words,
            rows: vec![0; n * words],
            mode,
        };
        if mode == DiagonalMode::Reflexive {
            for v in 0..n {
                bits::set(g.row_mut(v), v);
            }
        }
        g
    }

    pub fn from_edges<I>(n: usize, mode: DiagonalMode, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n, mode);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u != v {
                g.set_edge(u, v, true);
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> DiagonalMode {
        self.mode
    }

    pub fn is_reflexive(&self) -> bool {
        self.mode == DiagonalMode::Reflexive
    }

    pub fn require_mode(&self, mode: DiagonalMode) -> Result<()> {
        if self.mode == mode {
            Ok(())
        } else {
            Err(Error::ModeMismatch {
                expected: mode,
                found: self.mode,
            })
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Raw matrix entry, diagonal included.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    /// Matrix row `u` as packed words; bit `v` is `adj[u][v]`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, u: usize) -> &mut [u64] {
        &mut self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        debug_assert_ne!(u, v);
        if on {
            bits::set(self.row_mut(u), v);
            bits::set(self.row_mut(v), u);
        } else {
            bits::clear(self.row_mut(u), v);
            bits::clear(self.row_mut(v), u);
        }
    }

    /// Neighbours of `u` other than `u` itself, in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(u)).filter(move |&w| w != u)
    }

    /// Degree ignoring the loop.
    pub fn degree(&self, u: usize) -> usize {
        bits::count(self.row(u)) - usize::from(self.is_reflexive())
    }

    /// Non-loop edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits::ones(self.row(u)) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Flips every entry, loops included, so the diagonal mode toggles.
    pub fn complement(&self) -> Graph {
        let mut out = self.clone();
        out.mode = self.mode.toggled();
        let tail = self.n & 63;
        for u in 0..self.n {
            let row = out.row_mut(u);
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                let last = row.len() - 1;
                row[last] &= (1u64 << tail) - 1;
            }
        }
        out
    }

    /// Same non-loop edges with the diagonal forced to `mode`.
    pub fn with_mode(&self, mode: DiagonalMode) -> Graph {
        let mut out = self.clone();
        out.mode = mode;
        for v in 0..self.n {
            if mode.diagonal_bit() {
                bits::set(out.row_mut(v), v);
            } else {
                bits::clear(out.row_mut(v), v);
            }
        }
        out
    }

    /// Subgraph induced by `vertices`, relabelled by increasing original index.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut sel: Vec<usize> = vertices.to_vec();
        sel.sort_unstable();
        sel.dedup();
        for &v in &sel {
            self.check_vertex(v)?;
        }
        let mut out = Graph::empty(sel.len(), self.mode);
        for (i, &u) in sel.iter().enumerate() {
            for (j, &v) in sel.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    out.set_edge(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// `self` with vertex `v` removed; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep).expect("indices in range")
    }

    /// The graph whose vertex `i` is `ord[i]` of `self`.
    pub fn permuted(&self, ord: &VertexOrdering) -> Graph {
        let p = ord.as_slice();
        let mut out = Graph::empty(self.n, self.mode);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(p[i], p[j]) {
                    out.set_edge(i, j, true);
                }
            }
        }
        out
    }

    /// Connected components (loops ignored), each sorted, listed by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Two-colouring of the loopless graph, or `None` if it has an odd cycle.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<u8>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(1 - su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            side: side.into_iter().map(|s| s.unwrap()).collect(),
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, n={}, edges={:?})", self.mode, self.n, self.edges())
    }
}

/// A permutation of the vertex indices; position `i` holds vertex `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(perm: Vec<usize>, n: usize) -> Result<Self> {
        if perm.len() != n {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("length {} differs from {}", perm.len(), n),
            });
        }
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("entry {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("entry {v} repeated"),
                });
            }
        }
        Ok(VertexOrdering(perm))
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse permutation: `positions()[v]` is the position of vertex `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn reversed(&self) -> Self {
        VertexOrdering(self.0.iter().rev().copied().collect())
    }
}

/// Side assignment of a two-colouring; every non-loop edge joins sides 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

impl Bipartition {
    pub fn part(&self, s: u8) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.n() && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn complement_of_reflexive_triangle_is_irreflexive_empty() {
        let k3 = families::complete(3);
        let c = k3.complement();
        assert_eq!(c.mode(), DiagonalMode::Irreflexive);
        assert_eq!(c, Graph::empty(3, DiagonalMode::Irreflexive));
    }

    #[test]
    fn complement_is_involution_across_word_boundary() {
        let g = Graph::from_edges(70, DiagonalMode::Reflexive, (0..69).map(|i| (i, i + 1))).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().edge_count(), 70 * 69 / 2 - 69);
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c5 = families::cycle(5);
        let comp = c5.complement();
        // 0-1-2-3-4-0 complements to the pentagram 0-2-4-1-3-0.
        for v in 0..5 {
            assert!(!comp.has_edge(v, v));
            assert_eq!(comp.degree(v), 2);
            assert!(comp.has_edge(v, (v + 2) % 5));
            assert!(!comp.has_edge(v, (v + 1) % 5));
        }
        let relabel = VertexOrdering::new(vec![0, 2, 4, 1, 3], 5).unwrap();
        assert_eq!(comp.permuted(&relabel).with_mode(DiagonalMode::Reflexive), c5);
    }

    #[test]
    fn induced_subgraphs() {
        let p4 = families::path(4);
        assert_eq!(p4.induced_subgraph(&[0, 1, 2]).unwrap(), families::path(3));
        assert_eq!(p4.induced_subgraph(&[0, 1, 2, 3]).unwrap(), p4);
        let c5 = families::cycle(5);
        for skip in 0..5 {
            let keep: Vec<usize> = (0..5).filter(|&v| v != skip).collect();
            let h = c5.induced_subgraph(&keep).unwrap();
            assert_eq!(h.edge_count(), 3);
            let mut degs: Vec<usize> = (0..4).map(|v| h.degree(v)).collect();
            degs.sort();
            assert_eq!(degs, vec![1, 1, 2, 2]);
            assert!(h.is_connected());
        }
        assert!(matches!(
            p4.induced_subgraph(&[0, 9]),
            Err(Error::VertexOutOfRange { vertex: 9, n: 4 })
        ));
    }

    #[test]
    fn bipartiteness() {
        let c4 = families::cycle(4);
        let b = c4.is_bipartite().unwrap();
        assert_eq!(b.part(0), vec![0, 2]);
        assert_eq!(b.part(1), vec![1, 3]);
        assert!(families::complete(3).is_bipartite().is_none());
        let t = families::t_graph();
        assert!(t.is_bipartite().unwrap().is_valid_for(&t));
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![0, 2, 1], 3).is_ok());
        assert!(VertexOrdering::new(vec![0, 0, 1], 3).is_err());
        assert!(VertexOrdering::new(vec![0, 3, 1], 3).is_err());
        assert!(VertexOrdering::new(vec![0, 1], 3).is_err());
        let o = VertexOrdering::new(vec![2, 0, 1], 3).unwrap();
        assert_eq!(o.positions(), vec![1, 2, 0]);
    }
}
