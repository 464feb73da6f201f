//! Canonical codes for small graphs and isomorphism-free enumeration.
//!
//! The code of a graph is the lexicographically greatest upper-triangle bit
//! string (graph6 column order) over all relabelings that list vertices by
//! increasing colour class, where colours come from iterated neighbourhood
//! refinement. Branch-and-bound on column prefixes plus twin pruning keeps
//! the search small at enumeration scale.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{DiagonalMode, Graph, VertexOrdering};

pub const MAX_CANON_N: usize = 10;
pub const MAX_ENUM_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_labeling(g).map(|(code, _)| code)
}

/// Canonical code together with a relabeling attaining it.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, VertexOrdering)> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_CANON_N,
            what: "canonical_code",
        });
    }
    let adj: Vec<u16> = (0..n).map(|u| g.neighbors(u).fold(0u16, |m, v| m | 1 << v)).collect();
    let colors = refine_colors(&adj);
    let mut pos_color = colors.clone();
    pos_color.sort_unstable();

    let mut search = Search {
        n,
        adj: &adj,
        colors: &colors,
        pos_color: &pos_color,
        placed: [0; MAX_CANON_N],
        best: [0; MAX_CANON_N],
        best_perm: [0; MAX_CANON_N],
    };
    search.dfs(0, 0, true);

    let mut code = Vec::with_capacity(2 + (n * n) / 16 + 1);
    code.push(match g.mode() {
        DiagonalMode::Reflexive => 1,
        DiagonalMode::Irreflexive => 0,
    });
    code.push(n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for k in 1..n {
        for i in 0..k {
            acc = (acc << 1) | ((search.best[k] >> (k - 1 - i)) & 1) as u8;
            filled += 1;
            if filled == 8 {
                code.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        code.push(acc << (8 - filled));
    }
    let perm = search.best_perm[..n].iter().map(|&v| v as usize).collect();
    Ok((CanonicalCode(code), VertexOrdering::new(perm, n)?))
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical_labeling(g)?;
    Ok(g.permuted(&perm))
}

fn refine_colors(adj: &[u16]) -> Vec<u32> {
    let n = adj.len();
    let mut colors: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut classes = distinct(&colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nc.sort_unstable();
                (colors[v], nc)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs.iter().map(|s| sorted.binary_search(s).unwrap() as u32).collect();
        let c = distinct(&next);
        colors = next;
        if c == classes {
            return colors;
        }
        classes = c;
    }
}

fn distinct(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    n: usize,
    adj: &'a [u16],
    colors: &'a [u32],
    pos_color: &'a [u32],
    placed: [u8; MAX_CANON_N],
    best: [u16; MAX_CANON_N],
    best_perm: [u8; MAX_CANON_N],
}

impl Search<'_> {
    /// `ahead`: the current prefix already beats the recorded best (or no best exists yet),
    /// so every column from here on overwrites it.
    fn dfs(&mut self, depth: usize, used: u16, mut ahead: bool) {
        if depth == self.n {
            if ahead {
                self.best_perm = self.placed;
            }
            return;
        }
        let mut tried: u16 = 0;
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.colors[v] != self.pos_color[depth] {
                continue;
            }
            if self.has_tried_twin(v, tried) {
                continue;
            }
            tried |= 1 << v;
            let mut col: u16 = 0;
            for i in 0..depth {
                col = (col << 1) | (self.adj[self.placed[i] as usize] >> v & 1);
            }
            let child_ahead = if ahead {
                true
            } else if col < self.best[depth] {
                continue;
            } else {
                col > self.best[depth]
            };
            if child_ahead {
                self.best[depth] = col;
            }
            self.placed[depth] = v as u8;
            self.dfs(depth + 1, used | 1 << v, child_ahead);
            // The recorded best now shares this prefix.
            ahead = false;
        }
    }

    fn has_tried_twin(&self, v: usize, tried: u16) -> bool {
        let mut t = tried;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if self.adj[v] & !(1 << w) == self.adj[w] & !(1 << v) {
                return true;
            }
        }
        false
    }
}

/// One representative per isomorphism class of reflexive graphs on `n`
/// vertices, each in canonical form, sorted by canonical code.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUM_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUM_N,
            what: "built-in enumeration (supply a graph6 corpus instead)",
        });
    }
    let mut level = vec![Graph::empty(0, DiagonalMode::Reflexive)];
    for _ in 0..n {
        level = extend_by_one_vertex(&level)?;
    }
    Ok(level)
}

/// All isomorphism classes of graphs on `k + 1` vertices, given one
/// representative of every class on `k` vertices: every `(k+1)`-vertex graph
/// minus its last vertex is isomorphic to some input graph.
pub fn extend_by_one_vertex(reps: &[Graph]) -> Result<Vec<Graph>> {
    let mut found: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    for g in reps {
        let k = g.n();
        let base = g.edges();
        for mask in 0u32..(1 << k) {
            let mut edges = base.clone();
            edges.extend((0..k).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k)));
            let h = Graph::from_edges(k + 1, g.mode(), edges)?;
            let (code, perm) = canonical_labeling(&h)?;
            found.entry(code).or_insert_with(|| h.permuted(&perm));
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn relabelings_of_p4_agree() {
        let p4 = families::path(4);
        let q = p4.permuted(&VertexOrdering::new(vec![2, 0, 3, 1], 4).unwrap());
        assert_ne!(p4, q);
        assert_eq!(canonical_code(&p4).unwrap(), canonical_code(&q).unwrap());
        assert_ne!(
            canonical_code(&p4).unwrap(),
            canonical_code(&families::star(3)).unwrap()
        );
    }

    #[test]
    fn mode_is_part_of_the_code() {
        let g = families::path(3);
        assert_ne!(
            canonical_code(&g).unwrap(),
            canonical_code(&g.with_mode(DiagonalMode::Irreflexive)).unwrap()
        );
    }

    #[test]
    fn canonical_form_has_the_same_code() {
        let g = families::sun(3);
        let f = canonical_form(&g).unwrap();
        assert_eq!(canonical_code(&f).unwrap(), canonical_code(&g).unwrap());
        assert_eq!(f.edge_count(), g.edge_count());
    }

    #[test]
    fn bounds() {
        assert!(canonical_code(&families::path(11)).is_err());
        assert!(enumerate_nonisomorphic(8).is_err());
        assert_eq!(enumerate_nonisomorphic(1).unwrap().len(), 1);
        assert_eq!(enumerate_nonisomorphic(0).unwrap().len(), 1);
    }
}
