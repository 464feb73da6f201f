use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::Result;
use crate::graph::{DiagonalMode, Graph, VertexOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordalVerdict {
    /// Perfect elimination ordering: the later neighbours of each vertex form a clique.
    Chordal { elimination: VertexOrdering },
    /// An induced cycle of length at least four.
    NotChordal { cycle: Vec<usize> },
}

impl ChordalVerdict {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalVerdict::Chordal { .. })
    }
}

/// Maximum cardinality search; the reverse visiting order is checked as a
/// perfect elimination ordering.
pub fn is_chordal(g: &Graph) -> Result<ChordalVerdict> {
    g.require_mode(DiagonalMode::Reflexive)?;
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        visit.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    let elimination = VertexOrdering::new(visit, n)?;
    if is_perfect_elimination(g, &elimination) {
        Ok(ChordalVerdict::Chordal { elimination })
    } else {
        let cycle = chordless_cycle(g).expect("a failed elimination check implies a chordless cycle");
        Ok(ChordalVerdict::NotChordal { cycle })
    }
}

pub fn is_perfect_elimination(g: &Graph, ord: &VertexOrdering) -> bool {
    let pos = ord.positions();
    let words = g.words_per_row();
    for &v in ord.as_slice() {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        let Some(&first) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        let mut need = vec![0u64; words];
        for &w in &later {
            bits::set(&mut need, w);
        }
        if need.iter().zip(g.row(first)).any(|(a, b)| a & !b != 0) {
            return false;
        }
    }
    true
}

/// Some induced cycle of length at least four: for a vertex `v` and two
/// non-adjacent neighbours `x`, `y`, a shortest `x`-`y` path avoiding the
/// rest of `N[v]` closes a chordless cycle through `v`.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let blocked = |w: usize| w == v || (g.has_edge(v, w) && w != x && w != y);
                if let Some(path) = shortest_path(g, x, y, blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub(crate) fn shortest_path(g: &Graph, from: usize, to: usize, blocked: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut c = to;
            while c != from {
                c = prev[c];
                path.push(c);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(x) {
            if prev[w] == usize::MAX && !blocked(w) {
                prev[w] = x;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Simple-vertex elimination: a vertex is simple when the closed
/// neighbourhoods of its closed neighbours form an inclusion chain. Returns
/// the elimination order if every remaining graph has a simple vertex.
pub fn simple_elimination_ordering(g: &Graph) -> Result<Option<VertexOrdering>> {
    g.require_mode(DiagonalMode::Reflexive)?;
    let n = g.n();
    let words = g.words_per_row();
    let mut alive = vec![0u64; words];
    for v in 0..n {
        bits::set(&mut alive, v);
    }
    let closed = |v: usize, alive: &[u64]| -> Vec<u64> { g.row(v).iter().zip(alive).map(|(a, b)| a & b).collect() };
    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let simple = bits::ones(&alive).find(|&v| {
            let mut nbhds: Vec<Vec<u64>> = bits::ones(&closed(v, &alive)).map(|u| closed(u, &alive)).collect();
            nbhds.sort_by_key(|s| bits::count(s));
            nbhds.windows(2).all(|w| subset(&w[0], &w[1]))
        });
        match simple {
            Some(v) => {
                bits::clear(&mut alive, v);
                order.push(v);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(VertexOrdering::new(order, n)?))
}

pub fn is_strongly_chordal(g: &Graph) -> Result<bool> {
    Ok(simple_elimination_ordering(g)?.is_some())
}
