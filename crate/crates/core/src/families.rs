//! Small named reflexive graphs used throughout the tests and examples.

use crate::graph::{DiagonalMode, Graph};

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, DiagonalMode::Reflexive, edges.iter().copied()).expect("static edge list")
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n, DiagonalMode::Irreflexive).complement()
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    build(k + 1, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    build(a + b, &edges)
}

/// A 4-cycle `1-2-3-4` with pendant `0` at `1` and pendant `5` at `4`.
pub fn s_graph() -> Graph {
    build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)])
}

/// The claw with every edge subdivided once: centre `4`, arms `4-5-0`, `4-1-2`, `4-3-6`.
pub fn t_graph() -> Graph {
    build(7, &[(5, 4), (4, 1), (1, 2), (0, 5), (4, 3), (3, 6)])
}

/// Trampoline (complete sun) on `2k` vertices: clique `0..k`, and `k+i`
/// adjacent exactly to `i` and `(i+1) mod k`.
pub fn sun(k: usize) -> Graph {
    assert!(k >= 3);
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            edges.push((i, j));
        }
        edges.push((k + i, i));
        edges.push((k + i, (i + 1) % k));
    }
    build(2 * k, &edges)
}
