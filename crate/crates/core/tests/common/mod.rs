//! Test-local oracles. Nothing here calls into the library's own pattern,
//! forcing or search code, so agreement with it is evidence rather than echo.
#![allow(dead_code)]

use scoco::{DiagonalMode, Graph};

/// Dense adjacency with the diagonal given by the graph's mode.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Slash,
    Gamma,
    I2,
}

impl Shape {
    fn cells(self) -> [[bool; 2]; 2] {
        match self {
            Shape::Slash => [[false, true], [true, false]],
            Shape::Gamma => [[true, true], [true, false]],
            Shape::I2 => [[true, false], [false, true]],
        }
    }

    /// The entry value that must land on the diagonal in the principal variant.
    fn designated(self) -> bool {
        !matches!(self, Shape::I2)
    }
}

/// Whether the matrix permuted by `perm` contains the shape, optionally with
/// a designated entry on the main diagonal. Checks all O(n^4) selections.
pub fn contains_shape(m: &[Vec<bool>], perm: &[usize], shape: Shape, principal: bool) -> bool {
    let n = perm.len();
    let at = |i: usize, j: usize| m[perm[i]][perm[j]];
    let c = shape.cells();
    for i1 in 0..n {
        for i2 in i1 + 1..n {
            for j1 in 0..n {
                for j2 in j1 + 1..n {
                    let rows = [i1, i2];
                    let cols = [j1, j2];
                    let fits = (0..2).all(|r| (0..2).all(|s| at(rows[r], cols[s]) == c[r][s]));
                    if !fits {
                        continue;
                    }
                    let on_diag = (0..2).any(|r| (0..2).any(|s| rows[r] == cols[s] && c[r][s] == shape.designated()));
                    if !principal || on_diag {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Calls `f` on every permutation of `0..n` in lexicographic order until it returns true.
pub fn any_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if f(&p) {
            return true;
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Whether some symmetric ordering avoids every listed shape.
pub fn ordering_exists(g: &Graph, shapes: &[(Shape, bool)]) -> bool {
    let m = matrix(g);
    any_permutation(g.n(), |p| shapes.iter().all(|&(s, pr)| !contains_shape(&m, p, s, pr)))
}

/// The forcing relation written out from its definition.
pub fn lambda(g: &Graph, p: (usize, usize), q: (usize, usize)) -> bool {
    p == q || (g.has_edge(p.0, q.0) && g.has_edge(p.1, q.1) && !g.has_edge(p.0, q.1) && !g.has_edge(p.1, q.0))
}

/// Checks that `walk` starts at `pair`, ends at its reverse, and each step is forced.
pub fn walk_is_certificate(g: &Graph, pair: (usize, usize), walk: &[(usize, usize)]) -> bool {
    pair.0 != pair.1
        && walk.first() == Some(&pair)
        && walk.last() == Some(&(pair.1, pair.0))
        && walk.windows(2).all(|w| lambda(g, w[0], w[1]))
}

/// Smallest edge bitmask over all relabelings: a slow but obviously correct isomorphism invariant.
pub fn min_mask(g: &Graph) -> u64 {
    let n = g.n();
    let mut best = u64::MAX;
    any_permutation(n, |p| {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(p[u], p[v]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(mask);
        false
    });
    best
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, DiagonalMode::Reflexive, edges).unwrap()
}

/// Runs the command line in-process; returns (exit code, stdout, stderr).
pub fn cli(args: &[&str], stdin: &[u8]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("scoco").chain(args.iter().copied());
    let code = scoco::cli::run(argv, &mut &stdin[..], &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
