use crate::error::Result;
use crate::graph::{DiagonalMode, Graph};

/// Transitive orientability of the loopless graph.
///
/// Oriented edges `(a, b)` and `(a, b')` must agree whenever `bb'` is not an
/// edge (and likewise `(b, a)`, `(b', a)`); the graph is a comparability
/// graph exactly when no resulting class contains an arc and its reverse.
pub fn is_comparability(g: &Graph) -> Result<bool> {
    let g = if g.is_reflexive() {
        g.with_mode(DiagonalMode::Irreflexive)
    } else {
        g.clone()
    };
    let n = g.n();
    let mut parent: Vec<usize> = (0..n * n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra.max(rb)] = ra.min(rb);
        }
    };
    for a in 0..n {
        let nb: Vec<usize> = g.neighbors(a).collect();
        for (i, &b) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if !g.has_edge(b, c) {
                    union(&mut parent, a * n + b, a * n + c);
                    union(&mut parent, b * n + a, c * n + a);
                }
            }
        }
    }
    for (a, b) in g.edges() {
        if find(&mut parent, a * n + b) == find(&mut parent, b * n + a) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reflexive graphs whose complement is a comparability graph.
pub fn is_cocomparability(g: &Graph) -> Result<bool> {
    g.require_mode(DiagonalMode::Reflexive)?;
    is_comparability(&g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Exhaustive search over all orientations; only for a handful of edges.
    fn orientable_by_brute_force(g: &Graph) -> bool {
        let edges = g.edges();
        let m = edges.len();
        (0u32..(1 << m)).any(|mask| {
            let arc = |u: usize, v: usize| {
                edges.iter().enumerate().any(|(k, &(a, b))| {
                    let fwd = mask >> k & 1 == 0;
                    (fwd && (a, b) == (u, v)) || (!fwd && (b, a) == (u, v))
                })
            };
            let n = g.n();
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(x != z && arc(x, y) && arc(y, z)) || arc(x, z))))
        })
    }

    #[test]
    fn examples() {
        assert!(is_comparability(&families::complete_bipartite(2, 3)).unwrap());
        assert!(is_comparability(&families::t_graph()).unwrap());
        assert!(!is_comparability(&families::cycle(5)).unwrap());
        assert!(is_comparability(&families::complete(3)).unwrap());
        assert!(is_cocomparability(&families::cycle(4)).unwrap());
        assert!(!is_cocomparability(&families::cycle(6)).unwrap());
        assert!(!is_cocomparability(&families::t_graph()).unwrap());
    }

    #[test]
    fn agrees_with_orientation_search_on_small_graphs() {
        for n in 1..=5 {
            for g in crate::canon::enumerate_nonisomorphic(n).unwrap() {
                assert_eq!(is_comparability(&g).unwrap(), orientable_by_brute_force(&g), "{g:?}");
            }
        }
        assert!(!orientable_by_brute_force(&families::cycle(5)));
    }
}
