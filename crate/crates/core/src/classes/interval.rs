use serde::{Deserialize, Serialize};

use crate::builder::recognize;
use crate::error::Result;
use crate::graph::{DiagonalMode, Graph};
use crate::oracle::{brute_force_ordering, OracleQuery, MAX_BRUTE_N};
use crate::pattern::PatternKind;

use super::chordal::{is_chordal, is_strongly_chordal};

/// Component labels of `g` minus the closed neighbourhood of `w`
/// (`usize::MAX` on removed vertices).
fn components_avoiding(g: &Graph, w: usize) -> Vec<usize> {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX || s == w || g.has_edge(w, s) {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if label[y] == usize::MAX && y != w && !g.has_edge(w, y) {
                    label[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// The lexicographically least asteroidal triple: pairwise non-adjacent
/// vertices, each two joined by a path avoiding the closed neighbourhood of the third.
pub fn find_asteroidal_triple(g: &Graph) -> Result<Option<(usize, usize, usize)>> {
    g.require_mode(DiagonalMode::Reflexive)?;
    let n = g.n();
    let comp: Vec<Vec<usize>> = (0..n).map(|w| components_avoiding(g, w)).collect();
    let joined = |a: usize, b: usize, avoid: usize| {
        let c = &comp[avoid];
        c[a] != usize::MAX && c[a] == c[b]
    };
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            for w in (v + 1)..n {
                if g.has_edge(u, w) || g.has_edge(v, w) {
                    continue;
                }
                if joined(u, v, w) && joined(u, w, v) && joined(v, w, u) {
                    return Ok(Some((u, v, w)));
                }
            }
        }
    }
    Ok(None)
}

/// Interval graphs as the strongly chordal strong cocomparability graphs.
pub fn is_interval(g: &Graph) -> Result<bool> {
    Ok(is_strongly_chordal(g)? && recognize(g)?.is_member())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRoutes {
    /// Strongly chordal and strong cocomparability.
    pub strongly_chordal_and_scc: bool,
    /// Chordal without an asteroidal triple.
    pub chordal_without_asteroidal_triple: bool,
    /// A symmetric ordering free of both Gamma and Slash exists; `None` above the brute-force bound.
    pub gamma_slash_free_ordering: Option<bool>,
}

impl IntervalRoutes {
    pub fn agree(&self) -> bool {
        self.strongly_chordal_and_scc == self.chordal_without_asteroidal_triple
            && self
                .gamma_slash_free_ordering
                .is_none_or(|b| b == self.strongly_chordal_and_scc)
    }
}

pub fn interval_routes(g: &Graph) -> Result<IntervalRoutes> {
    let primary = is_interval(g)?;
    let classic = is_chordal(g)?.is_chordal() && find_asteroidal_triple(g)?.is_none();
    let brute = if g.n() <= MAX_BRUTE_N {
        let q = OracleQuery::new(g.clone(), vec![PatternKind::Gamma, PatternKind::Slash])?;
        Some(brute_force_ordering(&q)?.is_some())
    } else {
        None
    };
    Ok(IntervalRoutes {
        strongly_chordal_and_scc: primary,
        chordal_without_asteroidal_triple: classic,
        gamma_slash_free_ordering: brute,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn asteroidal_triples() {
        assert_eq!(find_asteroidal_triple(&families::t_graph()).unwrap(), Some((0, 2, 6)));
        assert_eq!(find_asteroidal_triple(&families::complete(5)).unwrap(), None);
        assert_eq!(find_asteroidal_triple(&families::cycle(5)).unwrap(), None);
        assert!(find_asteroidal_triple(&families::cycle(6)).unwrap().is_some());
    }

    #[test]
    fn interval_examples() {
        let p4 = interval_routes(&families::path(4)).unwrap();
        assert!(p4.agree() && p4.strongly_chordal_and_scc);
        assert!(!is_interval(&families::cycle(4)).unwrap());
        assert!(!is_interval(&families::sun(3)).unwrap());
        assert!(interval_routes(&families::sun(3)).unwrap().agree());
    }
}
