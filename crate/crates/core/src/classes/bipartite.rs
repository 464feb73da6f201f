//! Bipartite strong cocomparability graphs: chordal bigraphs without `S`
//! or `T` as a (not necessarily induced) subgraph. Connected members are
//! caterpillars in which some non-consecutive degree-two spine vertices
//! have been replicated.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families;
use crate::graph::{DiagonalMode, Graph, VertexOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BipartiteWitness {
    /// Host vertices for the six vertices of `S` (pendant, cycle x4, pendant).
    S { vertices: Vec<usize> },
    /// Host vertices for the seven vertices of `T`, in its standard labelling.
    T { vertices: Vec<usize> },
    /// An induced cycle of length at least six.
    InducedCycle { cycle: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BipartiteVerdict {
    Yes,
    No { witness: BipartiteWitness },
}

impl BipartiteVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, BipartiteVerdict::Yes)
    }
}

pub fn bipartite_scc_check(g: &Graph) -> Result<BipartiteVerdict> {
    g.require_mode(DiagonalMode::Reflexive)?;
    if g.is_bipartite().is_none() {
        return Err(Error::NotBipartite);
    }
    if let Some(vertices) = find_subgraph(g, &families::s_graph()) {
        return Ok(BipartiteVerdict::No {
            witness: BipartiteWitness::S { vertices },
        });
    }
    if let Some(vertices) = find_subgraph(g, &families::t_graph()) {
        return Ok(BipartiteVerdict::No {
            witness: BipartiteWitness::T { vertices },
        });
    }
    if let Some(cycle) = induced_cycle_at_least(g, 6) {
        return Ok(BipartiteVerdict::No {
            witness: BipartiteWitness::InducedCycle { cycle },
        });
    }
    Ok(BipartiteVerdict::Yes)
}

/// Injective map of `pattern` into `host` preserving every pattern edge.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    // Place pattern vertices in BFS order from a maximum-degree vertex so
    // each one after the first has an already placed neighbour.
    let start = (0..k).max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))?;
    let mut order = vec![start];
    let mut i = 0;
    while i < order.len() {
        for w in pattern.neighbors(order[i]) {
            if !order.contains(&w) {
                order.push(w);
            }
        }
        i += 1;
    }
    for v in 0..k {
        if !order.contains(&v) {
            order.push(v);
        }
    }
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.n()];
    if extend_map(host, pattern, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_map(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let need = pattern.degree(p);
    for h in 0..host.n() {
        if used[h] || host.degree(h) < need {
            continue;
        }
        let fits = pattern
            .neighbors(p)
            .all(|q| map[q] == usize::MAX || host.has_edge(h, map[q]));
        if !fits {
            continue;
        }
        map[p] = h;
        used[h] = true;
        if extend_map(host, pattern, order, depth + 1, map, used) {
            return true;
        }
        used[h] = false;
        map[p] = usize::MAX;
    }
    false
}

/// An induced cycle with at least `min_len` vertices, found by growing
/// chordless paths from each start vertex through larger-indexed vertices.
pub fn induced_cycle_at_least(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let n = g.n();
    for s in 0..n {
        for v1 in g.neighbors(s).filter(|&v| v > s) {
            let mut path = vec![s, v1];
            if let Some(c) = grow_chordless(g, s, &mut path, min_len) {
                return Some(c);
            }
        }
    }
    None
}

fn grow_chordless(g: &Graph, s: usize, path: &mut Vec<usize>, min_len: usize) -> Option<Vec<usize>> {
    let last = *path.last().unwrap();
    let candidates: Vec<usize> = g.neighbors(last).filter(|&w| w > s && !path.contains(&w)).collect();
    for w in candidates {
        // No chords back into the interior of the path.
        if path[1..path.len() - 1].iter().any(|&x| g.has_edge(x, w)) {
            continue;
        }
        if g.has_edge(s, w) {
            if path.len() + 1 >= min_len {
                let mut c = path.clone();
                c.push(w);
                return Some(c);
            }
            continue;
        }
        path.push(w);
        if let Some(c) = grow_chordless(g, s, path, min_len) {
            return Some(c);
        }
        path.pop();
    }
    None
}

/// A caterpillar with replicated spine vertices.
///
/// `spine` is a path; `leaves[v]` hangs off spine vertex `v`; every vertex in
/// `replicas[s]` copies the two spine neighbours of its shadow `s`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CaterpillarPlan {
    pub spine: Vec<usize>,
    pub leaves: BTreeMap<usize, BTreeSet<usize>>,
    pub replicas: BTreeMap<usize, BTreeSet<usize>>,
}

impl CaterpillarPlan {
    /// Numbers the spine `0..spine_len`, then leaves in spine order, then replicas.
    /// `leaf_counts[i]` leaves hang off spine vertex `i`; `(i, r)` in
    /// `replicate` gives spine vertex `i` `r` replicas.
    pub fn from_counts(spine_len: usize, leaf_counts: &[usize], replicate: &[(usize, usize)]) -> Result<Self> {
        if leaf_counts.len() > spine_len {
            return Err(Error::Precondition(format!(
                "{} leaf counts given for a spine of {spine_len}",
                leaf_counts.len()
            )));
        }
        let mut plan = CaterpillarPlan {
            spine: (0..spine_len).collect(),
            ..Default::default()
        };
        let mut next = spine_len;
        for (i, &c) in leaf_counts.iter().enumerate() {
            if c > 0 {
                plan.leaves.insert(i, (next..next + c).collect());
                next += c;
            }
        }
        for &(i, r) in replicate {
            if i >= spine_len {
                return Err(Error::Precondition(format!("replicated spine index {i} out of range")));
            }
            if r > 0 {
                let set = plan.replicas.entry(i).or_default();
                set.extend(next..next + r);
                next += r;
            }
        }
        Ok(plan)
    }

    pub fn vertex_count(&self) -> usize {
        self.spine.len()
            + self.leaves.values().map(BTreeSet::len).sum::<usize>()
            + self.replicas.values().map(BTreeSet::len).sum::<usize>()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let all = self
            .spine
            .iter()
            .chain(self.leaves.values().flatten())
            .chain(self.replicas.values().flatten());
        for &v in all {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition(format!(
                    "vertex labels must be exactly 0..{n}, each used once (offending label {v})"
                )));
            }
        }
        let spine_pos: BTreeMap<usize, usize> = self.spine.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for v in self.leaves.keys() {
            if !spine_pos.contains_key(v) {
                return Err(Error::Precondition(format!("leaves attached to non-spine vertex {v}")));
            }
        }
        let mut shadow_positions = Vec::new();
        for (&s, reps) in &self.replicas {
            if reps.is_empty() {
                continue;
            }
            let Some(&i) = spine_pos.get(&s) else {
                return Err(Error::Precondition(format!("shadow {s} is not on the spine")));
            };
            if self.leaves.get(&s).is_some_and(|l| !l.is_empty()) {
                return Err(Error::Precondition(format!("shadow {s} has leaves")));
            }
            if i == 0 || i + 1 == self.spine.len() {
                return Err(Error::Precondition(format!(
                    "shadow {s} is a spine end and does not have degree two"
                )));
            }
            shadow_positions.push(i);
        }
        shadow_positions.sort_unstable();
        if shadow_positions.windows(2).any(|w| w[1] == w[0] + 1) {
            return Err(Error::Precondition(
                "consecutive spine vertices are both replicated".into(),
            ));
        }
        Ok(())
    }
}

pub fn generate_replicated_caterpillar(plan: &CaterpillarPlan) -> Result<Graph> {
    plan.validate()?;
    let n = plan.vertex_count();
    let mut edges: Vec<(usize, usize)> = plan.spine.windows(2).map(|w| (w[0], w[1])).collect();
    for (&v, ls) in &plan.leaves {
        edges.extend(ls.iter().map(|&l| (v, l)));
    }
    for (&s, reps) in &plan.replicas {
        if reps.is_empty() {
            continue;
        }
        let i = plan.spine.iter().position(|&x| x == s).unwrap();
        let (a, b) = (plan.spine[i - 1], plan.spine[i + 1]);
        for &r in reps {
            edges.push((a, r));
            edges.push((b, r));
        }
    }
    Graph::from_edges(n, DiagonalMode::Reflexive, edges)
}

/// Squares of `g`: sets of at least two degree-two vertices with the same
/// two neighbours (the connectors). Returns `(shadow, replicas)` per square,
/// the shadow being the lowest-index member.
fn elect_squares(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        if g.degree(v) == 2 {
            let mut nb = g.neighbors(v);
            let a = nb.next().unwrap();
            let b = nb.next().unwrap();
            groups.entry((a, b)).or_default().push(v);
        }
    }
    let mut squares: Vec<(Vec<usize>, (usize, usize))> = groups
        .into_iter()
        .filter(|(_, m)| m.len() >= 2)
        .map(|(c, m)| (m, c))
        .collect();
    squares.sort();
    let mut members = BTreeSet::new();
    let mut connectors = BTreeSet::new();
    let mut out = Vec::new();
    for (m, (a, b)) in squares {
        // A 4-cycle whose vertices all have degree two is one square seen from both sides.
        if m.iter().any(|v| connectors.contains(v)) || members.contains(&a) || members.contains(&b) {
            continue;
        }
        members.extend(m.iter().copied());
        connectors.insert(a);
        connectors.insert(b);
        out.push((m[0], m[1..].to_vec()));
    }
    out
}

/// Strong cocomparability ordering of a connected bipartite member:
/// spine vertex, then its leaves by increasing index, along the spine, with
/// replicas placed right after their shadow.
pub fn caterpillar_ordering(g: &Graph) -> Result<VertexOrdering> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "caterpillar ordering needs a connected graph".into(),
        ));
    }
    if !bipartite_scc_check(g)?.is_yes() {
        return Err(Error::Precondition(
            "graph is not a bipartite strong cocomparability graph".into(),
        ));
    }
    let n = g.n();
    if n <= 1 {
        return Ok(VertexOrdering::identity(n));
    }
    let squares = elect_squares(g);
    let mut removed = vec![false; n];
    let mut replicas_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (shadow, reps) in &squares {
        for &r in reps {
            removed[r] = true;
        }
        replicas_of.insert(*shadow, reps.clone());
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let deg = |v: usize| g.neighbors(v).filter(|&w| !removed[w]).count();
    let edge_count: usize = kept.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    if edge_count + 1 != kept.len() {
        return Err(Error::Precondition("graph minus replicas is not a tree".into()));
    }

    let mut spine: Vec<usize> = kept.iter().copied().filter(|&v| deg(v) >= 2).collect();
    if spine.is_empty() {
        // K2
        spine.push(kept[0]);
    } else {
        let on_spine = |v: usize| deg(v) >= 2;
        let spine_nbrs = |v: usize| {
            g.neighbors(v)
                .filter(|&w| !removed[w] && on_spine(w))
                .collect::<Vec<_>>()
        };
        if spine.iter().any(|&v| spine_nbrs(v).len() > 2) {
            return Err(Error::Precondition("graph minus replicas is not a caterpillar".into()));
        }
        let start = *spine.iter().find(|&&v| spine_nbrs(v).len() <= 1).unwrap();
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = spine_nbrs(cur).iter().find(|&&w| w != prev) {
            path.push(next);
            prev = cur;
            cur = next;
        }
        if path.len() != spine.len() {
            return Err(Error::Precondition("graph minus replicas is not a caterpillar".into()));
        }
        spine = path;
    }

    // A shadow must sit strictly inside the spine; pull a leaf onto the spine when it ends there.
    let leaf_nbrs = |v: usize, spine: &[usize]| -> Vec<usize> {
        g.neighbors(v).filter(|&w| !removed[w] && !spine.contains(&w)).collect()
    };
    if replicas_of.contains_key(&spine[0]) {
        let l = leaf_nbrs(spine[0], &spine)[0];
        spine.insert(0, l);
    }
    let last = *spine.last().unwrap();
    if replicas_of.contains_key(&last) {
        let l = leaf_nbrs(last, &spine)[0];
        spine.push(l);
    }

    let mut perm = Vec::with_capacity(n);
    for &v in &spine {
        perm.push(v);
        if let Some(reps) = replicas_of.get(&v) {
            perm.extend(reps.iter().copied());
        }
        perm.extend(leaf_nbrs(v, &spine));
    }
    VertexOrdering::new(perm, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::verify_scc_ordering;

    fn valid(g: &Graph, o: &VertexOrdering) -> bool {
        verify_scc_ordering(g, o).unwrap().is_valid()
    }

    #[test]
    fn witnesses() {
        let s = families::s_graph();
        assert!(matches!(
            bipartite_scc_check(&s).unwrap(),
            BipartiteVerdict::No {
                witness: BipartiteWitness::S { .. }
            }
        ));
        let t = families::t_graph();
        assert!(matches!(
            bipartite_scc_check(&t).unwrap(),
            BipartiteVerdict::No {
                witness: BipartiteWitness::T { .. }
            }
        ));
        match bipartite_scc_check(&families::cycle(6)).unwrap() {
            BipartiteVerdict::No {
                witness: BipartiteWitness::InducedCycle { cycle },
            } => assert_eq!(cycle.len(), 6),
            v => panic!("{v:?}"),
        }
        assert!(matches!(
            bipartite_scc_check(&families::cycle(5)),
            Err(Error::NotBipartite)
        ));
    }

    #[test]
    fn subgraph_matches_preserve_edges() {
        let s = families::s_graph();
        let host = families::complete_bipartite(3, 3);
        let m = find_subgraph(&host, &s).unwrap();
        for (a, b) in s.edges() {
            assert!(host.has_edge(m[a], m[b]));
        }
        assert!(find_subgraph(&families::path(7), &s).is_none());
    }

    #[test]
    fn orderings_of_small_caterpillars() {
        let star = families::star(3);
        assert_eq!(caterpillar_ordering(&star).unwrap().as_slice(), &[0, 1, 2, 3]);
        let p4 = families::path(4);
        assert_eq!(caterpillar_ordering(&p4).unwrap().as_slice(), &[1, 0, 2, 3]);
        let c4 = families::cycle(4);
        let o = caterpillar_ordering(&c4).unwrap();
        assert_eq!(o.as_slice(), &[1, 0, 2, 3]);
        assert!(valid(&c4, &o));
        for g in [
            star,
            p4,
            families::complete_bipartite(2, 3),
            families::path(2),
            families::path(1),
        ] {
            let o = caterpillar_ordering(&g).unwrap();
            assert!(valid(&g, &o), "{g:?} {o:?}");
        }
    }

    #[test]
    fn generator() {
        let k12 = generate_replicated_caterpillar(&CaterpillarPlan::from_counts(1, &[2], &[]).unwrap()).unwrap();
        assert_eq!(k12, families::star(2));
        let c4 = generate_replicated_caterpillar(&CaterpillarPlan::from_counts(3, &[], &[(1, 1)]).unwrap()).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert!(bipartite_scc_check(&c4).unwrap().is_yes());

        assert!(
            generate_replicated_caterpillar(&CaterpillarPlan::from_counts(4, &[], &[(1, 1), (2, 1)]).unwrap()).is_err()
        );
        assert!(
            generate_replicated_caterpillar(&CaterpillarPlan::from_counts(3, &[0, 1], &[(1, 1)]).unwrap()).is_err()
        );
        assert!(generate_replicated_caterpillar(&CaterpillarPlan::from_counts(3, &[], &[(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn typical_replicated_caterpillar() {
        let set = |xs: &[usize]| xs.iter().map(|x| x - 1).collect::<BTreeSet<_>>();
        let plan = CaterpillarPlan {
            spine: [2, 5, 8, 9, 11, 15, 19, 21].iter().map(|x| x - 1).collect(),
            leaves: BTreeMap::from([(1, set(&[1, 3, 4])), (8, set(&[10])), (14, set(&[16, 17, 18]))]),
            replicas: BTreeMap::from([(4, set(&[6, 7])), (10, set(&[12, 13, 14])), (18, set(&[20]))]),
        };
        let g = generate_replicated_caterpillar(&plan).unwrap();
        assert_eq!(g.n(), 21);
        assert!(g.is_bipartite().is_some());
        assert!(bipartite_scc_check(&g).unwrap().is_yes());
        let o = caterpillar_ordering(&g).unwrap();
        assert!(valid(&g, &o));
    }

    #[test]
    fn rejects_non_members() {
        assert!(caterpillar_ordering(&families::s_graph()).is_err());
        let two = Graph::from_edges(4, DiagonalMode::Reflexive, [(0, 1), (2, 3)]).unwrap();
        assert!(caterpillar_ordering(&two).is_err());
    }
}
