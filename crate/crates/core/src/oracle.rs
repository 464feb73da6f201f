//! Ground truth by exhaustive search, obstruction mining and cross-validation
//! of the recognizers against each other.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::builder::{recognize, strong_comparability_recognize};
use crate::canon::{canonical_labeling, enumerate_nonisomorphic, MAX_ENUM_N};
use crate::classes::{interval_routes, is_chordal, is_cocomparability, is_comparability, is_strongly_chordal};
use crate::error::{Error, Result};
use crate::format::encode_graph6;
use crate::graph::{DiagonalMode, Graph, VertexOrdering};
use crate::implication::verify_certificate;
use crate::pattern::{verify_scc_ordering, PatternKind};

/// Largest order accepted by [`brute_force_ordering`].
pub const MAX_BRUTE_N: usize = 9;

/// Orders for which [`cross_validate`] samples instead of enumerating.
pub const MAX_SAMPLED_N: usize = 9;

/// Number of non-isomorphic graphs on 8 and 9 vertices, used to sanity-check corpora.
pub const CORPUS_SIZE_8: usize = 12346;
pub const CORPUS_SIZE_9: usize = 274668;

#[derive(Debug, Clone)]
pub struct OracleQuery {
    graph: Graph,
    forbidden: BTreeSet<PatternKind>,
}

impl OracleQuery {
    pub fn new(graph: Graph, forbidden: impl IntoIterator<Item = PatternKind>) -> Result<Self> {
        let forbidden: BTreeSet<PatternKind> = forbidden.into_iter().collect();
        for k in &forbidden {
            graph.require_mode(k.required_mode())?;
        }
        Ok(OracleQuery { graph, forbidden })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn forbidden(&self) -> &BTreeSet<PatternKind> {
        &self.forbidden
    }
}

/// The lexicographically first vertex ordering avoiding every forbidden
/// pattern, found by extending prefixes and rejecting a prefix as soon as its
/// leading principal submatrix contains a pattern.
pub fn brute_force_ordering(q: &OracleQuery) -> Result<Option<VertexOrdering>> {
    let g = &q.graph;
    let n = g.n();
    if n > MAX_BRUTE_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_BRUTE_N,
            what: "brute-force ordering search",
        });
    }
    let kinds: Vec<PatternKind> = q.forbidden.iter().copied().collect();
    let mut search = Brute {
        g,
        kinds: &kinds,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
    };
    if search.dfs() {
        Ok(Some(VertexOrdering::new(search.perm, n)?))
    } else {
        Ok(None)
    }
}

struct Brute<'a> {
    g: &'a Graph,
    kinds: &'a [PatternKind],
    perm: Vec<usize>,
    used: Vec<bool>,
}

impl Brute<'_> {
    fn dfs(&mut self) -> bool {
        let n = self.g.n();
        if self.perm.len() == n {
            return true;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            self.perm.push(v);
            if !self.last_position_completes_pattern() {
                self.used[v] = true;
                if self.dfs() {
                    return true;
                }
                self.used[v] = false;
            }
            self.perm.pop();
        }
        false
    }

    /// Patterns whose largest row or column index is the newest position.
    fn last_position_completes_pattern(&self) -> bool {
        let k = self.perm.len() - 1;
        let at = |i: usize, j: usize| self.g.has_edge(self.perm[i], self.perm[j]);
        for &kind in self.kinds {
            for i1 in 0..k {
                for j2 in 1..=k {
                    for j1 in 0..j2 {
                        // Row pair ends at k.
                        if kind.matches(at, (i1, k), (j1, j2)) {
                            return true;
                        }
                    }
                }
            }
            for i2 in 1..k {
                for i1 in 0..i2 {
                    for j1 in 0..k {
                        // Column pair ends at k, rows strictly before.
                        if kind.matches(at, (i1, i2), (j1, k)) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalityConvention {
    /// Minimal under induced subgraphs among all graphs.
    Any,
    /// As `Any`, keeping only connected graphs.
    Connected,
}

impl std::str::FromStr for MinimalityConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "any" => Ok(MinimalityConvention::Any),
            "connected" => Ok(MinimalityConvention::Connected),
            other => Err(format!("unknown convention `{other}` (expected any or connected)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub n: usize,
    pub convention: MinimalityConvention,
    pub count: usize,
    /// graph6 of the canonical form, in canonical-code order.
    pub graphs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionSummary {
    pub n: usize,
    pub corpus_size: usize,
    /// The convention whose counts reproduce 5, 5, 12, 30 on 6 to 9 vertices.
    /// Both do (a disjoint union of members is a member, so every minimal
    /// obstruction is connected); `any` is reported by default.
    pub default_convention: MinimalityConvention,
    pub conventions_agree: bool,
    pub reports: Vec<ObstructionReport>,
}

impl ObstructionSummary {
    pub fn report(&self, convention: MinimalityConvention) -> &ObstructionReport {
        self.reports.iter().find(|r| r.convention == convention).unwrap()
    }
}

/// Whether `g` is a cocomparability graph that is not strong cocomparability
/// while every one-vertex deletion is.
pub fn is_minimal_obstruction(g: &Graph) -> Result<bool> {
    if !is_cocomparability(g)? || recognize(g)?.is_member() {
        return Ok(false);
    }
    for v in 0..g.n() {
        if !recognize(&g.delete_vertex(v))?.is_member() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds a pool with `jobs` workers (0 for the rayon default).
pub(crate) fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// Canonical code bytes, canonical graph6, connectedness.
type Found = (Vec<u8>, String, bool);

/// Minimal non-strong-cocomparability cocomparability graphs of order `n`.
///
/// Up to seven vertices the graphs are enumerated internally; beyond that
/// `corpus` must hold every non-isomorphic graph of order `n` (reflexive).
pub fn minimal_obstructions(n: usize, corpus: Option<&[Graph]>, jobs: usize) -> Result<ObstructionSummary> {
    let owned;
    let graphs: &[Graph] = match corpus {
        Some(c) => c,
        None if n <= MAX_ENUM_N => {
            owned = enumerate_nonisomorphic(n)?;
            &owned
        }
        None => {
            return Err(Error::MissingCorpus(format!(
                "n = {n} needs a graph6 corpus of all non-isomorphic graphs on {n} vertices"
            )))
        }
    };
    for g in graphs {
        if g.n() != n {
            return Err(Error::Precondition(format!(
                "corpus graph has {} vertices, expected {n}",
                g.n()
            )));
        }
        g.require_mode(DiagonalMode::Reflexive)?;
    }
    let hits: Vec<Result<Option<Found>>> = with_jobs(jobs, || {
        graphs
            .par_iter()
            .map(|g| {
                if !is_minimal_obstruction(g)? {
                    return Ok(None);
                }
                let (code, perm) = canonical_labeling(g)?;
                let canon = g.permuted(&perm);
                Ok(Some((
                    code.as_bytes().to_vec(),
                    encode_graph6(&canon),
                    g.is_connected(),
                )))
            })
            .collect()
    })?;
    let mut found = Vec::new();
    for h in hits {
        if let Some(x) = h? {
            found.push(x);
        }
    }
    found.sort();
    // A corpus may repeat an isomorphism class; report each class once.
    found.dedup_by(|a, b| a.0 == b.0);

    let report = |convention: MinimalityConvention| {
        let graphs: Vec<String> = found
            .iter()
            .filter(|(_, _, conn)| convention == MinimalityConvention::Any || *conn)
            .map(|(_, g6, _)| g6.clone())
            .collect();
        ObstructionReport {
            n,
            convention,
            count: graphs.len(),
            graphs,
        }
    };
    let reports = vec![
        report(MinimalityConvention::Any),
        report(MinimalityConvention::Connected),
    ];
    Ok(ObstructionSummary {
        n,
        corpus_size: graphs.len(),
        default_convention: MinimalityConvention::Any,
        conventions_agree: reports[0].graphs == reports[1].graphs,
        reports,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    /// graph6 of the offending graph (loops implied by the check).
    pub graph: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidationReport {
    pub n: usize,
    pub exhaustive: bool,
    pub graphs: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Every recognizer check applied to one reflexive graph.
pub fn cross_check(g: &Graph) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    let g6 = encode_graph6(g);
    let mut push = |check: &str, detail: String| {
        out.push(Mismatch {
            graph: g6.clone(),
            check: check.to_string(),
            detail,
        })
    };
    let brute = |g: &Graph, kind: PatternKind| -> Result<bool> {
        Ok(brute_force_ordering(&OracleQuery::new(g.clone(), [kind])?)?.is_some())
    };

    let verdict = recognize(g)?;
    let slash_free = brute(g, PatternKind::Slash)?;
    if verdict.is_member() != slash_free {
        push(
            "recognize-vs-brute-slash",
            format!("recognize member={} brute={}", verdict.is_member(), slash_free),
        );
    }
    if let Some(o) = verdict.ordering() {
        if !verify_scc_ordering(g, o)?.is_valid() {
            push(
                "ordering-sound",
                format!("ordering {:?} fails verification", o.as_slice()),
            );
        }
    }
    if let Some(c) = verdict.certificate() {
        if !verify_certificate(g, c) {
            push("certificate-sound", "certificate fails verification".into());
        }
    }

    let mut equiv = |check: &str, lhs: bool, rhs: bool| {
        if lhs != rhs {
            push(check, format!("brute={lhs} recognizer={rhs}"));
        }
    };
    equiv(
        "pgamma-vs-chordal",
        brute(g, PatternKind::PrincipalGamma)?,
        is_chordal(g)?.is_chordal(),
    );
    equiv(
        "gamma-vs-strongly-chordal",
        brute(g, PatternKind::Gamma)?,
        is_strongly_chordal(g)?,
    );
    equiv(
        "pslash-vs-cocomparability",
        brute(g, PatternKind::PrincipalSlash)?,
        is_cocomparability(g)?,
    );
    let h = g.complement();
    equiv(
        "pi2-vs-comparability-of-complement",
        brute(&h, PatternKind::PrincipalI2)?,
        is_comparability(&h)?,
    );
    equiv(
        "i2-vs-strong-comparability-of-complement",
        brute(&h, PatternKind::I2)?,
        strong_comparability_recognize(&h)?.is_member(),
    );
    let routes = interval_routes(g)?;
    if !routes.agree() {
        push("interval-routes", format!("{routes:?}"));
    }
    Ok(out)
}

/// Uniform random reflexive graph with edge probability one half.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::from_edges(n, DiagonalMode::Reflexive, edges).expect("edges are in range")
}

/// Random interval graph: vertex `v` is an interval with both ends drawn
/// uniformly from `0..2n`. Interval graphs are strong cocomparability graphs.
pub fn random_interval_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let spans: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let (a, b) = (rng.gen_range(0..2 * n), rng.gen_range(0..2 * n));
            (a.min(b), a.max(b))
        })
        .collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| spans[u].0 <= spans[v].1 && spans[v].0 <= spans[u].1)
        .collect();
    Graph::from_edges(n, DiagonalMode::Reflexive, edges).expect("edges are in range")
}

/// Runs [`cross_check`] on every graph of order `n` (up to seven vertices)
/// or on `samples` random graphs drawn from `seed` (eight and nine).
pub fn cross_validate(n: usize, samples: usize, seed: u64, jobs: usize) -> Result<CrossValidationReport> {
    let (graphs, exhaustive) = if n <= MAX_ENUM_N {
        (enumerate_nonisomorphic(n)?, true)
    } else if n <= MAX_SAMPLED_N {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ((0..samples).map(|_| random_graph(n, &mut rng)).collect(), false)
    } else {
        return Err(Error::TooLarge {
            n,
            max: MAX_SAMPLED_N,
            what: "cross-validation",
        });
    };
    let results: Vec<Result<Vec<Mismatch>>> = with_jobs(jobs, || graphs.par_iter().map(cross_check).collect())?;
    let mut mismatches = Vec::new();
    for r in results {
        mismatches.extend(r?);
    }
    Ok(CrossValidationReport {
        n,
        exhaustive,
        graphs: graphs.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn brute(g: &Graph, kinds: &[PatternKind]) -> Option<Vec<usize>> {
        brute_force_ordering(&OracleQuery::new(g.clone(), kinds.iter().copied()).unwrap())
            .unwrap()
            .map(VertexOrdering::into_vec)
    }

    #[test]
    fn examples() {
        assert_eq!(
            brute(&families::complete(3), &[PatternKind::Slash]),
            Some(vec![0, 1, 2])
        );
        assert_eq!(brute(&families::cycle(6), &[PatternKind::Slash]), None);
        assert_eq!(
            brute(&families::cycle(4), &[PatternKind::Gamma, PatternKind::Slash]),
            None
        );
        assert!(brute(&families::cycle(4), &[PatternKind::Slash]).is_some());
    }

    #[test]
    fn first_ordering_is_lexicographic() {
        // Star centred at 0, compared against a scan of all six orderings in order.
        let g = Graph::from_edges(3, DiagonalMode::Reflexive, [(0, 1), (0, 2)]).unwrap();
        let found = brute(&g, &[PatternKind::Slash]).unwrap();
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let first = perms
            .iter()
            .find(|p| {
                let o = VertexOrdering::new(p.to_vec(), 3).unwrap();
                crate::pattern::scan(&g, &o, PatternKind::Slash).unwrap().is_none()
            })
            .unwrap();
        assert_eq!(found, first.to_vec());
    }

    #[test]
    fn mode_and_size_errors() {
        assert!(OracleQuery::new(families::path(3), [PatternKind::I2]).is_err());
        let big = OracleQuery::new(families::path(10), [PatternKind::Slash]).unwrap();
        assert!(matches!(brute_force_ordering(&big), Err(Error::TooLarge { .. })));
        assert!(matches!(minimal_obstructions(8, None, 1), Err(Error::MissingCorpus(_))));
    }

    #[test]
    fn small_obstruction_counts() {
        for n in 1..=5 {
            assert_eq!(
                minimal_obstructions(n, None, 1)
                    .unwrap()
                    .report(MinimalityConvention::Any)
                    .count,
                0
            );
        }
    }

    #[test]
    fn cross_validation_small() {
        let r = cross_validate(5, 0, 0, 1).unwrap();
        assert_eq!(r.graphs, 34);
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
    }
}
