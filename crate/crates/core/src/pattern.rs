//! Forbidden 2x2 submatrices of symmetrically ordered matrices and the four
//! ordered induced patterns that characterize strong cocomparability orderings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{DiagonalMode, Graph, VertexOrdering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    Slash,
    Gamma,
    I2,
    PrincipalSlash,
    PrincipalGamma,
    PrincipalI2,
}

impl PatternKind {
    pub const ALL: [PatternKind; 6] = [
        PatternKind::Slash,
        PatternKind::Gamma,
        PatternKind::I2,
        PatternKind::PrincipalSlash,
        PatternKind::PrincipalGamma,
        PatternKind::PrincipalI2,
    ];

    /// Entries `[[m(i1,j1), m(i1,j2)], [m(i2,j1), m(i2,j2)]]`.
    pub fn cells(self) -> [[bool; 2]; 2] {
        match self {
            PatternKind::Slash | PatternKind::PrincipalSlash => [[false, true], [true, false]],
            PatternKind::Gamma | PatternKind::PrincipalGamma => [[true, true], [true, false]],
            PatternKind::I2 | PatternKind::PrincipalI2 => [[true, false], [false, true]],
        }
    }

    pub fn is_principal(self) -> bool {
        matches!(
            self,
            PatternKind::PrincipalSlash | PatternKind::PrincipalGamma | PatternKind::PrincipalI2
        )
    }

    pub fn required_mode(self) -> DiagonalMode {
        match self {
            PatternKind::I2 | PatternKind::PrincipalI2 => DiagonalMode::Irreflexive,
            _ => DiagonalMode::Reflexive,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Slash => "slash",
            PatternKind::Gamma => "gamma",
            PatternKind::I2 => "i2",
            PatternKind::PrincipalSlash => "pslash",
            PatternKind::PrincipalGamma => "pgamma",
            PatternKind::PrincipalI2 => "pi2",
        }
    }

    /// Whether the 2x2 selection at permuted coordinates matches this pattern.
    /// `at(i, j)` reads the permuted matrix.
    pub fn matches(self, at: impl Fn(usize, usize) -> bool, rows: (usize, usize), cols: (usize, usize)) -> bool {
        let c = self.cells();
        let (i1, i2) = rows;
        let (j1, j2) = cols;
        if at(i1, j1) != c[0][0] || at(i1, j2) != c[0][1] || at(i2, j1) != c[1][0] || at(i2, j2) != c[1][1] {
            return false;
        }
        // Mode compatibility already pins the diagonal value, so any index
        // coincidence puts a designated entry on the diagonal.
        !self.is_principal() || i1 == j1 || i1 == j2 || i2 == j1 || i2 == j2
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        PatternKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown pattern `{s}` (expected one of slash, gamma, i2, pslash, pgamma, pi2)"))
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A forbidden 2x2 submatrix: positions in the ordering plus the vertices there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    pub row_vertices: (usize, usize),
    pub col_vertices: (usize, usize),
}

pub(crate) fn check_ordering(g: &Graph, ord: &VertexOrdering) -> Result<()> {
    if ord.len() != g.n() {
        return Err(Error::NotAPermutation {
            n: g.n(),
            detail: format!("ordering has {} entries", ord.len()),
        });
    }
    Ok(())
}

/// Least witness in lexicographic `(i1, i2, j1, j2)` order, if any.
pub fn scan(g: &Graph, ord: &VertexOrdering, kind: PatternKind) -> Result<Option<PatternWitness>> {
    g.require_mode(kind.required_mode())?;
    check_ordering(g, ord)?;
    let n = g.n();
    let p = g.permuted(ord);
    let words = p.words_per_row();
    let tail = if n & 63 == 0 { u64::MAX } else { (1u64 << (n & 63)) - 1 };
    let c = kind.cells();
    let select = |row: &[u64], want: bool, out: &mut [u64]| {
        for (o, &w) in out.iter_mut().zip(row) {
            *o = if want { w } else { !w };
        }
        if let Some(last) = out.last_mut() {
            *last &= tail;
        }
    };
    let mut first_col = vec![0u64; words];
    let mut second_col = vec![0u64; words];
    let mut tmp = vec![0u64; words];
    for i1 in 0..n {
        for i2 in (i1 + 1)..n {
            // Columns whose (row i1, row i2) entries equal the pattern's first / second column.
            select(p.row(i1), c[0][0], &mut first_col);
            select(p.row(i2), c[1][0], &mut tmp);
            first_col.iter_mut().zip(&tmp).for_each(|(a, b)| *a &= b);
            select(p.row(i1), c[0][1], &mut second_col);
            select(p.row(i2), c[1][1], &mut tmp);
            second_col.iter_mut().zip(&tmp).for_each(|(a, b)| *a &= b);

            let best = if kind.is_principal() {
                let mut cands: Vec<(usize, usize)> = Vec::new();
                for d in [i1, i2] {
                    if bits::get(&first_col, d) {
                        if let Some(j2) = bits::next_one(&second_col, d + 1) {
                            cands.push((d, j2));
                        }
                    }
                    if bits::get(&second_col, d) {
                        if let Some(j1) = bits::next_one(&first_col, 0).filter(|&j1| j1 < d) {
                            cands.push((j1, d));
                        }
                    }
                }
                cands.into_iter().min()
            } else {
                bits::next_one(&first_col, 0).and_then(|j1| bits::next_one(&second_col, j1 + 1).map(|j2| (j1, j2)))
            };
            if let Some((j1, j2)) = best {
                let perm = ord.as_slice();
                return Ok(Some(PatternWitness {
                    kind,
                    rows: (i1, i2),
                    cols: (j1, j2),
                    row_vertices: (perm[i1], perm[i2]),
                    col_vertices: (perm[j1], perm[j2]),
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderedPattern {
    P1,
    P2,
    P3,
    P4,
}

impl OrderedPattern {
    /// Edges among positions `x1 < x2 < x3 (< x4)`, as index pairs into the
    /// tuple; every other pair is a non-edge.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            OrderedPattern::P1 => &[(0, 2)],
            OrderedPattern::P2 => &[(0, 2), (1, 3), (1, 2)],
            OrderedPattern::P3 => &[(0, 2), (1, 3), (0, 3), (1, 2)],
            OrderedPattern::P4 => &[(0, 3), (0, 1), (1, 2), (2, 3)],
        }
    }

    pub fn arity(self) -> usize {
        if self == OrderedPattern::P1 {
            3
        } else {
            4
        }
    }

    fn holds(self, g: &Graph, vs: &[usize]) -> bool {
        let e = self.edges();
        for a in 0..vs.len() {
            for b in (a + 1)..vs.len() {
                if g.has_edge(vs[a], vs[b]) != e.contains(&(a, b)) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedPatternWitness {
    pub kind: OrderedPattern,
    /// Vertices in increasing ordering position.
    pub vertices: Vec<usize>,
    pub positions: Vec<usize>,
}

/// First occurrence of an ordered pattern: triples (P1) in lexicographic
/// position order, then quadruples in lexicographic order trying P2, P3, P4.
pub fn find_ordered_pattern(g: &Graph, ord: &VertexOrdering) -> Result<Option<OrderedPatternWitness>> {
    g.require_mode(DiagonalMode::Reflexive)?;
    check_ordering(g, ord)?;
    let p = ord.as_slice();
    let n = g.n();
    let hit = |kind: OrderedPattern, pos: Vec<usize>| OrderedPatternWitness {
        kind,
        vertices: pos.iter().map(|&i| p[i]).collect(),
        positions: pos,
    };
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                if OrderedPattern::P1.holds(g, &[p[a], p[b], p[c]]) {
                    return Ok(Some(hit(OrderedPattern::P1, vec![a, b, c])));
                }
            }
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let vs = [p[a], p[b], p[c], p[d]];
                    for kind in [OrderedPattern::P2, OrderedPattern::P3, OrderedPattern::P4] {
                        if kind.holds(g, &vs) {
                            return Ok(Some(hit(kind, vec![a, b, c, d])));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum OrderingVerdict {
    Valid,
    Invalid {
        pattern: OrderedPatternWitness,
        slash: PatternWitness,
    },
}

impl OrderingVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, OrderingVerdict::Valid)
    }
}

/// Checks a strong cocomparability ordering. The Slash scan decides; the
/// ordered-pattern search supplies the graph-level witness and must agree.
pub fn verify_scc_ordering(g: &Graph, ord: &VertexOrdering) -> Result<OrderingVerdict> {
    g.require_mode(DiagonalMode::Reflexive)?;
    check_ordering(g, ord)?;
    match scan(g, ord, PatternKind::Slash)? {
        None => Ok(OrderingVerdict::Valid),
        Some(slash) => match find_ordered_pattern(g, ord)? {
            Some(pattern) => Ok(OrderingVerdict::Invalid { pattern, slash }),
            None => Err(Error::InternalDefect(format!(
                "Slash submatrix {slash:?} present but no ordered pattern found"
            ))),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum IntervalVerdict {
    Valid,
    /// Vertices `x < y < z` in the ordering with `xz` an edge and `xy` not.
    Invalid {
        triple: (usize, usize, usize),
    },
}

pub fn is_interval_ordering(g: &Graph, ord: &VertexOrdering) -> Result<IntervalVerdict> {
    g.require_mode(DiagonalMode::Reflexive)?;
    check_ordering(g, ord)?;
    let p = ord.as_slice();
    let n = g.n();
    for x in 0..n {
        if let Some(y) = ((x + 1)..n).find(|&y| !g.has_edge(p[x], p[y])) {
            if let Some(z) = ((y + 1)..n).find(|&z| g.has_edge(p[x], p[z])) {
                return Ok(IntervalVerdict::Invalid {
                    triple: (p[x], p[y], p[z]),
                });
            }
        }
    }
    Ok(IntervalVerdict::Valid)
}
