//! Text formats: dense 0/1 matrix, edge list, and graph6.
//!
//! graph6 has no way to express loops, so the diagonal is synthesized from
//! the requested mode on read and dropped on write.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DiagonalMode, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    Matrix,
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "matrix" => Ok(GraphFormat::Matrix),
            "edge-list" | "edge_list" | "edges" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Matrix => "matrix",
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

pub fn parse_graph(text: &[u8], format: GraphFormat, mode: DiagonalMode) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("input is not UTF-8: {e}"),
    })?;
    match format {
        GraphFormat::Matrix => parse_matrix(text, mode),
        GraphFormat::EdgeList => parse_edge_list(text, mode),
        GraphFormat::Graph6 => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let first = lines.next().ok_or_else(|| Error::Graph6("empty input".into()))?;
            if lines.next().is_some() {
                return Err(Error::Graph6("expected exactly one graph".into()));
            }
            decode_graph6(first, mode)
        }
    }
}

pub fn serialize(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Matrix => {
            let mut out = String::with_capacity(g.n() * (g.n() + 1));
            for u in 0..g.n() {
                for v in 0..g.n() {
                    out.push(if g.has_edge(u, v) { '1' } else { '0' });
                }
                out.push('\n');
            }
            out
        }
        GraphFormat::EdgeList => {
            let edges = g.edges();
            let mut out = format!("{} {}\n", g.n(), edges.len());
            for (u, v) in edges {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
        GraphFormat::Graph6 => {
            let mut s = encode_graph6(g);
            s.push('\n');
            s
        }
    }
}

fn parse_matrix(text: &str, mode: DiagonalMode) -> Result<Graph> {
    let rows: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).collect::<Vec<_>>();
    // Tolerate trailing blank lines only.
    let len = rows.iter().rposition(|r| !r.trim().is_empty()).map_or(0, |i| i + 1);
    let rows = &rows[..len];
    let n = rows.len();
    let mut bits = vec![vec![false; n]; n];
    for (i, row) in rows.iter().enumerate() {
        let row = row.trim_end();
        if row.chars().count() != n {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!(
                    "expected {n} entries, found {} (matrix must be square)",
                    row.chars().count()
                ),
            });
        }
        for (j, ch) in row.chars().enumerate() {
            bits[i][j] = match ch {
                '0' => false,
                '1' => true,
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: format!("unexpected character {other:?}; only 0 and 1 are allowed"),
                    })
                }
            };
        }
    }
    for (i, row) in bits.iter().enumerate() {
        for j in (i + 1)..n {
            if row[j] != bits[j][i] {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("matrix is not symmetric at ({i},{j})"),
                });
            }
        }
    }
    let ones = (0..n).filter(|&v| bits[v][v]).count();
    if ones != 0 && ones != n {
        let v = (0..n).find(|&v| bits[v][v] != bits[0][0]).unwrap();
        return Err(Error::Parse {
            line: v + 1,
            msg: "mixed diagonal: loops must be all present or all absent".into(),
        });
    }
    if n > 0 {
        let found = if ones == n {
            DiagonalMode::Reflexive
        } else {
            DiagonalMode::Irreflexive
        };
        if found != mode {
            return Err(Error::ModeMismatch { expected: mode, found });
        }
    }
    let edges = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j)));
    Graph::from_edges(n, mode, edges.filter(|&(i, j)| bits[i][j]))
}

fn parse_edge_list(text: &str, mode: DiagonalMode) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_two(header, hline)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = parse_two(l, line)?;
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("loop {u} {v}; loops are implied by the mode"),
            });
        }
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, mode, edges)
}

fn parse_two(l: &str, line: usize) -> Result<(usize, usize)> {
    let parts: Vec<&str> = l.split_whitespace().collect();
    let bad = || Error::Parse {
        line,
        msg: format!("expected two non-negative integers, found {l:?}"),
    };
    if parts.len() != 2 {
        return Err(bad());
    }
    let a = parts[0].parse().map_err(|_| bad())?;
    let b = parts[1].parse().map_err(|_| bad())?;
    Ok((a, b))
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is accepted).
pub fn decode_graph6(s: &str, mode: DiagonalMode) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, rest) = match bytes {
        [] => return Err(Error::Graph6("empty string".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 36-bit size".into()));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 18-bit size".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if rest.len() != need {
        return Err(Error::Graph6(format!(
            "{n} vertices need {need} data bytes, found {}",
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..need * 6 {
        if bit(k) {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, mode, edges)
}

/// graph6 encoding of the loopless part of `g` (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Reads a corpus file: one graph6 string per non-empty line.
pub fn read_graph6_corpus(text: &str, mode: DiagonalMode) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode_graph6(l, mode).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })
        })
        .collect()
}
