//! Writes every non-isomorphic graph on `n` vertices as graph6, one per line,
//! by extending the seven-vertex enumeration one vertex at a time.
//!
//! `cargo run --release --example make_corpus -- 8 > graphs8.g6`

use std::io::Write;

use scoco::canon::{enumerate_nonisomorphic, extend_by_one_vertex, MAX_ENUM_N};
use scoco::encode_graph6;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).unwrap_or_else(|| "8".into()).parse()?;
    let mut level = enumerate_nonisomorphic(n.min(MAX_ENUM_N))?;
    for _ in MAX_ENUM_N..n {
        level = extend_by_one_vertex(&level)?;
    }
    eprintln!("{} graphs on {n} vertices", level.len());
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for g in &level {
        writeln!(out, "{}", encode_graph6(g))?;
    }
    Ok(())
}
