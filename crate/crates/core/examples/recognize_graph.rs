//! Reads a 0/1 adjacency matrix (file argument or stdin) and prints either a
//! Slash-free ordering or the reason none exists.
//!
//! `echo -e "1100\n1110\n0111\n0011" | cargo run --example recognize_graph`

use std::io::Read;

use scoco::{parse_graph, recognize, DiagonalMode, GraphFormat, RecognitionVerdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut text = Vec::new();
    match std::env::args().nth(1) {
        Some(path) => text = std::fs::read(path)?,
        None => {
            std::io::stdin().read_to_end(&mut text)?;
        }
    }
    let g = parse_graph(&text, GraphFormat::Matrix, DiagonalMode::Reflexive)?;
    match recognize(&g)? {
        RecognitionVerdict::Member { ordering } => {
            println!("strong cocomparability, ordering {:?}", ordering.as_slice());
            let p = g.permuted(&ordering);
            for u in 0..p.n() {
                let row: String = (0..p.n()).map(|v| if p.has_edge(u, v) { '1' } else { '0' }).collect();
                println!("  {row}");
            }
        }
        RecognitionVerdict::NonMember { certificate } => {
            println!(
                "not strong cocomparability: ({}, {}) forces its own reverse",
                certificate.pair.u, certificate.pair.v
            );
            println!("{}", serde_json::to_string(&certificate)?);
        }
    }
    Ok(())
}
