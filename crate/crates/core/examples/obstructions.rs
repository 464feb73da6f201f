//! Minimal cocomparability graphs that are not strong cocomparability, on
//! six and seven vertices.

use scoco::{minimal_obstructions, MinimalityConvention};

fn main() -> scoco::Result<()> {
    for n in [6, 7] {
        let summary = minimal_obstructions(n, None, 0)?;
        let any = summary.report(MinimalityConvention::Any);
        let connected = summary.report(MinimalityConvention::Connected);
        println!(
            "n = {n}: {} obstructions among {} graphs ({} connected)",
            any.count, summary.corpus_size, connected.count
        );
        for g6 in &any.graphs {
            println!("  {g6}");
        }
    }
    Ok(())
}
