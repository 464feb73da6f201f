//! Times recognition on uniform random graphs and random interval graphs,
//! checking each verdict afterwards.
//!
//! `cargo run --release --example large_random -- 100 150 0.5`

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scoco::oracle::{random_graph, random_interval_graph};
use scoco::{recognize, verify_certificate, verify_scc_ordering};

fn main() -> scoco::Result<()> {
    let sizes: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let sizes = if sizes.is_empty() { vec![50, 100, 150] } else { sizes };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let graphs = sizes
        .iter()
        .flat_map(|&n| {
            [
                ("uniform", random_graph(n, &mut rng)),
                ("interval", random_interval_graph(n, &mut rng)),
            ]
        })
        .collect::<Vec<_>>();
    for (kind, g) in graphs {
        let n = g.n();
        let t = Instant::now();
        let verdict = recognize(&g)?;
        let took = t.elapsed();
        let checked = match (verdict.ordering(), verdict.certificate()) {
            (Some(o), _) => verify_scc_ordering(&g, o)?.is_valid(),
            (_, Some(c)) => verify_certificate(&g, c),
            _ => unreachable!(),
        };
        println!(
            "{kind:8} n = {n:4}  edges = {:6}  member = {:5}  verified = {checked}  {:.3}s",
            g.edge_count(),
            verdict.is_member(),
            took.as_secs_f64()
        );
    }
    Ok(())
}
