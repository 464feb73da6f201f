//! Three independent ways of deciding interval graphs, on a few small cases.

use scoco::{families, find_asteroidal_triple, interval_routes};

fn main() -> scoco::Result<()> {
    let cases = [
        ("P4", families::path(4)),
        ("C4", families::cycle(4)),
        ("3-sun", families::sun(3)),
        ("T", families::t_graph()),
        ("K5", families::complete(5)),
    ];
    for (name, g) in cases {
        let r = interval_routes(&g)?;
        println!(
            "{name:6} strongly chordal + strong cocomparability: {:5}  chordal without AT: {:5}  Gamma/Slash-free ordering: {:?}",
            r.strongly_chordal_and_scc, r.chordal_without_asteroidal_triple, r.gamma_slash_free_ordering
        );
        if let Some(t) = find_asteroidal_triple(&g)? {
            println!("       asteroidal triple {t:?}");
        }
    }
    Ok(())
}
