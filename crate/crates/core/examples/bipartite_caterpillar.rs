//! Builds a replicated caterpillar, recovers a Slash-free ordering from its
//! structure, and shows the forbidden subgraphs S and T being caught.

use scoco::classes::{bipartite_scc_check, caterpillar_ordering, generate_replicated_caterpillar, CaterpillarPlan};
use scoco::{families, format::serialize, verify_scc_ordering, GraphFormat};

fn main() -> scoco::Result<()> {
    // Spine of eight with leaves on three spine vertices and three replicated ones.
    let plan = CaterpillarPlan::from_counts(8, &[3, 0, 0, 1, 0, 3, 0, 0], &[(1, 2), (4, 3), (6, 1)])?;
    let g = generate_replicated_caterpillar(&plan)?;
    println!("{} vertices, {} edges", g.n(), g.edge_count());
    print!("{}", serialize(&g, GraphFormat::EdgeList));

    println!("structural check: {:?}", bipartite_scc_check(&g)?);
    let order = caterpillar_ordering(&g)?;
    println!("ordering {:?}", order.as_slice());
    println!("verified: {}", verify_scc_ordering(&g, &order)?.is_valid());

    for (name, h) in [
        ("S", families::s_graph()),
        ("T", families::t_graph()),
        ("C6", families::cycle(6)),
    ] {
        println!("{name}: {:?}", bipartite_scc_check(&h)?);
    }

    let bad = CaterpillarPlan::from_counts(5, &[], &[(1, 1), (2, 1)])?;
    println!(
        "consecutive shadows: {}",
        generate_replicated_caterpillar(&bad).unwrap_err()
    );
    Ok(())
}
