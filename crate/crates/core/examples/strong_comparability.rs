//! Strong comparability graphs are the complements of strong cocomparability
//! graphs; their orderings avoid the identity submatrix I2.

use scoco::{
    classes::is_comparability, families, scan, strong_comparability_recognize, DiagonalMode, Graph, PatternKind,
};

fn main() -> scoco::Result<()> {
    let cases = [
        ("C4", families::cycle(4).with_mode(DiagonalMode::Irreflexive)),
        ("C6", families::cycle(6).with_mode(DiagonalMode::Irreflexive)),
        (
            "2K2",
            Graph::from_edges(4, DiagonalMode::Irreflexive, [(0, 1), (2, 3)])?,
        ),
        ("complement of C5", families::cycle(5).complement()),
    ];
    for (name, g) in cases {
        let verdict = strong_comparability_recognize(&g)?;
        print!(
            "{name:18} comparability: {:5}  strong: {:5}",
            is_comparability(&g)?,
            verdict.is_member()
        );
        if let Some(o) = verdict.ordering() {
            print!(
                "  ordering {:?}, I2 present: {}",
                o.as_slice(),
                scan(&g, o, PatternKind::I2)?.is_some()
            );
        }
        println!();
    }
    Ok(())
}
