//! Exhaustive search for orderings avoiding arbitrary pattern sets, compared
//! with the polynomial recognizers.

use scoco::{brute_force_ordering, families, is_chordal, is_strongly_chordal, OracleQuery, PatternKind};

fn main() -> scoco::Result<()> {
    let graphs = [
        ("P5", families::path(5)),
        ("C4", families::cycle(4)),
        ("C5", families::cycle(5)),
        ("3-sun", families::sun(3)),
        ("K1,3", families::star(3)),
    ];
    let sets: [&[PatternKind]; 4] = [
        &[PatternKind::Slash],
        &[PatternKind::PrincipalGamma],
        &[PatternKind::Gamma],
        &[PatternKind::Gamma, PatternKind::Slash],
    ];
    for (name, g) in &graphs {
        println!(
            "{name}  chordal {}  strongly chordal {}",
            is_chordal(g)?.is_chordal(),
            is_strongly_chordal(g)?
        );
        for set in sets {
            let q = OracleQuery::new(g.clone(), set.iter().copied())?;
            let names: Vec<_> = set.iter().map(|k| k.name()).collect();
            match brute_force_ordering(&q)? {
                Some(o) => println!("  avoid {:14} {:?}", names.join("+"), o.as_slice()),
                None => println!("  avoid {:14} impossible", names.join("+")),
            }
        }
    }
    Ok(())
}
