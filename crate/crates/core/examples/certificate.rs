//! An invertible-pair certificate for the 5-cycle, checked step by step, and
//! what happens when one step is tampered with.

use scoco::{families, find_invertible_pair, forces, verify_certificate};

fn main() -> scoco::Result<()> {
    let c5 = families::cycle(5);
    let cert = find_invertible_pair(&c5)?.expect("C5 is not strong cocomparability");
    println!("pair {:?}", (cert.pair.u, cert.pair.v));
    for w in cert.walk.windows(2) {
        println!(
            "  ({},{}) forces ({},{}): {}",
            w[0].u,
            w[0].v,
            w[1].u,
            w[1].v,
            forces(&c5, w[0], w[1])?
        );
    }
    println!("certificate valid: {}", verify_certificate(&c5, &cert));

    let mut broken = cert.clone();
    let mid = broken.walk.len() / 2;
    broken.walk[mid] = broken.walk[mid].flipped();
    println!("tampered certificate valid: {}", verify_certificate(&c5, &broken));

    // The path on five vertices has no such pair.
    println!(
        "P5 has an invertible pair: {}",
        find_invertible_pair(&families::path(5))?.is_some()
    );
    Ok(())
}
