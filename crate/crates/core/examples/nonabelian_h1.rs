//! Crossed homomorphisms, the pointed set H^1(G, N) and the seven-term prefix.

use extkit::catalog::named;
use extkit::group::Automorphism;
use extkit::io::resolve_action;
use extkit::nonabelian::{crossed_homomorphisms, h1_pointed, seven_term_prefix, DEFAULT_BUDGET};

fn main() -> extkit::Result<()> {
    let (g, n) = (named("C2")?, named("C4")?);
    let s = resolve_action("inversion", &g, &n)?;
    let z1 = crossed_homomorphisms(&g, &n, &s, DEFAULT_BUDGET)?;
    println!("C2 on C4 by inversion: |Z^1| = {}, |H^1| = {}", z1.len(), h1_pointed(&g, &n, &s, DEFAULT_BUDGET)?.len());

    let q8 = named("Q8")?;
    let conj = q8.inner(2);
    let s = vec![Automorphism::identity(8), conj];
    let seven = seven_term_prefix(&g, &q8, &s, DEFAULT_BUDGET)?;
    println!(
        "C2 on Q8 by an inner involution: |N^G| = {}, |N_ad^G| = {}, H^1(G, Z(N)) {:?}, exact {}",
        seven.fixed.len(),
        seven.adjoint_fixed.len(),
        seven.h1_center,
        seven.is_exact()
    );
    Ok(())
}
