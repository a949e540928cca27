//! The gauge group as units of the monoid of crossed homomorphisms G^ -> N.

use extkit::autext::gauge_group;
use extkit::catalog::named;
use extkit::cochain::Cochain;
use extkit::factor::{build_extension, FactorSystem, OuterActionLift};
use extkit::io::resolve_action;
use extkit::nonabelian::DEFAULT_BUDGET;

fn main() -> extkit::Result<()> {
    let (g, n) = (named("C2")?, named("C4")?);
    for (label, w) in [("D4", 0), ("Q8", 2)] {
        let lift = OuterActionLift::new(&g, &n, resolve_action("inversion", &g, &n)?)?;
        let ext = build_extension(&FactorSystem::new(lift, Cochain::from_fn(2, 2, |_| w))?)?;
        let gau = gauge_group(&ext, 64, DEFAULT_BUDGET)?;
        println!("{label}: monoid of size {}, {} units", gau.monoid_size, gau.order());
    }
    Ok(())
}
