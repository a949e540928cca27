//! Aut(G^, N), compatible pairs and Wells classes for the quaternion group over C4.

use extkit::autext::{aut_preserving, compatible_pairs, WellsContext};
use extkit::catalog::named;
use extkit::cochain::Cochain;
use extkit::factor::{build_extension, FactorSystem, OuterActionLift};
use extkit::io::resolve_action;
use extkit::nonabelian::DEFAULT_BUDGET;

fn main() -> extkit::Result<()> {
    let (g, n) = (named("C2")?, named("C4")?);
    for (label, w) in [("D4", 0), ("Q8", 2)] {
        let lift = OuterActionLift::new(&g, &n, resolve_action("inversion", &g, &n)?)?;
        let fs = FactorSystem::new(lift, Cochain::from_fn(2, 2, |_| w))?;
        let ext = build_extension(&fs)?;
        let auts = aut_preserving(&ext, 64, DEFAULT_BUDGET)?;
        let ctx = WellsContext::new(&fs)?;
        let pairs = compatible_pairs(&fs, 64)?;
        let mut liftable = 0;
        for p in &pairs {
            let class = ctx.wells_class(p)?;
            if class.is_zero() {
                liftable += 1;
                assert!(ctx.lift_pair(&ext, p)?.is_some());
            }
        }
        println!(
            "{label}: |Aut(G^, N)| = {}, |Comp(S)| = {}, Wells-trivial pairs {liftable}, |Z^1(G, Z(N))| = {}",
            auts.len(),
            pairs.len(),
            ctx.central_cocycles(DEFAULT_BUDGET)?.len()
        );
    }
    Ok(())
}
