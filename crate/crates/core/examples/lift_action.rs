//! Lifting a C2-action on (N, G) to an action on the extension, or reporting the obstruction.

use extkit::autext::{compatible_pairs, lift_group_action, LiftedAction, WellsContext};
use extkit::catalog::named;
use extkit::cochain::Cochain;
use extkit::factor::{build_extension, FactorSystem, OuterActionLift};
use extkit::group::Automorphism;
use extkit::io::resolve_action;
use extkit::nonabelian::DEFAULT_BUDGET;

fn main() -> extkit::Result<()> {
    let (g, n, c2) = (named("C2")?, named("C4")?, named("C2")?);
    let lift = OuterActionLift::new(&g, &n, resolve_action("inversion", &g, &n)?)?;
    let fs = FactorSystem::new(lift, Cochain::from_fn(2, 2, |_| 2))?;
    let ext = build_extension(&fs)?;
    let ctx = WellsContext::new(&fs)?;
    for p in compatible_pairs(&fs, 64)? {
        let sq = p.compose(&p, &fs);
        if !sq.phi.is_identity() || !sq.psi.is_identity() || !ctx.wells_class(&p)?.is_zero() {
            continue;
        }
        let pairs = vec![(Automorphism::identity(4), Automorphism::identity(2)), (p.phi.clone(), p.psi.clone())];
        match lift_group_action(&ext, &c2, &pairs, DEFAULT_BUDGET)? {
            LiftedAction::Lifted { action, .. } => println!("phi {:?}: lifts to {:?}", p.phi.forward(), action[1].forward()),
            LiftedAction::Obstructed { invariants, coords } => {
                println!("phi {:?}: obstructed, class {coords:?} in {invariants:?}", p.phi.forward())
            }
        }
    }
    Ok(())
}
