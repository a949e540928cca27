//! Twisting an extension by an abelian one, compared with adding cohomology classes.

use std::sync::Arc;

use extkit::catalog::{identify, named};
use extkit::factor::{build_extension, FactorSystem, OuterActionLift};
use extkit::group::OuterClassTable;
use extkit::io::resolve_action;
use extkit::kernel::{baer_product, classify, kernel_of_lift, torsor_act};

fn main() -> extkit::Result<()> {
    let (g, n) = (named("C2")?, named("C4")?);
    let s = resolve_action("inversion", &g, &n)?;
    let cls = classify(&kernel_of_lift(&Arc::new(OuterClassTable::new(&n, 64)?), OuterActionLift::new(&g, &n, s.clone())?)?)?;
    let h2 = cls.h2.clone().unwrap();
    for beta in h2.all_coords() {
        // the abelian extension of G by Z(N) = N with class beta
        let abelian = FactorSystem::new(OuterActionLift::new(&g, &n, s.clone())?, h2.cocycle(&beta))?;
        let abelian = build_extension(&abelian)?;
        for i in 0..cls.classes.len() {
            let product = baer_product(&abelian, &cls.extension(i)?)?;
            let j = cls.class_of(product.factor_system())?;
            let k = torsor_act(&cls, &h2.class_of(&h2.cocycle(&beta))?, i)?;
            println!(
                "beta {beta:?} * {} = {} (torsor action gives class {k}, Baer product class {j})",
                identify(cls.extension(i)?.total()).unwrap_or_default(),
                identify(product.total()).unwrap_or_default()
            );
        }
    }
    Ok(())
}
