//! Reduce the Q8-extensions of C2 over an outer involution to Z(Q8)-extensions of G^S.

use std::sync::Arc;

use extkit::catalog::{identify, named};
use extkit::factor::OuterActionLift;
use extkit::group::{Automorphism, OuterClassTable};
use extkit::gs::{build_gs, reduce_to_abelian};
use extkit::kernel::{classify, kernel_of_lift};

fn main() -> extkit::Result<()> {
    let (g, n) = (named("C2")?, named("Q8")?);
    let table = Arc::new(OuterClassTable::new(&n, 64)?);
    let c = (1..table.num_classes()).find(|&c| table.class_mul(c, c) == 0).expect("Out(Q8) has involutions");
    let lift = OuterActionLift::new(&g, &n, vec![Automorphism::identity(8), table.representative(c).clone()])?;
    let kernel = kernel_of_lift(&table, lift)?;
    let gs = build_gs(&kernel)?;
    println!("G^S has order {} ({})", gs.group().order(), identify(gs.group()).unwrap_or_default());
    let cls = classify(&kernel)?;
    for i in 0..cls.classes.len() {
        let ext = cls.extension(i)?;
        let red = reduce_to_abelian(&ext, &gs)?;
        println!(
            "class {i}: total of order {} ({}) is a Z(N)-extension of G^S, rebuilt total {}",
            ext.total().order(),
            identify(ext.total()).unwrap_or_else(|| "not in catalog".into()),
            identify(red.ext.total()).unwrap_or_else(|| "not in catalog".into())
        );
    }
    Ok(())
}
