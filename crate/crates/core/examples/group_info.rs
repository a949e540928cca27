//! Center, automorphisms and outer classes of a few catalog groups.

use extkit::catalog::{identify, named};
use extkit::group::OuterClassTable;

fn main() -> extkit::Result<()> {
    for name in ["S3", "D4", "Q8", "C2xC4"] {
        let g = named(name)?;
        let table = OuterClassTable::new(&g, 64)?;
        let (quotient, _) = g.quotient(&g.center())?;
        println!(
            "{name}: order {}, |Z| = {}, |Aut| = {}, |Inn| = {}, |Out| = {}, G/Z = {}",
            g.order(),
            g.center().order(),
            table.automorphisms().len(),
            table.inner_indices().len(),
            table.num_classes(),
            identify(&quotient).unwrap_or_else(|| "?".into()),
        );
    }
    Ok(())
}
