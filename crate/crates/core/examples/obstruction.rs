//! The characteristic class chi(S) in H^3(G, Z(N)) for every kernel G -> Out(N) on a few small pairs.

use std::sync::Arc;

use extkit::catalog::named;
use extkit::group::OuterClassTable;
use extkit::kernel::{all_kernels, characteristic_class};

fn main() -> extkit::Result<()> {
    for (g, n) in [("C2", "Q8"), ("V4", "Q8"), ("C2", "D4"), ("C3", "C2xC2xC2")] {
        let (gg, ng) = (named(g)?, named(n)?);
        let table = Arc::new(OuterClassTable::new(&ng, 64)?);
        let kernels = all_kernels(&gg, &table)?;
        let mut obstructed = 0;
        for k in &kernels {
            if !characteristic_class(k)?.class.is_zero() {
                obstructed += 1;
            }
        }
        let last = characteristic_class(&kernels[kernels.len() - 1])?;
        println!(
            "({g}, {n}): {} kernels, {obstructed} obstructed; last kernel {:?} has H^3 invariants {:?}",
            kernels.len(),
            kernels[kernels.len() - 1].classes(),
            last.h3.invariants()
        );
    }
    Ok(())
}
