//! Every extension of C2 by C4 over the inversion kernel, with the total groups named.

use std::sync::Arc;

use extkit::catalog::{identify, named};
use extkit::factor::{is_split, OuterActionLift};
use extkit::group::OuterClassTable;
use extkit::io::resolve_action;
use extkit::kernel::{classify, kernel_of_lift};
use extkit::nonabelian::DEFAULT_BUDGET;

fn main() -> extkit::Result<()> {
    for (g, n, s) in [("C2", "C4", "inversion"), ("C2", "C2", "trivial"), ("V4", "C2", "central")] {
        let (gg, ng) = (named(g)?, named(n)?);
        let lift = OuterActionLift::new(&gg, &ng, resolve_action(s, &gg, &ng)?)?;
        let kernel = kernel_of_lift(&Arc::new(OuterClassTable::new(&ng, 64)?), lift)?;
        let cls = classify(&kernel)?;
        println!("({g}, {n}, {s}): {} classes, H^2 invariants {:?}", cls.classes.len(), cls.h2.as_ref().unwrap().invariants());
        for (i, c) in cls.classes.iter().enumerate() {
            let total = cls.extension(i)?;
            let split = is_split(&c.fs, DEFAULT_BUDGET)?.is_some();
            println!("  class {i} at {:?}: {} (split: {split})", c.coords, identify(total.total()).unwrap_or_default());
        }
    }
    Ok(())
}
