//! Crossed modules from ambient groups: decompose N -> G^S and enlarge it back.

use std::sync::Arc;

use extkit::catalog::named;
use extkit::crossmod::{decompose, enlarge, obstruction_q, validate_crossed_module};
use extkit::factor::OuterActionLift;
use extkit::group::{Automorphism, OuterClassTable};
use extkit::gs::build_gs;
use extkit::kernel::{characteristic_class, kernel_of_lift};

fn main() -> extkit::Result<()> {
    let (g, n) = (named("C2")?, named("Q8")?);
    let table = Arc::new(OuterClassTable::new(&n, 64)?);
    let c = (1..table.num_classes()).find(|&c| table.class_mul(c, c) == 0).expect("Out(Q8) has involutions");
    let lift = OuterActionLift::new(&g, &n, vec![Automorphism::identity(8), table.representative(c).clone()])?;
    let kernel = kernel_of_lift(&table, lift)?;
    let gs = build_gs(&kernel)?;
    let report = validate_crossed_module(&gs.crossed);
    println!("N -> G^S: |G^S| = {}, valid {}, |ker| = {}", gs.group().order(), report.is_valid(), report.kernel.len());
    for line in report.lines() {
        println!("  {line}");
    }
    let d = decompose(&gs.crossed)?;
    let q = obstruction_q(&d.data)?;
    println!("Q = {:?} in H^3 with invariants {:?}", q.class.coords, q.h3.invariants());
    println!("chi(S) = {:?}", characteristic_class(&kernel)?.class.coords);
    match enlarge(&d.data)? {
        Some(e) => println!("enlarged to a group of order {}", e.ext.total().order()),
        None => println!("no enlargement"),
    }
    Ok(())
}
