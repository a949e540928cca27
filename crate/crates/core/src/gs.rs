//! The group G^S, an extension of G by N_ad = N/Z(N), and the reduction of N-extensions of G
//! to Z(N)-extensions of G^S.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::Cochain;
use crate::crossmod::{validate_crossed_module, CrossedModule};
use crate::error::{Error, Result};
use crate::factor::{build_extension, equivalent, read_factor_system, ExtensionGroup, FactorSystem, OuterActionLift};
use crate::group::{Automorphism, Group, GroupMap};
use crate::kernel::{adjoint_action, choose_omega, GKernel};

#[derive(Clone, Debug)]
pub struct GsGroup {
    /// G^S as an extension of G by N_ad, elements (C_N(n), g).
    pub ext: ExtensionGroup,
    /// rho(C_N(n), g) = C_N(n) o S(g).
    pub rho: Vec<Automorphism>,
    /// n -> (C_N(n), 1) with G^S acting through rho.
    pub crossed: CrossedModule,
    /// N -> N_ad.
    pub q: GroupMap,
    lift: OuterActionLift,
}

impl GsGroup {
    pub fn group(&self) -> &Group {
        self.ext.total()
    }

    pub fn lift(&self) -> &OuterActionLift {
        &self.lift
    }
}

fn gs_factor_system(lift: &OuterActionLift) -> Result<(FactorSystem, GroupMap)> {
    let n = lift.n();
    let (nad, s_ad) = adjoint_action(lift)?;
    let (_, q) = n.quotient(&n.center())?;
    let omega = choose_omega(lift)?.map_values(|w| q.apply(w));
    let lift_ad = OuterActionLift::new(lift.g(), &nad, s_ad)?;
    Ok((FactorSystem::new(lift_ad, omega)?, q))
}

pub fn build_gs(k: &GKernel) -> Result<GsGroup> {
    let lift = k.lift();
    let n = k.n();
    let (fs, q) = gs_factor_system(lift)?;
    let ext = build_extension(&fs)?;
    let nad = fs.n();
    let reps: Vec<usize> = nad.elements().map(|a| n.elements().find(|&x| q.apply(x) == a).unwrap()).collect();
    let rho: Vec<Automorphism> = ext
        .total()
        .elements()
        .map(|x| {
            let (a, g) = ext.pair(x);
            n.inner(reps[a]).compose(lift.s(g))
        })
        .collect();
    crate::nonabelian::check_action(ext.total(), n, &rho).expect("rho is a homomorphism");
    let alpha = GroupMap { image: n.elements().map(|x| ext.flat(q.apply(x), 0)).collect() };
    let crossed = CrossedModule { h: n.clone(), g: ext.total().clone(), alpha, action: rho.clone() };
    assert!(validate_crossed_module(&crossed).is_valid(), "N -> G^S is a crossed module");

    // the class of G^S depends only on [S]
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let h = Cochain::from_fn(1, k.g().order(), |_| rng.gen_range(0..n.order()));
    let (other, _) = gs_factor_system(&lift.twist(&h))?;
    assert!(equivalent(&fs, &other)?.is_some(), "G^S depends only on [S]");

    Ok(GsGroup { ext, rho, crossed, q, lift: lift.clone() })
}

/// gamma(n, g) = (C_N(n), g) exhibits an N-extension as a Z(N)-extension of G^S.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub ext: ExtensionGroup,
    pub gamma: GroupMap,
}

pub fn reduce_to_abelian(ext: &ExtensionGroup, gs: &GsGroup) -> Result<Reduction> {
    let red = reduce_unchecked(ext, gs)?;
    // equivalent N-extensions reduce to equivalent Z(N)-extensions
    let fs = ext.factor_system();
    let z = fs.lift().center();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let c = Cochain::from_fn(1, fs.g().order(), |_| z.embed(rng.gen_range(0..z.order())));
    let moved = build_extension(&crate::factor::c1_act(&c, fs))?;
    let other = reduce_unchecked(&moved, gs)?;
    assert!(
        equivalent(red.ext.factor_system(), other.ext.factor_system())?.is_some(),
        "reduction respects equivalence"
    );
    Ok(red)
}

fn reduce_unchecked(ext: &ExtensionGroup, gs: &GsGroup) -> Result<Reduction> {
    let fs = ext.factor_system();
    if fs.lift() != &gs.lift {
        return Err(Error::KernelMismatch("extension does not use the lift of G^S".into()));
    }
    let n = fs.n();
    let z = fs.lift().center();
    let total = gs.ext.total();
    let gamma = GroupMap {
        image: ext
            .total()
            .elements()
            .map(|x| {
                let (a, g) = ext.pair(x);
                gs.ext.flat(gs.q.apply(a), g)
            })
            .collect(),
    };
    gamma.check_homomorphism(ext.total(), total)?;
    let nad = gs.ext.n();
    let reps: Vec<usize> = nad.elements().map(|a| n.elements().find(|&x| gs.q.apply(x) == a).unwrap()).collect();
    let section: Vec<usize> = total
        .elements()
        .map(|x| {
            let (a, g) = gs.ext.pair(x);
            ext.flat(reps[a], g)
        })
        .collect();
    let iota: Vec<usize> = z.group().elements().map(|c| ext.flat(z.embed(c), 0)).collect();
    let read = read_factor_system(ext.total(), &iota, &gamma, &section, total, z.group())?;
    Ok(Reduction { ext: build_extension(&read)?, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named;
    use crate::crossmod::{decompose, obstruction_q};
    use crate::group::OuterClassTable;
    use crate::kernel::{all_kernels, characteristic_class, classify};
    use std::sync::Arc;

    #[test]
    fn bridge_on_small_kernels() {
        for (g, n) in [("C2", "Q8"), ("C2", "C4"), ("V4", "D4"), ("C2", "S3")] {
            let (g, n) = (named(g).unwrap(), named(n).unwrap());
            let table = Arc::new(OuterClassTable::new(&n, 128).unwrap());
            for k in all_kernels(&g, &table).unwrap() {
                let gs = build_gs(&k).unwrap();
                let d = decompose(&gs.crossed).unwrap();
                let q = obstruction_q(&d.data).unwrap();
                let chi = characteristic_class(&k).unwrap();
                assert_eq!(q.class.coords, chi.class.coords);
                assert_eq!(q.class.invariants, chi.class.invariants);
                if let Some(first) = classify(&k).unwrap().classes.first() {
                    let e = build_extension(&first.fs).unwrap();
                    let r = reduce_to_abelian(&e, &gs).unwrap();
                    assert_eq!(r.ext.total().order(), e.total().order());
                }
            }
        }
    }
}
