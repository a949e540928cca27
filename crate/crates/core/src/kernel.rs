//! G-kernels s: G -> Out(N), the characteristic class chi(S) and the classification of
//! extensions of type s as an H^2(G, Z(N))-torsor.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::Cochain;
use crate::cohomology::{CoboundarySolver, Cohomology, CohomologyClass};
use crate::error::{Error, Result};
use crate::factor::{
    build_extension, c1_act, equivalent_in, inner_witness, read_factor_system, Center, ExtensionGroup, FactorSystem,
    OuterActionLift,
};
use crate::group::{homomorphisms_to_out, Automorphism, Group, OuterClassTable};

/// A homomorphism s: G -> Out(N) together with its canonical lift.
#[derive(Clone, Debug)]
pub struct GKernel {
    table: Arc<OuterClassTable>,
    classes: Vec<usize>,
    lift: OuterActionLift,
}

impl GKernel {
    pub fn g(&self) -> &Group {
        self.lift.g()
    }

    pub fn n(&self) -> &Group {
        self.lift.n()
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn lift(&self) -> &OuterActionLift {
        &self.lift
    }

    pub fn table(&self) -> &Arc<OuterClassTable> {
        &self.table
    }

    /// The same kernel with another lift of s.
    pub fn with_lift(&self, lift: OuterActionLift) -> Result<Self> {
        let classes = class_assignment(&self.table, &lift)?;
        if classes != self.classes {
            return Err(Error::KernelMismatch("lift induces a different outer action".into()));
        }
        Ok(GKernel { table: self.table.clone(), classes, lift })
    }

    pub fn is_trivial(&self) -> bool {
        self.classes.iter().all(|&c| c == 0)
    }
}

fn class_assignment(table: &OuterClassTable, lift: &OuterActionLift) -> Result<Vec<usize>> {
    lift.maps()
        .iter()
        .map(|a| table.class_of(a).ok_or_else(|| Error::MalformedTable("lift is not an automorphism of N".into())))
        .collect()
}

/// Kernel with S(g) the lexicographically smallest representative of s(g).
pub fn make_kernel(g: &Group, table: &Arc<OuterClassTable>, classes: Vec<usize>) -> Result<GKernel> {
    let n = table.group();
    if classes.len() != g.order() || classes.iter().any(|&c| c >= table.num_classes()) {
        return Err(Error::MalformedTable("class assignment has the wrong shape".into()));
    }
    if classes[0] != 0 {
        return Err(Error::NotAHomomorphismOnClasses { a: 0, b: 0 });
    }
    for a in g.elements() {
        for b in g.elements() {
            if table.class_mul(classes[a], classes[b]) != classes[g.mul(a, b)] {
                return Err(Error::NotAHomomorphismOnClasses { a, b });
            }
        }
    }
    let s = classes.iter().map(|&c| table.representative(c).clone()).collect();
    let lift = OuterActionLift::new(g, n, s)?;
    Ok(GKernel { table: table.clone(), classes, lift })
}

/// Kernel induced by an arbitrary lift.
pub fn kernel_of_lift(table: &Arc<OuterClassTable>, lift: OuterActionLift) -> Result<GKernel> {
    let classes = class_assignment(table, &lift)?;
    Ok(GKernel { table: table.clone(), classes, lift })
}

/// Every kernel G -> Out(N), in the order of homomorphism enumeration.
pub fn all_kernels(g: &Group, table: &Arc<OuterClassTable>) -> Result<Vec<GKernel>> {
    homomorphisms_to_out(g, table).into_iter().map(|h| make_kernel(g, table, h.image)).collect()
}

/// omega(g, g') = smallest n with c_n = delta_S(g, g').
pub fn choose_omega(lift: &OuterActionLift) -> Result<Cochain> {
    let mut omega = Cochain::zero(2, lift.g().order());
    for t in crate::cochain::tuples(2, lift.g().order()) {
        let w = inner_witness(lift.n(), &lift.delta(t[0], t[1])).ok_or(Error::NotInner { g: t[0], h: t[1] })?;
        omega.set(&t, w);
    }
    Ok(omega)
}

/// chi(S) with the data needed to reuse it.
#[derive(Clone, Debug)]
pub struct Obstruction {
    pub h3: Cohomology,
    pub class: CohomologyClass,
    pub omega: Cochain,
}

pub fn characteristic_class(k: &GKernel) -> Result<Obstruction> {
    characteristic_class_seeded(k, 0)
}

/// chi(S); the result is recomputed with a perturbed omega and a perturbed lift and asserted equal.
pub fn characteristic_class_seeded(k: &GKernel, seed: u64) -> Result<Obstruction> {
    let lift = k.lift();
    let omega = choose_omega(lift)?;
    let fs = FactorSystem::new(lift.clone(), omega.clone())?;
    let m = lift.center_module();
    let h3 = Cohomology::new(&m, 3)?;
    let class = h3.class_of(&crate::factor::d_s_omega(&fs)?)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (g, n) = (k.g(), k.n());
    let z = lift.center();
    let zc = Cochain::from_fn(2, g.order(), |_| z.embed(rng.gen_range(0..z.order())));
    let other = FactorSystem::new(lift.clone(), omega.pointwise(&zc, n))?;
    assert_eq!(h3.coords(&crate::factor::d_s_omega(&other)?)?, class.coords, "chi is independent of omega");
    let h = Cochain::from_fn(1, g.order(), |_| rng.gen_range(0..n.order()));
    let moved = lift.twist(&h);
    let fs2 = FactorSystem::new(moved.clone(), choose_omega(&moved)?)?;
    assert_eq!(h3.coords(&crate::factor::d_s_omega(&fs2)?)?, class.coords, "chi depends only on [S]");
    Ok(Obstruction { h3, class, omega })
}

/// One extension class: torsor coordinates relative to the base and a factor system.
#[derive(Clone, Debug)]
pub struct ExtClass {
    pub coords: Vec<i64>,
    pub fs: FactorSystem,
}

#[derive(Clone, Debug)]
pub struct ExtClassification {
    pub kernel: GKernel,
    pub obstruction: Obstruction,
    pub h2: Option<Cohomology>,
    pub base: Option<FactorSystem>,
    pub classes: Vec<ExtClass>,
}

impl ExtClassification {
    pub fn is_obstructed(&self) -> bool {
        self.base.is_none()
    }

    fn h2(&self) -> Result<&Cohomology> {
        self.h2.as_ref().ok_or_else(|| Error::KernelMismatch("kernel is obstructed".into()))
    }

    pub fn index_of_coords(&self, coords: &[i64]) -> Option<usize> {
        self.classes.iter().position(|c| c.coords == coords)
    }

    /// Index of the class of an arbitrary factor system whose lift lies over this kernel.
    pub fn class_of(&self, fs: &FactorSystem) -> Result<usize> {
        let h2 = self.h2()?;
        let base = self.base.as_ref().unwrap();
        if !base.same_groups(fs) {
            return Err(Error::KernelMismatch("factor system lives on different groups".into()));
        }
        if let Some((a, b, c)) = fs.first_violation() {
            return Err(Error::NotACocycle(a, b, c));
        }
        let (g, n) = (fs.g(), fs.n());
        let mut h0 = Cochain::zero(1, g.order());
        for x in g.elements().skip(1) {
            let w = inner_witness(n, &base.s(x).compose(&fs.s(x).inverse()))
                .ok_or_else(|| Error::KernelMismatch("lift lies over a different kernel".into()))?;
            h0.set(&[x], w);
        }
        let moved = c1_act(&h0, fs);
        let z = base.lift().center();
        let diff = Cochain::from_fn(2, g.order(), |t| n.mul(moved.w(t[0], t[1]), n.inv(base.w(t[0], t[1]))));
        let diff = z.from_n(&diff).expect("central once the lifts agree");
        let coords = h2.coords(&diff)?;
        Ok(self.index_of_coords(&coords).expect("every coordinate vector is listed"))
    }

    pub fn extension(&self, i: usize) -> Result<ExtensionGroup> {
        build_extension(&self.classes[i].fs)
    }
}

/// Above this many classes, pairwise inequivalence is checked on coordinates only.
const PAIRWISE_LIMIT: usize = 64;

pub fn classify(k: &GKernel) -> Result<ExtClassification> {
    let obstruction = characteristic_class(k)?;
    if !obstruction.class.is_zero() {
        return Ok(ExtClassification { kernel: k.clone(), obstruction, h2: None, base: None, classes: Vec::new() });
    }
    let lift = k.lift();
    let n = k.n();
    let z = lift.center();
    let m = lift.center_module();
    let fs0 = FactorSystem::new(lift.clone(), obstruction.omega.clone())?;
    let d = crate::factor::d_s_omega(&fs0)?;
    let beta = obstruction.h3.preimage(&m.neg_cochain(&d)).expect("chi = 0");
    let base = FactorSystem::new(lift.clone(), obstruction.omega.pointwise(&z.to_n(&beta), n))?;
    assert!(base.is_cocycle());
    let h2 = Cohomology::new(&m, 2)?;
    let classes: Vec<ExtClass> = h2
        .all_coords()
        .into_iter()
        .map(|coords| {
            let w = base.omega().pointwise(&z.to_n(&h2.cocycle(&coords)), n);
            ExtClass { coords, fs: FactorSystem::new(lift.clone(), w).expect("central twist keeps compatibility") }
        })
        .collect();
    if classes.len() <= PAIRWISE_LIMIT {
        let solver = CoboundarySolver::new(&m, 2)?;
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                assert!(equivalent_in(&classes[i].fs, &classes[j].fs, &solver)?.is_none(), "classes {i} and {j} coincide");
            }
        }
    }
    Ok(ExtClassification { kernel: k.clone(), obstruction, h2: Some(h2), base: Some(base), classes })
}

/// beta.[ext_i] as a class index.
pub fn torsor_act(cls: &ExtClassification, beta: &CohomologyClass, i: usize) -> Result<usize> {
    let h2 = cls.h2()?;
    if beta.degree != 2 || beta.invariants != h2.invariants() {
        return Err(Error::KernelMismatch("class lies in a different H^2".into()));
    }
    let fs = &cls.classes[i].fs;
    let z = fs.lift().center();
    let moved = FactorSystem::new(fs.lift().clone(), fs.omega().pointwise(&z.to_n(&beta.representative), fs.n()))?;
    let j = cls.class_of(&moved)?;
    debug_assert_eq!(cls.classes[j].coords, h2.add_coords(&cls.classes[i].coords, &beta.coords));
    Ok(j)
}

/// The Baer product of an extension of G by Z(N) with an extension of G by N.
pub fn baer_product(abelian: &ExtensionGroup, ext: &ExtensionGroup) -> Result<ExtensionGroup> {
    let fs = ext.factor_system();
    let fa = abelian.factor_system();
    let (g, n) = (fs.g(), fs.n());
    let z = fs.lift().center();
    if fa.g() != g {
        return Err(Error::ModuleMismatch("extensions of different groups".into()));
    }
    if fa.n() != z.group() || g.elements().any(|x| fa.s(x) != &z.restrict(fs.s(x))) {
        return Err(Error::ModuleMismatch("kernel is not Z(N) with the induced action".into()));
    }
    let (e1, e2) = (abelian.total(), ext.total());
    let prod = e1.direct_product(e2);
    let k1 = e1.order();
    let flat = |x1: usize, x2: usize| x1 + k1 * x2;
    let fiber: Vec<usize> = e2
        .elements()
        .flat_map(|x2| e1.elements().filter(move |&x1| abelian.proj(x1) == ext.proj(x2)).map(move |x1| flat(x1, x2)))
        .collect();
    let fiber = prod.subgroup(&fiber);
    let (p, embed) = prod.restrict(&fiber);
    let pos = |x: usize| fiber.position(x).expect("in the fiber product");
    let anti: Vec<usize> = z
        .group()
        .elements()
        .map(|c| pos(flat(abelian.iota(c), ext.iota(n.inv(z.embed(c))))))
        .collect();
    let (q, to_q) = p.quotient(&p.subgroup(&anti))?;
    let iota: Vec<usize> = n.elements().map(|m| to_q.apply(pos(flat(0, ext.iota(m))))).collect();
    let mut proj = crate::group::GroupMap { image: vec![0; q.order()] };
    for (i, &x) in embed.iter().enumerate() {
        proj.image[to_q.apply(i)] = ext.proj(x / k1);
    }
    let section: Vec<usize> =
        g.elements().map(|x| to_q.apply(pos(flat(abelian.section(x), ext.section(x))))).collect();
    let read = read_factor_system(&q, &iota, &proj, &section, g, n)?;
    let expected = fs.omega().pointwise(&z.to_n(fa.omega()), n);
    assert_eq!(read.lift(), fs.lift(), "Baer product keeps the lift");
    assert_eq!(read.omega(), &expected, "Baer product multiplies the factor systems");
    build_extension(&read)
}

/// delta([f]) = [d_S f^] for f in Z^1(G, N_ad) and a pointwise lift f^.
pub fn connecting_delta(k: &GKernel, f: &Cochain) -> Result<CohomologyClass> {
    let lift = k.lift();
    if !lift.is_homomorphism() {
        return Err(Error::NotAHomomorphism { a: 0, b: 0 });
    }
    let (g, n) = (k.g(), k.n());
    let z = lift.center();
    let (nad, q) = n.quotient(&n.center())?;
    let preimages = |y: usize| n.elements().filter(|&x| q.apply(x) == y).collect::<Vec<_>>();
    let first: Vec<usize> = nad.elements().map(|y| preimages(y)[0]).collect();
    let last: Vec<usize> = nad.elements().map(|y| *preimages(y).last().unwrap()).collect();
    let m = lift.center_module();
    let h2 = Cohomology::new(&m, 2)?;
    let mut coords = None;
    let mut rep = None;
    for pick in [&first, &last] {
        let fh = Cochain::from_fn(1, g.order(), |t| pick[f.get(t)]);
        let d = Cochain::from_fn(2, g.order(), |t| {
            let (a, b) = (t[0], t[1]);
            n.mul(n.mul(fh.get(&[a]), lift.s(a).apply(fh.get(&[b]))), n.inv(fh.get(&[g.mul(a, b)])))
        });
        let Some(dz) = z.from_n(&d) else {
            let t = crate::cochain::tuples(2, g.order()).find(|t| !z.contains(d.get(t))).unwrap();
            return Err(Error::NotACocycle(t[0], t[1], 0));
        };
        let c = h2.coords(&dz)?;
        if let Some(prev) = &coords {
            assert_eq!(prev, &c, "delta does not depend on the lift");
        } else {
            coords = Some(c);
            rep = Some(dz);
        }
    }
    Ok(CohomologyClass {
        degree: 2,
        invariants: h2.invariants().to_vec(),
        coords: coords.unwrap(),
        representative: rep.unwrap(),
    })
}

/// The automorphism S_ad(g) of N/Z(N) induced by a lift.
pub fn adjoint_action(lift: &OuterActionLift) -> Result<(Group, Vec<Automorphism>)> {
    let n = lift.n();
    let (nad, q) = n.quotient(&n.center())?;
    let reps: Vec<usize> = nad.elements().map(|y| n.elements().find(|&x| q.apply(x) == y).unwrap()).collect();
    let s = lift
        .maps()
        .iter()
        .map(|a| Automorphism::from_permutation(reps.iter().map(|&r| q.apply(a.apply(r))).collect()))
        .collect();
    Ok((nad, s))
}

/// Z(N) as its own group, for callers assembling abelian extensions.
pub fn center_of(k: &GKernel) -> Center {
    k.lift().center()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named;

    fn kernel(g: &str, n: &str, pick: impl Fn(&[GKernel]) -> GKernel) -> GKernel {
        let (g, n) = (named(g).unwrap(), named(n).unwrap());
        let table = Arc::new(OuterClassTable::new(&n, 128).unwrap());
        pick(&all_kernels(&g, &table).unwrap())
    }

    #[test]
    fn goldens() {
        let k = kernel("C2", "C2", |ks| ks[0].clone());
        assert_eq!(classify(&k).unwrap().classes.len(), 2);
        let k = kernel("C2", "C4", |ks| ks.iter().find(|k| !k.is_trivial()).unwrap().clone());
        let cls = classify(&k).unwrap();
        assert_eq!(cls.classes.len(), 2);
        let names: Vec<_> = (0..2).map(|i| crate::catalog::identify(cls.extension(i).unwrap().total()).unwrap()).collect();
        assert!(names.contains(&"D4".to_string()) && names.contains(&"Q8".to_string()));
        let k = kernel("V4", "C2", |ks| ks[0].clone());
        assert_eq!(classify(&k).unwrap().classes.len(), 8);
    }

    #[test]
    fn baer_with_split_is_identity() {
        let k = kernel("C2", "C4", |ks| ks.iter().find(|k| !k.is_trivial()).unwrap().clone());
        let cls = classify(&k).unwrap();
        let z = center_of(&k);
        let split = FactorSystem::split(OuterActionLift::from_action(k.g(), z.group(), k.lift().maps().iter().map(|a| z.restrict(a)).collect()).unwrap()).unwrap();
        let a = build_extension(&split).unwrap();
        for i in 0..2 {
            let b = baer_product(&a, &cls.extension(i).unwrap()).unwrap();
            assert_eq!(cls.class_of(b.factor_system()).unwrap(), i);
        }
    }
}
