//! Automorphisms of an extension N -> G^ -> G that preserve N: compatible pairs, the Wells class,
//! the gauge group, and lifting group actions to the extension.
//!
//! An automorphism nu preserving N has the normal form nu(n, g) = (phi(n) h(psi(g)), psi(g)).

use std::collections::HashMap;

use crate::cochain::Cochain;
use crate::cohomology::{CoboundarySolver, Cohomology, CohomologyClass};
use crate::error::{Error, Result};
use crate::factor::{c1_act, c1_mul, inner_witness, ExtensionGroup, FactorSystem, OuterActionLift};
use crate::group::{automorphism_group, Automorphism, Group};
use crate::module::CoefficientModule;
use crate::nonabelian::crossed_homomorphisms;

/// (phi, psi).(S, omega) = (c_phi o S o psi^-1, phi o omega o (psi^-1 x psi^-1)).
pub fn pair_action(phi: &Automorphism, psi: &Automorphism, fs: &FactorSystem) -> FactorSystem {
    let (g, n) = (fs.g(), fs.n());
    let phi_inv = phi.inverse();
    let s = g.elements().map(|x| phi.compose(fs.s(psi.apply_inv(x))).compose(&phi_inv)).collect();
    let lift = OuterActionLift::new(g, n, s).expect("conjugating a lift gives a lift");
    let omega = Cochain::from_fn(2, g.order(), |t| phi.apply(fs.w(psi.apply_inv(t[0]), psi.apply_inv(t[1]))));
    let out = FactorSystem::new(lift, omega).expect("the pair action preserves compatibility");
    let d = fs.d_s_omega_raw();
    let moved = Cochain::from_fn(3, g.order(), |t| {
        phi.apply(d.get(&[psi.apply_inv(t[0]), psi.apply_inv(t[1]), psi.apply_inv(t[2])]))
    });
    assert_eq!(out.d_s_omega_raw(), moved, "d_S omega transforms by (phi, psi)");
    out
}

/// (phi, psi).h = phi o h o psi^-1 on C^1(G, N).
pub fn pair_act_cochain(phi: &Automorphism, psi: &Automorphism, h: &Cochain) -> Cochain {
    Cochain::from_fn(h.degree(), h.group_order(), |t| {
        let args: Vec<usize> = t.iter().map(|&x| psi.apply_inv(x)).collect();
        phi.apply(h.get(&args))
    })
}

/// An automorphism of the total group preserving N, with its normal-form data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtAutomorphism {
    pub nu: Automorphism,
    pub phi: Automorphism,
    pub psi: Automorphism,
    pub h: Cochain,
}

impl ExtAutomorphism {
    /// nu(n, g) = (phi(n) h(psi(g)), psi(g)); None if this is not an automorphism.
    pub fn from_normal_form(ext: &ExtensionGroup, phi: &Automorphism, psi: &Automorphism, h: &Cochain) -> Option<Self> {
        let n = ext.n();
        let images = ext
            .total()
            .elements()
            .map(|x| {
                let (a, g) = ext.pair(x);
                let pg = psi.apply(g);
                ext.flat(n.mul(phi.apply(a), h.get(&[pg])), pg)
            })
            .collect();
        let nu = Automorphism::from_images(ext.total(), images).ok()?;
        Some(ExtAutomorphism { nu, phi: phi.clone(), psi: psi.clone(), h: h.clone() })
    }

    /// Normal-form data of an automorphism of the total group; None if it moves N.
    pub fn from_automorphism(ext: &ExtensionGroup, nu: &Automorphism) -> Option<Self> {
        let (g, n) = (ext.g(), ext.n());
        if n.elements().any(|a| ext.proj(nu.apply(ext.iota(a))) != 0) {
            return None;
        }
        let phi = Automorphism::from_permutation(n.elements().map(|a| ext.pair(nu.apply(ext.iota(a))).0).collect());
        let psi = Automorphism::from_permutation(g.elements().map(|x| ext.proj(nu.apply(ext.section(x)))).collect());
        let h = Cochain::from_fn(1, g.order(), |t| ext.pair(nu.apply(ext.section(psi.apply_inv(t[0])))).0);
        let out = Self::from_normal_form(ext, &phi, &psi, &h).expect("normal form of an automorphism");
        assert_eq!(&out.nu, nu, "normal form reproduces the automorphism");
        Some(out)
    }

    /// Phi(nu) = (phi, psi).
    pub fn pair(&self) -> (Automorphism, Automorphism) {
        (self.phi.clone(), self.psi.clone())
    }
}

/// nu_f(n, g) = (n f(g), g) for f in Z^1(G, Z(N)).
pub fn psi_embed(ext: &ExtensionGroup, f: &Cochain) -> ExtAutomorphism {
    let (g, n) = (ext.g(), ext.n());
    ExtAutomorphism::from_normal_form(ext, &Automorphism::identity(n.order()), &Automorphism::identity(g.order()), f)
        .expect("central 1-cocycles give automorphisms")
}

/// A pair (phi, psi) with (phi, psi).S = h0.S.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatiblePair {
    pub phi: Automorphism,
    pub psi: Automorphism,
    pub h0: Cochain,
}

impl CompatiblePair {
    /// Pointwise witness h0(g) = smallest n with c_n = S'(g) S(g)^-1.
    pub fn new(phi: &Automorphism, psi: &Automorphism, fs: &FactorSystem) -> Option<Self> {
        let (g, n) = (fs.g(), fs.n());
        let phi_inv = phi.inverse();
        let mut h0 = Cochain::zero(1, g.order());
        for x in g.elements().skip(1) {
            let target = phi.compose(fs.s(psi.apply_inv(x))).compose(&phi_inv);
            h0.set(&[x], inner_witness(n, &target.compose(&fs.s(x).inverse()))?);
        }
        Some(CompatiblePair { phi: phi.clone(), psi: psi.clone(), h0 })
    }

    pub fn identity(fs: &FactorSystem) -> Self {
        Self::new(&Automorphism::identity(fs.n().order()), &Automorphism::identity(fs.g().order()), fs).unwrap()
    }

    /// (phi, psi)(phi', psi') = (phi phi', psi psi').
    pub fn compose(&self, other: &Self, fs: &FactorSystem) -> Self {
        Self::new(&self.phi.compose(&other.phi), &self.psi.compose(&other.psi), fs).expect("Comp(S) is a group")
    }
}

/// Everything needed to evaluate the Wells class and lift pairs for one extension.
#[derive(Clone, Debug)]
pub struct WellsContext {
    fs: FactorSystem,
    module: CoefficientModule,
    h2: Cohomology,
    solver: CoboundarySolver,
}

impl WellsContext {
    pub fn new(fs: &FactorSystem) -> Result<Self> {
        if let Some((a, b, c)) = fs.first_violation() {
            return Err(Error::NotACocycle(a, b, c));
        }
        let module = fs.lift().center_module();
        let h2 = Cohomology::new(&module, 2)?;
        let solver = CoboundarySolver::new(&module, 2)?;
        Ok(WellsContext { fs: fs.clone(), module, h2, solver })
    }

    pub fn h2(&self) -> &Cohomology {
        &self.h2
    }

    /// (phi, psi).omega - h0 *_S omega, as a Z(N)-valued cocycle.
    fn gap(&self, pair: &CompatiblePair) -> Result<Cochain> {
        let fs = &self.fs;
        let target = pair_action(&pair.phi, &pair.psi, fs);
        let moved = c1_act(&pair.h0, fs);
        if moved.lift() != target.lift() {
            return Err(Error::NotCompatible);
        }
        let n = fs.n();
        let diff = Cochain::from_fn(2, fs.g().order(), |t| n.mul(target.w(t[0], t[1]), n.inv(moved.w(t[0], t[1]))));
        Ok(fs.lift().center().from_n(&diff).expect("central once the lifts agree"))
    }

    /// The Wells class I(phi, psi) in H^2(G, Z(N)).
    pub fn wells_class(&self, pair: &CompatiblePair) -> Result<CohomologyClass> {
        self.h2.class_of(&self.gap(pair)?)
    }

    /// The H^2 action of a pair: (p.beta)(g, g') = phi(beta(psi^-1 g, psi^-1 g')).
    pub fn act_on_class(&self, pair: &CompatiblePair, coords: &[i64]) -> Result<Vec<i64>> {
        let z = self.fs.lift().center();
        let beta = z.to_n(&self.h2.cocycle(coords));
        let moved = z.from_n(&pair_act_cochain(&pair.phi, &pair.psi, &beta)).expect("phi preserves Z(N)");
        self.h2.coords(&moved)
    }

    /// A lift of the pair to the extension, when its Wells class vanishes.
    pub fn lift_pair(&self, ext: &ExtensionGroup, pair: &CompatiblePair) -> Result<Option<ExtAutomorphism>> {
        let Some(gamma) = self.solver.preimage(&self.gap(pair)?) else { return Ok(None) };
        let z = self.fs.lift().center();
        let h = c1_mul(self.fs.n(), &z.to_n(&gamma), &pair.h0);
        debug_assert_eq!(c1_act(&h, &self.fs), pair_action(&pair.phi, &pair.psi, &self.fs));
        let nu = ExtAutomorphism::from_normal_form(ext, &pair.phi, &pair.psi, &h).expect("lifts are automorphisms");
        Ok(Some(nu))
    }

    /// Z^1(G, Z(N)) as Z(N)-valued cochains, trivial cocycle first.
    pub fn central_cocycles(&self, budget: usize) -> Result<Vec<Cochain>> {
        crossed_homomorphisms(self.fs.g(), self.module.carrier(), self.module.action(), budget)
    }
}

pub fn wells_cocycle(pair: &CompatiblePair, fs: &FactorSystem) -> Result<CohomologyClass> {
    WellsContext::new(fs)?.wells_class(pair)
}

pub fn lift_pair(ext: &ExtensionGroup, pair: &CompatiblePair) -> Result<Option<ExtAutomorphism>> {
    WellsContext::new(ext.factor_system())?.lift_pair(ext, pair)
}

/// Comp(S): pairs in Aut(N) x Aut(G) compatible with the lift.
pub fn compatible_pairs(fs: &FactorSystem, max_order: usize) -> Result<Vec<CompatiblePair>> {
    let auts_n = automorphism_group(fs.n(), max_order)?;
    let auts_g = automorphism_group(fs.g(), max_order)?;
    let mut out = Vec::new();
    for phi in &auts_n {
        for psi in &auts_g {
            if let Some(p) = CompatiblePair::new(phi, psi, fs) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Aut(G^, N), built from the triples (phi, psi, h) with (phi, psi).(S, omega) = h.(S, omega).
pub fn aut_preserving(ext: &ExtensionGroup, max_order: usize, budget: usize) -> Result<Vec<ExtAutomorphism>> {
    let fs = ext.factor_system();
    let ctx = WellsContext::new(fs)?;
    let z = fs.lift().center();
    let cocycles = ctx.central_cocycles(budget)?;
    let mut out = Vec::new();
    for pair in compatible_pairs(fs, max_order)? {
        if let Some(base) = ctx.lift_pair(ext, &pair)? {
            for f in &cocycles {
                let h = c1_mul(fs.n(), &z.to_n(f), &base.h);
                out.push(ExtAutomorphism::from_normal_form(ext, &pair.phi, &pair.psi, &h).expect("stabilizer moves"));
            }
        }
    }
    out.sort_by(|a, b| a.nu.forward().cmp(b.nu.forward()));
    for w in out.windows(2) {
        assert_ne!(w[0].nu, w[1].nu, "triples give distinct automorphisms");
    }
    Ok(out)
}

/// Aut(G^, N) by filtering all automorphisms of the total group.
pub fn aut_preserving_brute_force(ext: &ExtensionGroup, max_order: usize) -> Result<Vec<ExtAutomorphism>> {
    let mut out: Vec<ExtAutomorphism> = automorphism_group(ext.total(), max_order)?
        .iter()
        .filter_map(|nu| ExtAutomorphism::from_automorphism(ext, nu))
        .collect();
    out.sort_by(|a, b| a.nu.forward().cmp(b.nu.forward()));
    Ok(out)
}

/// Gau(G^) computed as the psi = id part of Aut(G^, N) and as the units of (Z^1(G^, N), *).
#[derive(Clone, Debug)]
pub struct GaugeGroup {
    pub from_automorphisms: Vec<Automorphism>,
    pub units: Vec<Cochain>,
    pub monoid_size: usize,
}

impl GaugeGroup {
    pub fn order(&self) -> usize {
        self.units.len()
    }
}

/// Crossed homomorphisms G^ -> N for the conjugation action of G^ on N.
pub fn total_cocycles(ext: &ExtensionGroup, budget: usize) -> Result<Vec<Cochain>> {
    let (t, n) = (ext.total(), ext.n());
    let action: Vec<Automorphism> = t
        .elements()
        .map(|x| Automorphism::from_permutation(n.elements().map(|a| ext.pair(t.conj(x, ext.iota(a))).0).collect()))
        .collect();
    crossed_homomorphisms(t, n, &action, budget)
}

/// (f1 * f2)(x) = f1(f2(x)) f2(x) f1(x).
pub fn monoid_mul(ext: &ExtensionGroup, f1: &Cochain, f2: &Cochain) -> Cochain {
    let n = ext.n();
    Cochain::from_fn(1, ext.total().order(), |t| {
        let y = f2.get(t);
        n.mul(n.mul(f1.get(&[ext.iota(y)]), y), f1.get(t))
    })
}

/// nu_f(x) = f(x) x.
pub fn monoid_endomorphism(ext: &ExtensionGroup, f: &Cochain) -> Vec<usize> {
    let t = ext.total();
    t.elements().map(|x| t.mul(ext.iota(f.get(&[x])), x)).collect()
}

pub fn gauge_group(ext: &ExtensionGroup, max_order: usize, budget: usize) -> Result<GaugeGroup> {
    let g = ext.g();
    let mut from_automorphisms: Vec<Automorphism> = aut_preserving(ext, max_order, budget)?
        .into_iter()
        .filter(|a| a.psi == Automorphism::identity(g.order()))
        .map(|a| a.nu)
        .collect();
    from_automorphisms.sort_by(|a, b| a.forward().cmp(b.forward()));

    let monoid = total_cocycles(ext, budget)?;
    let index: HashMap<&Cochain, usize> = monoid.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let m = monoid.len();
    let e = 0;
    assert!(monoid[e].is_zero(), "trivial cocycle is the identity");
    let mut table = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j] = index[&monoid_mul(ext, &monoid[i], &monoid[j])];
        }
    }
    let units: Vec<Cochain> = (0..m)
        .filter(|&i| (0..m).any(|j| table[i * m + j] == e && table[j * m + i] == e))
        .map(|i| monoid[i].clone())
        .collect();
    let mut via_units: Vec<Automorphism> =
        units.iter().map(|f| Automorphism::from_permutation(monoid_endomorphism(ext, f))).collect();
    via_units.sort_by(|a, b| a.forward().cmp(b.forward()));
    assert_eq!(via_units, from_automorphisms, "gauge group computed two ways");
    Ok(GaugeGroup { from_automorphisms, units, monoid_size: m })
}

/// Outcome of lifting an H-action on (N, G) to the extension.
#[derive(Clone, Debug)]
pub enum LiftedAction {
    Lifted {
        /// theta(h) in C^1(G, N), a 1-cocycle of H.
        theta: Vec<Cochain>,
        /// The automorphism of the total group for each h.
        action: Vec<Automorphism>,
    },
    Obstructed {
        /// Class of d_H theta_0 in H^2(H, Z^1(G, Z(N))).
        invariants: Vec<i64>,
        coords: Vec<i64>,
    },
}

/// Lift h -> (phi_h, psi_h) to an action on the total group, or report the obstruction class.
pub fn lift_group_action(ext: &ExtensionGroup, hg: &Group, pairs: &[(Automorphism, Automorphism)], budget: usize) -> Result<LiftedAction> {
    let fs = ext.factor_system();
    let (g, n) = (fs.g(), fs.n());
    if pairs.len() != hg.order() || !pairs[0].0.is_identity() || !pairs[0].1.is_identity() {
        return Err(Error::MalformedTable("need one pair per element of H, identity first".into()));
    }
    for a in hg.elements() {
        for b in hg.elements() {
            let c = hg.mul(a, b);
            if pairs[a].0.compose(&pairs[b].0) != pairs[c].0 || pairs[a].1.compose(&pairs[b].1) != pairs[c].1 {
                return Err(Error::NotAHomomorphism { a, b });
            }
        }
    }
    let ctx = WellsContext::new(fs)?;
    let z = fs.lift().center();
    // theta0(h)^-1 is a C^1 element moving (S, omega) to h.(S, omega)
    let mut theta0 = Vec::with_capacity(hg.order());
    for (i, (phi, psi)) in pairs.iter().enumerate() {
        let pair = CompatiblePair::new(phi, psi, fs).ok_or(Error::NotStabilizing(i))?;
        let nu = ctx.lift_pair(ext, &pair)?.ok_or(Error::NotStabilizing(i))?;
        theta0.push(nu.h.pointwise_inverse(n));
    }
    let act = |h: usize, chi: &Cochain| pair_act_cochain(&pairs[h].0, &pairs[h].1, chi);
    let d_h = |theta: &[Cochain], a: usize, b: usize| -> Cochain {
        let x = theta[a].pointwise(&act(a, &theta[b]), n);
        x.pointwise(&theta[hg.mul(a, b)].pointwise_inverse(n), n)
    };

    let cocycles = ctx.central_cocycles(budget)?;
    let index: HashMap<&Cochain, usize> = cocycles.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let zg = z.group();
    let rows: Vec<Vec<usize>> = cocycles
        .iter()
        .map(|a| cocycles.iter().map(|b| index[&a.pointwise(b, zg)]).collect())
        .collect();
    let mgroup = Group::from_table(&rows).expect("Z^1(G, Z(N)) is a group");
    let maction: Vec<Automorphism> = hg
        .elements()
        .map(|h| {
            Automorphism::from_permutation(
                cocycles
                    .iter()
                    .map(|c| index[&z.from_n(&act(h, &z.to_n(c))).expect("pairs preserve Z(N)")])
                    .collect(),
            )
        })
        .collect();
    let module = CoefficientModule::new(mgroup, hg.clone(), maction)?;
    let c = Cochain::from_fn(2, hg.order(), |t| {
        let v = z.from_n(&d_h(&theta0, t[0], t[1])).expect("d_H theta takes central values");
        *index.get(&v).expect("d_H theta lands in Z^1(G, Z(N))")
    });
    let h2 = Cohomology::new(&module, 2)?;
    let class = h2.class_of(&c)?;
    if !class.is_zero() {
        return Ok(LiftedAction::Obstructed { invariants: class.invariants, coords: class.coords });
    }
    let eta = h2.preimage(&module.neg_cochain(&c)).expect("class is zero");
    let theta: Vec<Cochain> = hg.elements().map(|h| theta0[h].pointwise(&z.to_n(&cocycles[eta.get(&[h])]), n)).collect();
    for a in hg.elements() {
        for b in hg.elements() {
            assert!(d_h(&theta, a, b).is_zero(), "corrected theta is a cocycle");
        }
    }
    let action: Vec<Automorphism> = hg
        .elements()
        .map(|h| {
            let (phi, psi) = &pairs[h];
            let images = ext
                .total()
                .elements()
                .map(|x| {
                    let (a, y) = ext.pair(x);
                    let py = psi.apply(y);
                    ext.flat(n.mul(phi.apply(a), n.inv(theta[h].get(&[py]))), py)
                })
                .collect();
            Automorphism::from_images(ext.total(), images).expect("lifted maps are automorphisms")
        })
        .collect();
    crate::nonabelian::check_action(hg, ext.total(), &action).expect("the lifted maps form an action");
    let _ = g;
    Ok(LiftedAction::Lifted { theta, action })
}
