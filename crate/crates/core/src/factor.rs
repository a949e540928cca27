//! Outer action lifts, factor systems (S, omega) and the groups N x_(S,omega) G they define.
//!
//! Elements of the extension are pairs (n, g) flattened to `n + |N| * g`.

use crate::cochain::Cochain;
use crate::cohomology::{differential_any, CoboundarySolver};
use crate::error::{Error, Result};
use crate::group::{Automorphism, Group, GroupMap};
use crate::module::CoefficientModule;
use crate::nonabelian::check_action;

/// Smallest n with c_n = a, checked on a generating set.
pub fn inner_witness(n: &Group, a: &Automorphism) -> Option<usize> {
    let gens = n.generators();
    n.elements().find(|&m| gens.iter().all(|&x| n.conj(m, x) == a.apply(x)))
}

/// Z(N) as a group of its own, with the embedding into N.
#[derive(Clone, Debug)]
pub struct Center {
    group: Group,
    embed: Vec<usize>,
    index: Vec<Option<usize>>,
}

impl Center {
    pub fn of(n: &Group) -> Self {
        let z = n.center();
        let (group, embed) = n.restrict(&z);
        let mut index = vec![None; n.order()];
        for (i, &x) in embed.iter().enumerate() {
            index[x] = Some(i);
        }
        Center { group, embed, index }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.embed.len()
    }

    pub fn embed(&self, z: usize) -> usize {
        self.embed[z]
    }

    pub fn index(&self, x: usize) -> Option<usize> {
        self.index[x]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.index[x].is_some()
    }

    pub fn restrict(&self, a: &Automorphism) -> Automorphism {
        Automorphism::from_permutation(self.embed.iter().map(|&x| self.index[a.apply(x)].expect("Z(N) is characteristic")).collect())
    }

    /// Z(N) as a G-module through S restricted to the center.
    pub fn module(&self, actor: &Group, s: &[Automorphism]) -> Result<CoefficientModule> {
        CoefficientModule::new(self.group.clone(), actor.clone(), s.iter().map(|a| self.restrict(a)).collect())
    }

    /// Z(N)-valued cochain to N-valued.
    pub fn to_n(&self, c: &Cochain) -> Cochain {
        c.map_values(|z| self.embed[z])
    }

    /// N-valued cochain to Z(N)-valued, if every value is central.
    pub fn from_n(&self, c: &Cochain) -> Option<Cochain> {
        if c.values().iter().all(|&x| self.contains(x)) {
            Some(c.map_values(|x| self.index[x].unwrap()))
        } else {
            None
        }
    }
}

/// S: G -> Aut(N) with S(1) = id and every delta_S(g, g') inner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterActionLift {
    g: Group,
    n: Group,
    s: Vec<Automorphism>,
}

impl OuterActionLift {
    pub fn new(g: &Group, n: &Group, s: Vec<Automorphism>) -> Result<Self> {
        if s.len() != g.order() || s.iter().any(|a| a.len() != n.order()) {
            return Err(Error::MalformedTable(format!("lift needs {} automorphisms of a group of order {}", g.order(), n.order())));
        }
        if !s[0].is_identity() {
            return Err(Error::MalformedTable("S(1) must be the identity".into()));
        }
        let lift = OuterActionLift { g: g.clone(), n: n.clone(), s };
        for a in g.elements().skip(1) {
            for b in g.elements().skip(1) {
                if inner_witness(n, &lift.delta(a, b)).is_none() {
                    return Err(Error::NotInner { g: a, h: b });
                }
            }
        }
        Ok(lift)
    }

    /// A homomorphism G -> Aut(N) viewed as a lift.
    pub fn from_action(g: &Group, n: &Group, s: Vec<Automorphism>) -> Result<Self> {
        check_action(g, n, &s)?;
        Ok(OuterActionLift { g: g.clone(), n: n.clone(), s })
    }

    pub fn trivial(g: &Group, n: &Group) -> Self {
        OuterActionLift { g: g.clone(), n: n.clone(), s: vec![Automorphism::identity(n.order()); g.order()] }
    }

    pub fn g(&self) -> &Group {
        &self.g
    }

    pub fn n(&self) -> &Group {
        &self.n
    }

    pub fn s(&self, x: usize) -> &Automorphism {
        &self.s[x]
    }

    pub fn maps(&self) -> &[Automorphism] {
        &self.s
    }

    /// S(a) S(b) S(ab)^-1.
    pub fn delta(&self, a: usize, b: usize) -> Automorphism {
        self.s[a].compose(&self.s[b]).compose(&self.s[self.g.mul(a, b)].inverse())
    }

    pub fn is_homomorphism(&self) -> bool {
        check_action(&self.g, &self.n, &self.s).is_ok()
    }

    pub fn center(&self) -> Center {
        Center::of(&self.n)
    }

    /// Z(N) with the action S_Z.
    pub fn center_module(&self) -> CoefficientModule {
        self.center().module(&self.g, &self.s).expect("inner automorphisms fix the center")
    }

    /// g -> c_(h(g)) o S(g).
    pub fn twist(&self, h: &Cochain) -> Self {
        let s = self.g.elements().map(|x| self.n.inner(h.get(&[x])).compose(&self.s[x])).collect();
        OuterActionLift { g: self.g.clone(), n: self.n.clone(), s }
    }

    fn same_groups(&self, other: &Self) -> bool {
        self.g == other.g && self.n == other.n
    }
}

/// A pair (S, omega) with delta_S = C_N o omega.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSystem {
    lift: OuterActionLift,
    omega: Cochain,
}

impl FactorSystem {
    pub fn new(lift: OuterActionLift, omega: Cochain) -> Result<Self> {
        let (g, n) = (&lift.g, &lift.n);
        if omega.degree() != 2 || omega.group_order() != g.order() || omega.values().iter().any(|&v| v >= n.order()) {
            return Err(Error::MalformedTable("omega must be a normalized N-valued 2-cochain on G".into()));
        }
        for (t, w) in omega.entries() {
            let d = lift.delta(t[0], t[1]);
            if n.inner(w) != d {
                return Err(Error::CompatibilityViolated { g: t[0], h: t[1] });
            }
        }
        Ok(FactorSystem { lift, omega })
    }

    /// (S, 1) for a homomorphism S.
    pub fn split(lift: OuterActionLift) -> Result<Self> {
        let omega = Cochain::zero(2, lift.g.order());
        Self::new(lift, omega)
    }

    pub fn lift(&self) -> &OuterActionLift {
        &self.lift
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    pub fn g(&self) -> &Group {
        &self.lift.g
    }

    pub fn n(&self) -> &Group {
        &self.lift.n
    }

    pub fn s(&self, x: usize) -> &Automorphism {
        &self.lift.s[x]
    }

    pub fn w(&self, a: usize, b: usize) -> usize {
        self.omega.get(&[a, b])
    }

    /// omega_g(x) = omega(g, x) omega(g x g^-1, g)^-1.
    pub fn omega_g(&self, g: usize, x: usize) -> usize {
        let gg = self.g();
        let n = self.n();
        n.mul(self.w(g, x), n.inv(self.w(gg.conj(g, x), g)))
    }

    /// (d_S omega)(a, b, c) as an element of N.
    pub fn d_s_omega_at(&self, a: usize, b: usize, c: usize) -> usize {
        let (g, n) = (self.g(), self.n());
        let x = n.mul(self.s(a).apply(self.w(b, c)), self.w(a, g.mul(b, c)));
        let y = n.mul(x, n.inv(self.w(g.mul(a, b), c)));
        n.mul(y, n.inv(self.w(a, b)))
    }

    pub fn d_s_omega_raw(&self) -> Cochain {
        Cochain::from_fn(3, self.g().order(), |t| self.d_s_omega_at(t[0], t[1], t[2]))
    }

    pub fn first_violation(&self) -> Option<(usize, usize, usize)> {
        crate::cochain::tuples(3, self.g().order())
            .find(|t| self.d_s_omega_at(t[0], t[1], t[2]) != 0)
            .map(|t| (t[0], t[1], t[2]))
    }

    pub fn is_cocycle(&self) -> bool {
        self.first_violation().is_none()
    }

    /// (n, g)(n', g') = (n S(g)(n') omega(g, g'), g g').
    pub fn mul(&self, (a, x): (usize, usize), (b, y): (usize, usize)) -> (usize, usize) {
        let n = self.n();
        (n.mul(n.mul(a, self.s(x).apply(b)), self.w(x, y)), self.g().mul(x, y))
    }

    /// The multiplication on N x G, whether or not it is associative.
    pub fn flattened_table(&self) -> Vec<Vec<usize>> {
        let k = self.n().order();
        let total = k * self.g().order();
        (0..total)
            .map(|p| {
                (0..total)
                    .map(|q| {
                        let (a, x) = self.mul((p % k, p / k), (q % k, q / k));
                        a + k * x
                    })
                    .collect()
            })
            .collect()
    }

    pub fn same_groups(&self, other: &Self) -> bool {
        self.lift.same_groups(&other.lift)
    }
}

/// d_S omega as a Z(N)-valued 3-cochain; asserts it is central and a 3-cocycle for S_Z.
pub fn d_s_omega(fs: &FactorSystem) -> Result<Cochain> {
    FactorSystem::new(fs.lift.clone(), fs.omega.clone())?;
    let z = fs.lift.center();
    let raw = fs.d_s_omega_raw();
    let c = z.from_n(&raw).expect("d_S omega takes central values");
    let m = z.module(fs.g(), fs.lift.maps())?;
    assert!(differential_any(&m, &c).is_zero(), "d_S omega is a 3-cocycle");
    Ok(c)
}

/// N x_(S,omega) G with its structure maps.
#[derive(Clone, Debug)]
pub struct ExtensionGroup {
    total: Group,
    fs: FactorSystem,
}

impl ExtensionGroup {
    pub fn total(&self) -> &Group {
        &self.total
    }

    pub fn factor_system(&self) -> &FactorSystem {
        &self.fs
    }

    pub fn g(&self) -> &Group {
        self.fs.g()
    }

    pub fn n(&self) -> &Group {
        self.fs.n()
    }

    pub fn pair(&self, x: usize) -> (usize, usize) {
        let k = self.n().order();
        (x % k, x / k)
    }

    pub fn flat(&self, n: usize, g: usize) -> usize {
        n + self.n().order() * g
    }

    pub fn iota(&self, n: usize) -> usize {
        n
    }

    pub fn proj(&self, x: usize) -> usize {
        x / self.n().order()
    }

    pub fn section(&self, g: usize) -> usize {
        self.flat(0, g)
    }

    pub fn iota_map(&self) -> GroupMap {
        GroupMap { image: self.n().elements().collect() }
    }

    pub fn proj_map(&self) -> GroupMap {
        GroupMap { image: self.total.elements().map(|x| self.proj(x)).collect() }
    }

    pub fn section_images(&self) -> Vec<usize> {
        self.g().elements().map(|g| self.section(g)).collect()
    }
}

pub fn build_extension(fs: &FactorSystem) -> Result<ExtensionGroup> {
    if let Some((a, b, c)) = fs.first_violation() {
        return Err(Error::NotACocycle(a, b, c));
    }
    let total = Group::from_table(&fs.flattened_table()).expect("factor systems give groups");
    let ext = ExtensionGroup { total, fs: fs.clone() };
    let (g, n) = (fs.g(), fs.n());
    for x in ext.total.elements() {
        let (a, y) = ext.pair(x);
        let yi = g.inv(y);
        // (n, g)^-1 = (omega(g^-1, g)^-1 S(g^-1)(n^-1), g^-1)
        let inv = ext.flat(n.mul(n.inv(fs.w(yi, y)), fs.s(yi).apply(n.inv(a))), yi);
        assert_eq!(inv, ext.total.inv(x), "inversion formula");
    }
    for x in ext.total.elements() {
        for y in ext.total.elements() {
            conjugation_in_extension(&ext, x, y);
        }
    }
    Ok(ext)
}

/// x y x^-1 by the closed formula, checked against the table.
pub fn conjugation_in_extension(ext: &ExtensionGroup, x: usize, y: usize) -> usize {
    let fs = &ext.fs;
    let (g, n) = (fs.g(), fs.n());
    let (a, u) = ext.pair(x);
    let (b, v) = ext.pair(y);
    let w = g.conj(u, v);
    // (1, u)(b, v)(1, u)^-1 = (S(u)(b) omega_u(v), u v u^-1), then conjugate by (a, 1)
    let inner = n.mul(fs.s(u).apply(b), fs.omega_g(u, v));
    let value = ext.flat(n.mul(n.mul(a, inner), fs.s(w).apply(n.inv(a))), w);
    assert_eq!(value, ext.total.conj(x, y), "conjugation formula");
    value
}

/// h.(S, omega) = (c_h S, h *_S omega).
pub fn c1_act(h: &Cochain, fs: &FactorSystem) -> FactorSystem {
    let (g, n) = (fs.g(), fs.n());
    let lift = fs.lift.twist(h);
    let omega = Cochain::from_fn(2, g.order(), |t| {
        let (x, y) = (t[0], t[1]);
        let a = n.mul(h.get(&[x]), fs.s(x).apply(h.get(&[y])));
        n.mul(n.mul(a, fs.w(x, y)), n.inv(h.get(&[g.mul(x, y)])))
    });
    let out = FactorSystem::new(lift, omega).expect("the C^1 action preserves compatibility");
    assert_eq!(out.d_s_omega_raw(), fs.d_s_omega_raw(), "the C^1 action preserves d_S omega");
    out
}

/// Pointwise product (h h')(g) = h(g) h'(g).
pub fn c1_mul(n: &Group, h: &Cochain, k: &Cochain) -> Cochain {
    h.pointwise(k, n)
}

/// Some h with h.fs1 = fs2, if the extensions are equivalent.
pub fn equivalent(fs1: &FactorSystem, fs2: &FactorSystem) -> Result<Option<Cochain>> {
    if !fs1.same_groups(fs2) {
        return Err(Error::KernelMismatch("factor systems live on different groups".into()));
    }
    let m = fs1.lift.center_module();
    equivalent_in(fs1, fs2, &CoboundarySolver::new(&m, 2)?)
}

/// `equivalent` with a prebuilt degree-2 coboundary solver for Z(N).
pub fn equivalent_in(fs1: &FactorSystem, fs2: &FactorSystem, solver: &CoboundarySolver) -> Result<Option<Cochain>> {
    if !fs1.same_groups(fs2) {
        return Err(Error::KernelMismatch("factor systems live on different groups".into()));
    }
    let (g, n) = (fs1.g(), fs1.n());
    // h0(g) = smallest n with c_n = S2(g) S1(g)^-1
    let mut h0 = Cochain::zero(1, g.order());
    for x in g.elements().skip(1) {
        match inner_witness(n, &fs2.s(x).compose(&fs1.s(x).inverse())) {
            Some(m) => h0.set(&[x], m),
            None => return Ok(None),
        }
    }
    let moved = if h0.is_zero() { fs1.clone() } else { c1_act(&h0, fs1) };
    debug_assert_eq!(moved.lift, fs2.lift);
    let z = fs1.lift.center();
    let diff = Cochain::from_fn(2, g.order(), |t| n.mul(fs2.w(t[0], t[1]), n.inv(moved.w(t[0], t[1]))));
    let diff = z.from_n(&diff).expect("omega2 omega1^-1 is central once the lifts agree");
    let Some(beta) = solver.preimage(&diff) else { return Ok(None) };
    let h = c1_mul(n, &z.to_n(&beta), &h0);
    debug_assert_eq!(&c1_act(&h, fs1), fs2);
    Ok(Some(h))
}

/// A homomorphic section g -> (h(g), g) with h *_S omega = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub h: Cochain,
    pub section: GroupMap,
}

pub fn is_split(fs: &FactorSystem, budget: usize) -> Result<Option<Splitting>> {
    if let Some((a, b, c)) = fs.first_violation() {
        return Err(Error::NotACocycle(a, b, c));
    }
    let (g, n) = (fs.g(), fs.n());
    let gens = g.generators();
    let mut img = vec![usize::MAX; g.order()];
    img[0] = 0;
    let mut nodes = 0;
    let mut found = None;
    // h(x g_i) = h(x) S(x)(h(g_i)) omega(x, g_i)
    crate::nonabelian::propagate(g, n, &gens, 0, &mut img, &mut nodes, budget, &mut |img| {
        found = Some(img.to_vec());
        false
    }, &|x, hx, gi, hgi| n.mul(n.mul(hx, fs.s(x).apply(hgi)), fs.w(x, gi)))?;
    Ok(found.map(|img| {
        let k = n.order();
        let h = Cochain::from_fn(1, g.order(), |t| img[t[0]]);
        let section = GroupMap { image: g.elements().map(|x| img[x] + k * x).collect() };
        Splitting { h, section }
    }))
}

/// N x_S G for a homomorphism S.
pub fn semidirect(g: &Group, n: &Group, s: Vec<Automorphism>) -> Result<ExtensionGroup> {
    let lift = OuterActionLift::from_action(g, n, s)?;
    build_extension(&FactorSystem::split(lift)?)
}

/// The factor system of an abstract extension N -> E -> G with a normalized set-section.
pub fn read_factor_system(
    total: &Group,
    iota: &[usize],
    proj: &GroupMap,
    section: &[usize],
    g: &Group,
    n: &Group,
) -> Result<FactorSystem> {
    if section[0] != 0 || g.elements().any(|x| proj.apply(section[x]) != x) {
        return Err(Error::MalformedTable("section must be normalized and split the projection".into()));
    }
    let mut back = vec![usize::MAX; total.order()];
    for (m, &x) in iota.iter().enumerate() {
        back[x] = m;
    }
    let pull = |x: usize| -> usize {
        let v = back[x];
        assert!(v != usize::MAX, "element lies in the kernel");
        v
    };
    let s: Vec<Automorphism> = g
        .elements()
        .map(|x| Automorphism::from_permutation(n.elements().map(|m| pull(total.conj(section[x], iota[m]))).collect()))
        .collect();
    let omega = Cochain::from_fn(2, g.order(), |t| {
        let (a, b) = (t[0], t[1]);
        pull(total.mul(total.mul(section[a], section[b]), total.inv(section[g.mul(a, b)])))
    });
    let lift = OuterActionLift { g: g.clone(), n: n.clone(), s };
    FactorSystem::new(lift, omega)
}
