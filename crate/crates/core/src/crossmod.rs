//! Crossed modules, the action data (f, theta) of a normal subgroup, the obstruction Q(f, theta)
//! and the enlargement of central extensions of N to central extensions of G.
//!
//! Product coordinates: the central extension Z x_f N has elements (z, n) flattened to
//! `z + |Z| * n`, with (z, n)(z', n') = (z + z' + f(n, n'), n n').

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::Cochain;
use crate::cohomology::{differential_any, Cohomology, CohomologyClass};
use crate::error::{Error, Result};
use crate::factor::{build_extension, read_factor_system, ExtensionGroup, FactorSystem, OuterActionLift};
use crate::group::{Automorphism, Group, GroupMap, Subgroup};
use crate::module::CoefficientModule;
use crate::nonabelian::{check_action, crossed_homomorphisms};

/// alpha: H -> G with G acting on H.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    pub h: Group,
    pub g: Group,
    pub alpha: GroupMap,
    pub action: Vec<Automorphism>,
}

/// Axiom-by-axiom validation. Witnesses are (g, h) for CM1 and (h, x) for CM2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModuleReport {
    pub alpha_homomorphism: Option<(usize, usize)>,
    pub action_homomorphism: Option<(usize, usize)>,
    pub cm1: Option<(usize, usize)>,
    pub cm2: Option<(usize, usize)>,
    pub kernel: Vec<usize>,
    pub image: Vec<usize>,
    pub kernel_central: bool,
    pub image_normal: bool,
}

impl CrossedModuleReport {
    pub fn is_valid(&self) -> bool {
        self.alpha_homomorphism.is_none() && self.action_homomorphism.is_none() && self.cm1.is_none() && self.cm2.is_none()
    }

    pub fn lines(&self) -> Vec<String> {
        let show = |name: &str, w: &Option<(usize, usize)>| match w {
            None => format!("{name}: pass"),
            Some((a, b)) => format!("{name}: fail at ({a}, {b})"),
        };
        let mut out = vec![
            show("alpha is a homomorphism", &self.alpha_homomorphism),
            show("action is a homomorphism", &self.action_homomorphism),
            // CM1 is checked in its standard form alpha(S(g)(h)) = g alpha(h) g^-1
            show("CM1 alpha(S(g)(h)) = g alpha(h) g^-1", &self.cm1),
            show("CM2 S(alpha(h)) = c_h", &self.cm2),
        ];
        if self.is_valid() {
            out.push(format!("ker alpha = {:?}", self.kernel));
            out.push(format!("im alpha = {:?}", self.image));
            out.push(format!("ker alpha central: {}", self.kernel_central));
            out.push(format!("im alpha normal: {}", self.image_normal));
        }
        out
    }
}

pub fn validate_crossed_module(cm: &CrossedModule) -> CrossedModuleReport {
    let (h, g) = (&cm.h, &cm.g);
    let shape_ok = cm.alpha.image.len() == h.order()
        && cm.alpha.image.iter().all(|&x| x < g.order())
        && cm.action.len() == g.order()
        && cm.action.iter().all(|a| a.len() == h.order());
    assert!(shape_ok, "crossed module data has the wrong shape");
    let alpha_homomorphism = match cm.alpha.check_homomorphism(h, g) {
        Err(Error::NotAHomomorphism { a, b }) => Some((a, b)),
        _ => None,
    };
    let action_homomorphism = match check_action(g, h, &cm.action) {
        Err(Error::NotAHomomorphism { a, b }) => Some((a, b)),
        Err(_) => Some((0, 0)),
        Ok(()) => None,
    };
    let cm1 = g
        .elements()
        .flat_map(|x| h.elements().map(move |y| (x, y)))
        .find(|&(x, y)| cm.alpha.apply(cm.action[x].apply(y)) != g.conj(x, cm.alpha.apply(y)));
    let cm2 = h
        .elements()
        .flat_map(|y| h.elements().map(move |x| (y, x)))
        .find(|&(y, x)| cm.action[cm.alpha.apply(y)].apply(x) != h.conj(y, x));
    let kernel: Vec<usize> = h.elements().filter(|&y| cm.alpha.apply(y) == 0).collect();
    let mut image: Vec<usize> = h.elements().map(|y| cm.alpha.apply(y)).collect();
    image.sort_unstable();
    image.dedup();
    let center = h.center();
    let kernel_central = kernel.iter().all(|&k| center.contains(k));
    let image_normal = g.is_normal(&g.subgroup(&image));
    let report =
        CrossedModuleReport { alpha_homomorphism, action_homomorphism, cm1, cm2, kernel, image, kernel_central, image_normal };
    if report.is_valid() {
        assert!(report.kernel_central && report.image_normal, "crossed module consequences");
    }
    report
}

/// The pair (f, theta) for a normal subgroup N of G and a G-module Z on which N acts trivially.
#[derive(Clone, Debug)]
pub struct ActionData {
    g: Group,
    n_elems: Vec<usize>,
    n: Group,
    z: CoefficientModule,
    n_module: CoefficientModule,
    conj: Vec<Vec<usize>>,
    f: Cochain,
    theta: Vec<Cochain>,
}

impl ActionData {
    pub fn new(g: &Group, n_elems: &[usize], z: &CoefficientModule, f: Cochain, theta: Vec<Cochain>) -> Result<Self> {
        let mut ad = Self::frame(g, n_elems, z)?;
        ad.f = f;
        ad.theta = theta;
        ad.validate()?;
        Ok(ad)
    }

    fn frame(g: &Group, n_elems: &[usize], z: &CoefficientModule) -> Result<Self> {
        if z.actor() != g {
            return Err(Error::ModuleMismatch("Z must be a module over G".into()));
        }
        let sub = g.subgroup(n_elems);
        if sub.elements() != n_elems {
            return Err(Error::InvalidActionData("N must be given as a sorted subgroup".into()));
        }
        if !g.is_normal(&sub) {
            let (x, k) = g
                .elements()
                .flat_map(|x| n_elems.iter().map(move |&k| (x, k)))
                .find(|&(x, k)| !sub.contains(g.conj(x, k)))
                .unwrap();
            return Err(Error::NotNormal { g: x, k });
        }
        if n_elems.iter().any(|&m| !z.action()[m].is_identity()) {
            return Err(Error::ModuleMismatch("N must act trivially on Z".into()));
        }
        let (n, _) = g.restrict(&sub);
        let n_module = CoefficientModule::trivial(z.carrier().clone(), n.clone())?;
        let conj = g
            .elements()
            .map(|x| n_elems.iter().map(|&m| sub.position(g.conj(x, m)).unwrap()).collect())
            .collect();
        Ok(ActionData {
            g: g.clone(),
            n_elems: n_elems.to_vec(),
            n,
            z: z.clone(),
            n_module,
            conj,
            f: Cochain::zero(2, n_elems.len()),
            theta: Vec::new(),
        })
    }

    /// (f_G restricted to N x N, g -> f~_G(g) restricted to N) for a 2-cocycle f_G on G.
    pub fn from_global(g: &Group, n_elems: &[usize], z: &CoefficientModule, f_g: &Cochain) -> Result<Self> {
        let mut ad = Self::frame(g, n_elems, z)?;
        let nn = n_elems.len();
        ad.f = Cochain::from_fn(2, nn, |t| f_g.get(&[n_elems[t[0]], n_elems[t[1]]]));
        ad.theta = g.elements().map(|x| ad.tilde_of(f_g, x)).collect();
        ad.validate()?;
        Ok(ad)
    }

    /// n' -> f_G(g, g^-1 n' g) - f_G(n', g), as a cochain on N.
    fn tilde_of(&self, f_g: &Cochain, x: usize) -> Cochain {
        let (g, zc) = (&self.g, self.z.carrier());
        Cochain::from_fn(1, self.n.order(), |t| {
            let m = self.n_elems[t[0]];
            zc.mul(f_g.get(&[x, g.conj(g.inv(x), m)]), zc.inv(f_g.get(&[m, x])))
        })
    }

    fn validate(&self) -> Result<()> {
        let (g, nn) = (&self.g, self.n.order());
        let bad = |m: &str| Err(Error::InvalidActionData(m.into()));
        if self.f.degree() != 2 || self.f.group_order() != nn || self.f.values().iter().any(|&v| v >= self.z.carrier().order()) {
            return bad("f must be a Z-valued 2-cochain on N");
        }
        if self.theta.len() != g.order()
            || self.theta.iter().any(|t| t.degree() != 1 || t.group_order() != nn || t.values().iter().any(|&v| v >= self.z.carrier().order()))
        {
            return bad("theta must assign a Z-valued 1-cochain on N to each element of G");
        }
        if !differential_any(&self.n_module, &self.f).is_zero() {
            return bad("f is not a 2-cocycle on N");
        }
        for a in g.elements() {
            for b in g.elements() {
                let rhs = self.z.add_cochains(&self.theta[a], &self.act_c1(a, &self.theta[b]));
                if self.theta[g.mul(a, b)] != rhs {
                    return Err(Error::InvalidActionData(format!("theta fails the cocycle law at ({a}, {b})")));
                }
            }
        }
        for a in g.elements() {
            let lhs = differential_any(&self.n_module, &self.theta[a]);
            let rhs = self.z.sub_cochains(&self.act_c2(a, &self.f), &self.f);
            if lhs != rhs {
                return Err(Error::InvalidActionData(format!("d theta({a}) != {a}.f - f")));
            }
        }
        for (i, &m) in self.n_elems.iter().enumerate() {
            if self.theta[m] != self.f_tilde(i) {
                return Err(Error::InvalidActionData(format!("theta({m}) differs from f~ on N")));
            }
        }
        Ok(())
    }

    pub fn g(&self) -> &Group {
        &self.g
    }

    pub fn n(&self) -> &Group {
        &self.n
    }

    /// Elements of N inside G; N-label i is `n_elements()[i]`.
    pub fn n_elements(&self) -> &[usize] {
        &self.n_elems
    }

    pub fn z(&self) -> &CoefficientModule {
        &self.z
    }

    pub fn f(&self) -> &Cochain {
        &self.f
    }

    pub fn theta(&self) -> &[Cochain] {
        &self.theta
    }

    /// N-label of g m g^-1 for an N-label m.
    pub fn conj_n(&self, x: usize, m: usize) -> usize {
        self.conj[x][m]
    }

    /// (g.chi)(m) = g.chi(g^-1 m g).
    pub fn act_c1(&self, x: usize, chi: &Cochain) -> Cochain {
        let xi = self.g.inv(x);
        Cochain::from_fn(1, self.n.order(), |t| self.z.act(x, chi.get(&[self.conj[xi][t[0]]])))
    }

    /// (g.f)(m, m') = g.f(g^-1 m g, g^-1 m' g).
    pub fn act_c2(&self, x: usize, f: &Cochain) -> Cochain {
        let xi = self.g.inv(x);
        Cochain::from_fn(2, self.n.order(), |t| self.z.act(x, f.get(&[self.conj[xi][t[0]], self.conj[xi][t[1]]])))
    }

    /// f~(n)(n') = f(n, n^-1 n' n) - f(n', n), for an N-label n.
    pub fn f_tilde(&self, m: usize) -> Cochain {
        let (n, zc) = (&self.n, self.z.carrier());
        Cochain::from_fn(1, n.order(), |t| {
            let p = t[0];
            zc.mul(self.f.get(&[m, n.conj(n.inv(m), p)]), zc.inv(self.f.get(&[p, m])))
        })
    }

    /// Componentwise sum in the group D.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.g != other.g || self.n_elems != other.n_elems || !self.z.same_as(&other.z) {
            return Err(Error::ModuleMismatch("action data over different (G, N, Z)".into()));
        }
        let mut out = self.clone();
        out.f = self.z.add_cochains(&self.f, &other.f);
        out.theta = self.theta.iter().zip(&other.theta).map(|(a, b)| self.z.add_cochains(a, b)).collect();
        out.validate()?;
        Ok(out)
    }

    /// The central extension Z x_f N.
    pub fn hat_group(&self) -> Group {
        let k = self.z.carrier().order();
        let total = k * self.n.order();
        let zc = self.z.carrier();
        let rows: Vec<Vec<usize>> = (0..total)
            .map(|p| {
                (0..total)
                    .map(|q| {
                        let (a, m) = (p % k, p / k);
                        let (b, m2) = (q % k, q / k);
                        zc.mul(zc.mul(a, b), self.f.get(&[m, m2])) + k * self.n.mul(m, m2)
                    })
                    .collect()
            })
            .collect();
        Group::from_table(&rows).expect("f is a 2-cocycle")
    }

    /// g.(z, n) = (g.z + theta(g)(g n g^-1), g n g^-1).
    pub fn hat_action(&self, hat: &Group, x: usize) -> Automorphism {
        let k = self.z.carrier().order();
        let zc = self.z.carrier();
        let images = hat
            .elements()
            .map(|p| {
                let (a, m) = (p % k, p / k);
                let c = self.conj[x][m];
                zc.mul(self.z.act(x, a), self.theta[x].get(&[c])) + k * c
            })
            .collect();
        Automorphism::from_images(hat, images).expect("theta defines automorphisms")
    }

    /// Z x_f N -> G as a crossed module.
    pub fn crossed_module(&self) -> CrossedModule {
        let hat = self.hat_group();
        let k = self.z.carrier().order();
        let alpha = GroupMap { image: hat.elements().map(|p| self.n_elems[p / k]).collect() };
        let action = self.g.elements().map(|x| self.hat_action(&hat, x)).collect();
        CrossedModule { h: hat, g: self.g.clone(), alpha, action }
    }

    fn quotient(&self) -> (Group, GroupMap) {
        self.g.quotient(&self.g.subgroup(&self.n_elems)).expect("N is normal")
    }
}

/// Z = ker alpha, N = im alpha, and (f, theta) read off along the lexicographically smallest section.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub data: ActionData,
    /// Elements of H forming Z, in Z-label order.
    pub z_embed: Vec<usize>,
    /// s(n) in H for each N-label.
    pub section: Vec<usize>,
}

pub fn decompose(cm: &CrossedModule) -> Result<Decomposition> {
    let report = validate_crossed_module(cm);
    if !report.is_valid() {
        return Err(Error::InvalidActionData("not a crossed module".into()));
    }
    let (h, g) = (&cm.h, &cm.g);
    let ksub: Subgroup = h.subgroup(&report.kernel);
    let (zg, z_embed) = h.restrict(&ksub);
    let zpos = |y: usize| ksub.position(y).expect("lies in ker alpha");
    let action = g
        .elements()
        .map(|x| Automorphism::from_permutation(z_embed.iter().map(|&y| zpos(cm.action[x].apply(y))).collect()))
        .collect();
    let z = CoefficientModule::new(zg, g.clone(), action)?;
    let n_elems = report.image.clone();
    let section: Vec<usize> =
        n_elems.iter().map(|&m| h.elements().find(|&y| cm.alpha.apply(y) == m).unwrap()).collect();
    let nsub = g.subgroup(&n_elems);
    let npos = |x: usize| nsub.position(x).unwrap();
    let nn = n_elems.len();
    let f = Cochain::from_fn(2, nn, |t| {
        let (a, b) = (t[0], t[1]);
        let ab = npos(g.mul(n_elems[a], n_elems[b]));
        zpos(h.mul(h.mul(section[a], section[b]), h.inv(section[ab])))
    });
    let theta = g
        .elements()
        .map(|x| {
            let xi = g.inv(x);
            Cochain::from_fn(1, nn, |t| {
                let m = t[0];
                let pre = npos(g.conj(xi, n_elems[m]));
                zpos(h.mul(cm.action[x].apply(section[pre]), h.inv(section[m])))
            })
        })
        .collect();
    let data = ActionData::new(g, &n_elems, &z, f, theta)?;
    Ok(Decomposition { data, z_embed, section })
}

/// All theta' with (f, theta') in D, as theta + q*alpha for alpha in Z^1(G/N, Hom(N, Z)).
pub fn d_f_torsor(ad: &ActionData, budget: usize) -> Result<Vec<Vec<Cochain>>> {
    let (hom_group, homs) = hom_module(ad);
    let (qg, proj) = ad.quotient();
    let sigma = coset_reps(&ad.g, &proj, qg.order(), false);
    let action: Vec<Automorphism> = qg
        .elements()
        .map(|x| {
            let perm = homs.iter().map(|chi| homs.iter().position(|c| *c == ad.act_c1(sigma[x], chi)).unwrap()).collect();
            Automorphism::from_permutation(perm)
        })
        .collect();
    let alphas = crossed_homomorphisms(&qg, &hom_group, &action, budget)?;
    let out: Vec<Vec<Cochain>> = alphas
        .iter()
        .map(|alpha| {
            ad.g.elements().map(|x| ad.z.add_cochains(&ad.theta[x], &homs[alpha.get(&[proj.apply(x)])])).collect()
        })
        .collect();
    for (i, theta) in out.iter().enumerate() {
        ActionData::new(&ad.g, &ad.n_elems, &ad.z, ad.f.clone(), theta.clone()).expect("torsor moves stay in D(f)");
        assert!(out[..i].iter().all(|t| t != theta), "torsor action is free");
    }
    Ok(out)
}

/// Hom(N, Z) as an abelian group under pointwise addition, zero first.
fn hom_module(ad: &ActionData) -> (Group, Vec<Cochain>) {
    let homs: Vec<Cochain> = crate::group::homomorphisms(&ad.n, ad.z.carrier())
        .into_iter()
        .map(|h| Cochain::from_fn(1, ad.n.order(), |t| h.apply(t[0])))
        .collect();
    let mut homs = homs;
    let zero = homs.iter().position(Cochain::is_zero).unwrap();
    homs.swap(0, zero);
    let rows: Vec<Vec<usize>> = homs
        .iter()
        .map(|a| homs.iter().map(|b| homs.iter().position(|c| *c == ad.z.add_cochains(a, b)).unwrap()).collect())
        .collect();
    (Group::from_table(&rows).expect("Hom(N, Z) is a group"), homs)
}

/// Smallest (or largest) element of each coset, indexed by quotient label.
fn coset_reps(g: &Group, proj: &GroupMap, m: usize, largest: bool) -> Vec<usize> {
    let mut reps = vec![usize::MAX; m];
    for x in g.elements() {
        let c = proj.apply(x);
        if reps[c] == usize::MAX || largest {
            reps[c] = x;
        }
    }
    reps[0] = 0;
    reps
}

/// Q(f, theta) in H^3(G/N, Z) with the choices used.
#[derive(Clone, Debug)]
pub struct QObstruction {
    pub quotient: Group,
    pub module: CoefficientModule,
    pub h3: Cohomology,
    pub class: CohomologyClass,
    pub sigma: Vec<usize>,
    fs: FactorSystem,
    proj: GroupMap,
}

struct QData {
    quotient: Group,
    proj: GroupMap,
    module: CoefficientModule,
    sigma: Vec<usize>,
    fs: FactorSystem,
    cocycle: Cochain,
}

fn q_data(ad: &ActionData, largest: bool, pert: Option<&Cochain>) -> Result<QData> {
    let g = &ad.g;
    let zc = ad.z.carrier();
    let k = zc.order();
    let (quotient, proj) = ad.quotient();
    let sigma = coset_reps(g, &proj, quotient.order(), largest);
    let nsub = g.subgroup(&ad.n_elems);
    let npos = |x: usize| nsub.position(x).unwrap();
    let module = CoefficientModule::new(zc.clone(), quotient.clone(), sigma.iter().map(|&s| ad.z.action()[s].clone()).collect())?;
    let hat = ad.hat_group();
    let s: Vec<Automorphism> = sigma.iter().map(|&x| ad.hat_action(&hat, x)).collect();
    let lift = OuterActionLift::new(&quotient, &hat, s)?;
    let delta = |a: usize, b: usize| npos(g.mul(g.mul(sigma[a], sigma[b]), g.inv(sigma[quotient.mul(a, b)])));
    let omega = Cochain::from_fn(2, quotient.order(), |t| {
        let z0 = pert.map_or(0, |p| p.get(t));
        z0 + k * delta(t[0], t[1])
    });
    let fs = FactorSystem::new(lift, omega)?;
    let raw = fs.d_s_omega_raw();
    assert!(raw.values().iter().all(|&v| v < k), "d_S omega lies in Z");
    let cocycle = raw.clone();
    if pert.is_none() {
        // expansion in product coordinates
        for (t, v) in raw.entries() {
            let (a, b, c) = (t[0], t[1], t[2]);
            let sa = sigma[a];
            let moved = ad.conj_n(sa, delta(b, c));
            let terms = [
                ad.theta[sa].get(&[moved]),
                ad.f.get(&[moved, delta(a, quotient.mul(b, c))]),
                zc.inv(ad.f.get(&[delta(a, b), delta(quotient.mul(a, b), c)])),
            ];
            let expect = terms.iter().fold(0, |acc, &x| zc.mul(acc, x));
            assert_eq!(v, expect, "d_S omega matches the product-coordinate expansion");
        }
    }
    Ok(QData { quotient, proj, module, sigma, fs, cocycle })
}

pub fn obstruction_q(ad: &ActionData) -> Result<QObstruction> {
    obstruction_q_seeded(ad, 0)
}

/// Q(f, theta); recomputed with the other section and a perturbed omega and asserted equal.
pub fn obstruction_q_seeded(ad: &ActionData, seed: u64) -> Result<QObstruction> {
    let base = q_data(ad, false, None)?;
    let h3 = Cohomology::new(&base.module, 3)?;
    let class = h3.class_of(&base.cocycle)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = ad.z.carrier().order();
    let pert = Cochain::from_fn(2, base.quotient.order(), |_| rng.gen_range(0..k));
    for (largest, p) in [(true, None), (false, Some(&pert)), (true, Some(&pert))] {
        let other = q_data(ad, largest, p)?;
        assert_eq!(h3.coords(&other.cocycle)?, class.coords, "Q does not depend on the section or omega");
    }
    Ok(QObstruction {
        quotient: base.quotient,
        module: base.module,
        h3,
        class,
        sigma: base.sigma,
        fs: base.fs,
        proj: base.proj,
    })
}

/// A cocycle f_G on G whose restrictions give (f, theta), with the extension it defines.
#[derive(Clone, Debug)]
pub struct Enlargement {
    pub f_g: Cochain,
    pub ext: ExtensionGroup,
}

pub fn enlarge(ad: &ActionData) -> Result<Option<Enlargement>> {
    let q = obstruction_q(ad)?;
    if !q.class.is_zero() {
        return Ok(None);
    }
    let (g, zc) = (&ad.g, ad.z.carrier());
    let k = zc.order();
    let d = q.fs.d_s_omega_raw();
    let beta = q.h3.preimage(&q.module.neg_cochain(&d)).expect("Q = 0");
    let hat = q.fs.n().clone();
    let omega = Cochain::from_fn(2, q.quotient.order(), |t| hat.mul(beta.get(t), q.fs.w(t[0], t[1])));
    let fs = FactorSystem::new(q.fs.lift().clone(), omega)?;
    let big = build_extension(&fs)?;
    let to_g = |x: usize| {
        let (hh, c) = big.pair(x);
        g.mul(ad.n_elems[hh / k], q.sigma[c])
    };
    let proj = GroupMap { image: big.total().elements().map(to_g).collect() };
    proj.check_homomorphism(big.total(), g)?;
    let nsub = g.subgroup(&ad.n_elems);
    let tau: Vec<usize> = g
        .elements()
        .map(|x| {
            let c = q.proj.apply(x);
            let n0 = nsub.position(g.mul(x, g.inv(q.sigma[c]))).unwrap();
            big.flat(k * n0, c)
        })
        .collect();
    let iota: Vec<usize> = zc.elements().map(|z| big.flat(z, 0)).collect();
    let read = read_factor_system(big.total(), &iota, &proj, &tau, g, zc)?;
    assert_eq!(read.lift().maps(), ad.z.action(), "the enlarged extension induces the module structure");
    let f_g = read.omega().clone();
    let back = ActionData::from_global(g, &ad.n_elems, &ad.z, &f_g)?;
    assert_eq!(back.f, ad.f, "f_G restricts to f on N x N");
    assert_eq!(back.theta, ad.theta, "f~_G restricts to theta on G x N");
    let ext = build_extension(&read)?;
    Ok(Some(Enlargement { f_g, ext }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, dihedral, named};
    use crate::cohomology::Cohomology;

    fn check_round_trip(g: &Group, n_elems: &[usize], z: &CoefficientModule) {
        let h2 = Cohomology::new(z, 2).unwrap();
        for c in h2.all_coords() {
            let f_g = h2.cocycle(&c);
            let ad = ActionData::from_global(g, n_elems, z, &f_g).unwrap();
            assert!(obstruction_q(&ad).unwrap().class.is_zero());
            let e = enlarge(&ad).unwrap().unwrap();
            let back = ActionData::from_global(g, n_elems, z, &e.f_g).unwrap();
            assert_eq!(back.f(), ad.f());
            let d = decompose(&ad.crossed_module()).unwrap();
            assert_eq!(d.data.f(), ad.f());
            assert_eq!(d.data.theta(), ad.theta());
        }
    }

    #[test]
    fn global_cocycles_enlarge() {
        let g = cyclic(4);
        check_round_trip(&g, &[0, 2], &CoefficientModule::trivial(cyclic(2), g.clone()).unwrap());
        let g = dihedral(4);
        let z = CoefficientModule::trivial(cyclic(2), g.clone()).unwrap();
        check_round_trip(&g, &[0, 1, 2, 3], &z);
        check_round_trip(&g, &[0, 2], &z);
        let g = named("V4").unwrap();
        check_round_trip(&g, &[0, 1], &CoefficientModule::trivial(cyclic(4), g.clone()).unwrap());
    }
}
