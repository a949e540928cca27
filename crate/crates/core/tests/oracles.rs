//! Small worked examples checked against brute-force oracles written independently of the library.

use std::collections::{BTreeSet, HashSet};

use extkit::autext::{
    aut_preserving, aut_preserving_brute_force, compatible_pairs, gauge_group, lift_group_action, monoid_mul,
    total_cocycles, LiftedAction, WellsContext,
};
use extkit::catalog::named;
use extkit::cochain::{tuples, Cochain};
use extkit::cohomology::{differential, Cohomology};
use extkit::factor::{
    build_extension, c1_act, conjugation_in_extension, equivalent, is_split, semidirect, ExtensionGroup, FactorSystem,
    OuterActionLift,
};
use extkit::group::{automorphism_group, isomorphic, make_group, Automorphism, Group, OuterClassTable};
use extkit::io;
use extkit::kernel::{characteristic_class, choose_omega, kernel_of_lift};
use extkit::module::CoefficientModule;
use extkit::nonabelian::{crossed_homomorphisms, h1_pointed, DEFAULT_BUDGET};
use extkit::Error;

// ---- oracles

fn mul(t: &[Vec<usize>], a: usize, b: usize) -> usize {
    t[a][b]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn brute_automorphisms(g: &Group) -> Vec<Vec<usize>> {
    let t = g.table_rows();
    permutations(g.order())
        .into_iter()
        .filter(|p| {
            (0..t.len()).all(|a| (0..t.len()).all(|b| p[mul(&t, a, b)] == mul(&t, p[a], p[b])))
        })
        .collect()
}

fn brute_center(g: &Group) -> Vec<usize> {
    let t = g.table_rows();
    (0..t.len()).filter(|&z| (0..t.len()).all(|x| t[z][x] == t[x][z])).collect()
}

fn order_profile(t: &[Vec<usize>]) -> Vec<usize> {
    let mut v: Vec<usize> = (0..t.len())
        .map(|x| {
            let (mut y, mut k) = (x, 1);
            while y != 0 {
                y = t[y][x];
                k += 1;
            }
            k
        })
        .collect();
    v.sort_unstable();
    v
}

fn profile_of(name: &str) -> Vec<usize> {
    order_profile(&named(name).unwrap().table_rows())
}

/// Normalized cochains of the given degree, every value assignment.
fn all_cochains(degree: usize, g: &Group, a: &Group) -> Vec<Cochain> {
    let slots = tuples(degree, g.order()).count();
    let total = a.order().pow(slots as u32);
    (0..total)
        .map(|mut k| {
            let vals: Vec<usize> = (0..slots)
                .map(|_| {
                    let v = k % a.order();
                    k /= a.order();
                    v
                })
                .collect();
            let mut it = vals.into_iter();
            Cochain::from_fn(degree, g.order(), |_| it.next().unwrap())
        })
        .collect()
}

/// Inhomogeneous differential written out by hand, abelian coefficients.
fn d_oracle(a: &Group, act: &[Automorphism], g: &Group, f: &Cochain) -> Cochain {
    let p = f.degree();
    Cochain::from_fn(p + 1, g.order(), |x| {
        let mut acc = act[x[0]].apply(f.get(&x[1..]));
        for i in 0..p {
            let mut y: Vec<usize> = x[..i].to_vec();
            y.push(g.mul(x[i], x[i + 1]));
            y.extend_from_slice(&x[i + 2..]);
            let v = f.get(&y);
            acc = a.mul(acc, if i % 2 == 0 { a.inv(v) } else { v });
        }
        let last = f.get(&x[..p]);
        a.mul(acc, if p.is_multiple_of(2) { a.inv(last) } else { last })
    })
}

/// |H^p| = |Z^p| / |B^p| by enumerating both cochain groups.
fn brute_h_order(g: &Group, a: &Group, act: &[Automorphism], p: usize) -> usize {
    let z = all_cochains(p, g, a).into_iter().filter(|f| d_oracle(a, act, g, f).is_zero()).count();
    let b: HashSet<Cochain> = if p == 0 {
        HashSet::new()
    } else {
        all_cochains(p - 1, g, a).iter().map(|f| d_oracle(a, act, g, f)).collect()
    };
    z / b.len().max(1)
}

fn ext(g: &str, n: &str, s: &str, omega: impl Fn(&[usize]) -> usize) -> ExtensionGroup {
    let (g, n) = (named(g).unwrap(), named(n).unwrap());
    let s = io::resolve_action(s, &g, &n).unwrap();
    let lift = OuterActionLift::new(&g, &n, s).unwrap();
    let w = Cochain::from_fn(2, g.order(), omega);
    build_extension(&FactorSystem::new(lift, w).unwrap()).unwrap()
}

/// The central extension of V4 by C2 with the given H^2 coordinates.
fn v4_ext(coords: &[i64]) -> ExtensionGroup {
    let (g, n) = (named("V4").unwrap(), named("C2").unwrap());
    let h2 = Cohomology::new(&CoefficientModule::trivial(n.clone(), g.clone()).unwrap(), 2).unwrap();
    let w = h2.cocycle(coords);
    build_extension(&FactorSystem::new(OuterActionLift::trivial(&g, &n), w).unwrap()).unwrap()
}

fn brute_is_split(fs: &FactorSystem) -> bool {
    let (g, n) = (fs.g(), fs.n());
    all_cochains(1, g, n).iter().any(|h| {
        g.elements().all(|a| {
            g.elements().all(|b| fs.mul((h.get(&[a]), a), (h.get(&[b]), b)) == (h.get(&[g.mul(a, b)]), g.mul(a, b)))
        })
    })
}

/// Automorphisms of the total group mapping iota(N) onto itself.
fn brute_preserving(e: &ExtensionGroup) -> Vec<Vec<usize>> {
    let image: BTreeSet<usize> = e.n().elements().map(|a| e.iota(a)).collect();
    brute_automorphisms(e.total()).into_iter().filter(|p| image.iter().all(|x| image.contains(&p[*x]))).collect()
}

// ---- groups

#[test]
fn intercalate_swap_breaks_associativity() {
    let c6 = named("C6").unwrap();
    let mut t = c6.table_rows();
    let (a, b) = (1, 4);
    for (r, c) in [(a, a), (a, b), (b, a), (b, b)] {
        t[r][c] = if (r, c) == (a, a) || (r, c) == (b, b) { 5 } else { 2 };
    }
    let failing: Vec<(usize, usize, usize)> = (0..6)
        .flat_map(|x| (0..6).flat_map(move |y| (0..6).map(move |z| (x, y, z))))
        .filter(|&(x, y, z)| t[t[x][y]][z] != t[x][t[y][z]])
        .collect();
    assert!(!failing.is_empty());
    match make_group(&t) {
        Err(Error::NotAssociative { a, b, c }) => assert!(failing.contains(&(a, b, c))),
        other => panic!("expected NotAssociative, got {other:?}"),
    }
}

#[test]
fn centers_by_scan() {
    for (name, size) in [("Q8", 2), ("S3", 1), ("D4", 2), ("C6", 6)] {
        let g = named(name).unwrap();
        assert_eq!(brute_center(&g).len(), size);
        assert_eq!(g.center().elements(), brute_center(&g).as_slice());
    }
}

#[test]
fn automorphism_counts_by_permutation_filter() {
    for (name, size) in [("V4", 6), ("Q8", 24), ("S3", 6), ("C8", 4), ("D4", 8)] {
        let g = named(name).unwrap();
        let brute: BTreeSet<Vec<usize>> = brute_automorphisms(&g).into_iter().collect();
        let fast: BTreeSet<Vec<usize>> =
            automorphism_group(&g, 64).unwrap().iter().map(|a| a.forward().to_vec()).collect();
        assert_eq!(brute.len(), size, "{name}");
        assert_eq!(fast, brute, "{name}");
    }
}

#[test]
fn inner_and_outer_counts() {
    for (name, inn, out) in [("Q8", 4, 6), ("S3", 6, 1), ("V4", 1, 6)] {
        let g = named(name).unwrap();
        let inner: HashSet<Vec<usize>> =
            g.elements().map(|x| g.elements().map(|y| g.mul(g.mul(x, y), g.inv(x))).collect()).collect();
        assert_eq!(inner.len(), inn, "{name}");
        let table = OuterClassTable::new(&g, 64).unwrap();
        assert_eq!(table.inner_indices().len(), inn);
        assert_eq!(table.num_classes(), out);
        assert_eq!(brute_automorphisms(&g).len(), inn * out);
    }
}

#[test]
fn q8_mod_center_is_v4() {
    let q8 = named("Q8").unwrap();
    let (q, map) = q8.quotient(&q8.center()).unwrap();
    assert_eq!(order_profile(&q.table_rows()), profile_of("V4"));
    map.check_homomorphism(&q8, &q).unwrap();
    assert_eq!(map.kernel(), brute_center(&q8));
}

#[test]
fn isomorphism_search() {
    assert!(isomorphic(&named("C4").unwrap(), &named("V4").unwrap(), 64).unwrap().is_none());
    let d4 = named("D4").unwrap();
    let relabel: Vec<usize> = vec![0, 5, 3, 7, 1, 6, 2, 4];
    let inv: Vec<usize> = (0..8).map(|i| relabel.iter().position(|&r| r == i).unwrap()).collect();
    let t: Vec<Vec<usize>> =
        (0..8).map(|a| (0..8).map(|b| relabel[d4.mul(inv[a], inv[b])]).collect()).collect();
    let other = make_group(&t).unwrap();
    let iso = isomorphic(&d4, &other, 64).unwrap().expect("relabelings are isomorphic");
    iso.check_homomorphism(&d4, &other).unwrap();
    assert!(iso.is_injective());
}

// ---- abelian cohomology

#[test]
fn cohomology_orders_by_enumeration() {
    let inv_c4 = {
        let (g, a) = (named("C2").unwrap(), named("C4").unwrap());
        let s = io::resolve_action("inversion", &g, &a).unwrap();
        (g, a, s)
    };
    let triv = |g: &str, a: &str, p| {
        let (g, a) = (named(g).unwrap(), named(a).unwrap());
        let s = vec![Automorphism::identity(a.order()); g.order()];
        (g, a, s, p)
    };
    let cases = [
        triv("C2", "C4", 1),
        triv("C2", "C4", 2),
        triv("V4", "C2", 2),
        triv("C2", "C2", 3),
        triv("C3", "C3", 2),
        (inv_c4.0.clone(), inv_c4.1.clone(), inv_c4.2.clone(), 1),
        (inv_c4.0, inv_c4.1, inv_c4.2, 2),
    ];
    for (g, a, s, p) in cases {
        let m = CoefficientModule::new(a.clone(), g.clone(), s.clone()).unwrap();
        let h = Cohomology::new(&m, p).unwrap();
        assert_eq!(h.order() as usize, brute_h_order(&g, &a, &s, p), "H^{p} over |G| = {}, |A| = {}", g.order(), a.order());
    }
}

#[test]
fn hand_evaluated_differentials() {
    let (g, a) = (named("C2").unwrap(), named("C2").unwrap());
    let m = CoefficientModule::trivial(a.clone(), g.clone()).unwrap();
    let f = Cochain::from_fn(1, 2, |_| 1);
    assert!(differential(&m, &f).unwrap().is_zero());
    let a4 = named("C4").unwrap();
    for f in all_cochains(1, &g, &a4).iter().chain(&all_cochains(2, &g, &a4)) {
        let s = vec![Automorphism::identity(4); 2];
        let m = CoefficientModule::trivial(a4.clone(), g.clone()).unwrap();
        assert_eq!(differential(&m, f).unwrap(), d_oracle(&a4, &s, &g, f));
    }
}

// ---- non-abelian degree one

#[test]
fn inversion_cocycles_and_orbits() {
    let (g, n) = (named("C2").unwrap(), named("C4").unwrap());
    let s = io::resolve_action("inversion", &g, &n).unwrap();
    let z1 = crossed_homomorphisms(&g, &n, &s, DEFAULT_BUDGET).unwrap();
    assert_eq!(z1.len(), 4);
    // orbits of f(g) under f(g) -> f(g) + 2n
    let orbits: HashSet<BTreeSet<usize>> =
        (0..4).map(|v| (0..4).map(|k| (v + 2 * k) % 4).collect()).collect();
    let h1 = h1_pointed(&g, &n, &s, DEFAULT_BUDGET).unwrap();
    assert_eq!(h1.len(), orbits.len());
    assert_eq!(h1.len(), 2);
}

#[test]
fn crossed_homomorphisms_match_enumeration() {
    let mut checked = 0;
    for (gn, nn) in [("C2", "S3"), ("C3", "S3"), ("C2", "V4"), ("C4", "C4"), ("C2", "Q8")] {
        let (g, n) = (named(gn).unwrap(), named(nn).unwrap());
        for a in automorphism_group(&n, 64).unwrap() {
            // x^k -> a^k on the cyclic group G
            let mut s = vec![Automorphism::identity(n.order()); g.order()];
            for k in 1..g.order() {
                s[g.pow(1, k)] = s[g.pow(1, k - 1)].compose(&a);
            }
            if extkit::nonabelian::check_action(&g, &n, &s).is_err() {
                continue;
            }
            let brute: BTreeSet<Vec<usize>> = all_cochains(1, &g, &n)
                .into_iter()
                .filter(|f| {
                    g.elements()
                        .all(|x| g.elements().all(|y| f.get(&[g.mul(x, y)]) == n.mul(f.get(&[x]), s[x].apply(f.get(&[y])))))
                })
                .map(|f| f.values().to_vec())
                .collect();
            let fast: BTreeSet<Vec<usize>> =
                crossed_homomorphisms(&g, &n, &s, DEFAULT_BUDGET).unwrap().iter().map(|f| f.values().to_vec()).collect();
            assert_eq!(fast, brute, "({gn}, {nn})");
            checked += 1;
        }
    }
    assert!(checked > 10);
}

// ---- factor systems

#[test]
fn named_totals() {
    let c4 = ext("C2", "C2", "trivial", |_| 1);
    assert_eq!(order_profile(&c4.total().table_rows()), profile_of("C4"));
    let v4 = ext("C2", "C2", "trivial", |_| 0);
    assert_eq!(order_profile(&v4.total().table_rows()), profile_of("V4"));
    let q8 = ext("C2", "C4", "inversion", |_| 2);
    assert_eq!(order_profile(&q8.total().table_rows()), profile_of("Q8"));
    let d4 = ext("C2", "C4", "inversion", |_| 0);
    assert_eq!(order_profile(&d4.total().table_rows()), profile_of("D4"));
    let sd = semidirect(&named("C2").unwrap(), &named("C4").unwrap(), io::resolve_action("inversion", &named("C2").unwrap(), &named("C4").unwrap()).unwrap()).unwrap();
    assert_eq!(order_profile(&sd.total().table_rows()), profile_of("D4"));
}

#[test]
fn odd_omega_over_inversion_is_no_group() {
    // omega(g,g) = 1 in C4 is not fixed by inversion
    let (g, n) = (named("C2").unwrap(), named("C4").unwrap());
    let lift = OuterActionLift::new(&g, &n, io::resolve_action("inversion", &g, &n).unwrap()).unwrap();
    let fs = FactorSystem::new(lift, Cochain::from_fn(2, 2, |_| 1)).unwrap();
    assert!(!fs.is_cocycle());
    assert!(make_group(&fs.flattened_table()).is_err());
}

#[test]
fn equivalence_examples() {
    let c4 = ext("C2", "C2", "trivial", |_| 1);
    let fs = c4.factor_system();
    for v in 0..2 {
        let h = Cochain::from_fn(1, 2, |_| v);
        let moved = c1_act(&h, fs);
        assert!(equivalent(fs, &moved).unwrap().is_some());
    }
    let d4 = ext("C2", "C4", "inversion", |_| 0);
    let q8 = ext("C2", "C4", "inversion", |_| 2);
    assert!(equivalent(d4.factor_system(), q8.factor_system()).unwrap().is_none());
}

#[test]
fn splitting_matches_section_search() {
    for e in [
        ext("C2", "C2", "trivial", |_| 1),
        ext("C2", "C2", "trivial", |_| 0),
        ext("C2", "C4", "inversion", |_| 2),
        ext("C2", "C4", "inversion", |_| 0),
        ext("C2", "C4", "trivial", |_| 2),
    ] {
        let fs = e.factor_system();
        let split = is_split(fs, DEFAULT_BUDGET).unwrap();
        assert_eq!(split.is_some(), brute_is_split(fs));
        if let Some(sp) = split {
            sp.section.check_homomorphism(fs.g(), e.total()).unwrap();
        }
    }
}

#[test]
fn conjugation_formula_matches_table() {
    let e = ext("C2", "C4", "inversion", |_| 2);
    let t = e.total();
    for x in t.elements() {
        for y in t.elements() {
            assert_eq!(conjugation_in_extension(&e, x, y), t.mul(t.mul(x, y), t.inv(x)));
        }
    }
}

// ---- kernels

#[test]
fn q8_outer_kernel() {
    let (g, n) = (named("C2").unwrap(), named("Q8").unwrap());
    let table = std::sync::Arc::new(OuterClassTable::new(&n, 64).unwrap());
    // an outer class of order two in Out(Q8) = S3
    let c = (1..table.num_classes()).find(|&c| table.class_mul(c, c) == 0).unwrap();
    let lift = OuterActionLift::new(&g, &n, vec![Automorphism::identity(8), table.representative(c).clone()]).unwrap();
    let k = kernel_of_lift(&table, lift.clone()).unwrap();
    let delta = lift.delta(1, 1);
    let witnesses: Vec<usize> = n
        .elements()
        .filter(|&x| n.elements().all(|y| delta.apply(y) == n.mul(n.mul(x, y), n.inv(x))))
        .collect();
    assert_eq!(witnesses.len(), 2);
    let w = choose_omega(&lift).unwrap();
    assert!(witnesses.contains(&w.get(&[1, 1])));
    assert!(characteristic_class(&k).unwrap().class.is_zero());
}

// ---- extension automorphisms

#[test]
fn direct_product_automorphisms() {
    let v4 = ext("C2", "C2", "trivial", |_| 0);
    assert_eq!(brute_automorphisms(v4.total()).len(), 6);
    assert_eq!(brute_preserving(&v4).len(), 2);
    assert_eq!(aut_preserving(&v4, 64, DEFAULT_BUDGET).unwrap().len(), 2);
}

#[test]
fn preserving_automorphisms_by_permutation_filter() {
    for e in [
        ext("C2", "C4", "inversion", |_| 2),
        ext("C2", "C4", "inversion", |_| 0),
        ext("C2", "C4", "trivial", |_| 0),
        ext("C2", "C2", "trivial", |_| 1),
    ] {
        let brute: BTreeSet<Vec<usize>> = brute_preserving(&e).into_iter().collect();
        let fast: BTreeSet<Vec<usize>> =
            aut_preserving(&e, 64, DEFAULT_BUDGET).unwrap().iter().map(|a| a.nu.forward().to_vec()).collect();
        let filtered: BTreeSet<Vec<usize>> =
            aut_preserving_brute_force(&e, 64).unwrap().iter().map(|a| a.nu.forward().to_vec()).collect();
        assert_eq!(fast, brute);
        assert_eq!(filtered, brute);
    }
}

#[test]
fn wells_class_of_a_composite() {
    // I(p q) = I(p) + p.I(q) on every pair of compatible pairs
    for e in [ext("C2", "C4", "inversion", |_| 2), ext("C2", "C4", "trivial", |_| 1)] {
        let fs = e.factor_system();
        let ctx = WellsContext::new(fs).unwrap();
        let pairs = compatible_pairs(fs, 64).unwrap();
        for p in &pairs {
            for q in &pairs {
                let pq = p.compose(q, fs);
                let lhs = ctx.wells_class(&pq).unwrap().coords;
                let ip = ctx.wells_class(p).unwrap().coords;
                let iq = ctx.wells_class(q).unwrap().coords;
                let moved = ctx.act_on_class(p, &iq).unwrap();
                assert_eq!(lhs, ctx.h2().add_coords(&ip, &moved));
            }
        }
    }
}

#[test]
fn gauge_group_and_monoid() {
    for e in [ext("C2", "C4", "inversion", |_| 2), ext("C2", "C4", "inversion", |_| 0), ext("C2", "C2", "trivial", |_| 1)] {
        let brute = brute_preserving(&e)
            .into_iter()
            .filter(|p| e.total().elements().all(|x| e.proj(p[x]) == e.proj(x)))
            .count();
        assert_eq!(gauge_group(&e, 64, DEFAULT_BUDGET).unwrap().order(), brute);
        let z1 = total_cocycles(&e, DEFAULT_BUDGET).unwrap();
        for a in &z1 {
            for b in &z1 {
                let ab = monoid_mul(&e, a, b);
                assert!(z1.contains(&ab));
                for c in &z1 {
                    assert_eq!(monoid_mul(&e, &ab, c), monoid_mul(&e, a, &monoid_mul(&e, b, c)));
                }
            }
        }
    }
}

#[test]
fn c2_actions_lift_iff_an_involutive_lift_exists() {
    let c2 = named("C2").unwrap();
    let mut lifted = 0;
    for e in [
        ext("C2", "C4", "inversion", |_| 2),
        ext("C2", "C4", "inversion", |_| 0),
        ext("C2", "C2", "trivial", |_| 1),
        ext("C2", "C4", "trivial", |_| 2),
        v4_ext(&[1, 1, 0]),
    ] {
        let fs = e.factor_system();
        let ctx = WellsContext::new(fs).unwrap();
        let auts = aut_preserving_brute_force(&e, 64).unwrap();
        for p in compatible_pairs(fs, 64).unwrap() {
            let square = p.compose(&p, fs);
            if !square.phi.is_identity() || !square.psi.is_identity() || !ctx.wells_class(&p).unwrap().is_zero() {
                continue;
            }
            let oracle = auts.iter().any(|a| a.phi == p.phi && a.psi == p.psi && a.nu.compose(&a.nu).is_identity());
            let pairs = vec![(Automorphism::identity(fs.n().order()), Automorphism::identity(fs.g().order())), (p.phi.clone(), p.psi.clone())];
            match lift_group_action(&e, &c2, &pairs, DEFAULT_BUDGET).unwrap() {
                LiftedAction::Lifted { action, .. } => {
                    assert!(oracle);
                    assert!(action[1].compose(&action[1]).is_identity());
                    let got = extkit::autext::ExtAutomorphism::from_automorphism(&e, &action[1]).unwrap();
                    assert_eq!(got.pair(), (p.phi.clone(), p.psi.clone()));
                    lifted += 1;
                }
                LiftedAction::Obstructed { coords, .. } => {
                    assert!(!oracle);
                    assert!(coords.iter().any(|&c| c != 0));
                }
            }
        }
    }
    assert!(lifted > 0);
}

#[test]
fn trivial_group_always_lifts() {
    let e = ext("C2", "C4", "inversion", |_| 2);
    let id = (Automorphism::identity(4), Automorphism::identity(2));
    match lift_group_action(&e, &named("C1").unwrap(), &[id], DEFAULT_BUDGET).unwrap() {
        LiftedAction::Lifted { action, .. } => assert!(action[0].is_identity()),
        other => panic!("trivial action is obstructed: {other:?}"),
    }
}

#[test]
fn lift_rejects_non_stabilizing_pair() {
    // swapping the two classes over (V4, C2) moves the extension class
    let e = v4_ext(&[1, 1, 0]);
    let fs = e.factor_system();
    let ctx = WellsContext::new(fs).unwrap();
    let c2 = named("C2").unwrap();
    for p in compatible_pairs(fs, 64).unwrap() {
        let square = p.compose(&p, fs);
        if !square.psi.is_identity() || !square.phi.is_identity() || ctx.wells_class(&p).unwrap().is_zero() {
            continue;
        }
        let pairs = vec![(Automorphism::identity(2), Automorphism::identity(4)), (p.phi.clone(), p.psi.clone())];
        assert!(matches!(lift_group_action(&e, &c2, &pairs, DEFAULT_BUDGET), Err(Error::NotStabilizing(1))));
        return;
    }
    panic!("no non-stabilizing involution found");
}
