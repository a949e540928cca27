//! Non-abelian low-degree cochains: delta_f, crossed homomorphisms and the pointed set H^1.

use std::collections::HashMap;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::{Automorphism, Group};

pub const DEFAULT_BUDGET: usize = 5_000_000;

/// delta_f(g, g') = f(g) f(g') f(gg')^-1.
pub fn delta_nonabelian(g: &Group, n: &Group, f: &Cochain) -> Cochain {
    Cochain::from_fn(2, g.order(), |t| {
        let (a, b) = (t[0], t[1]);
        n.mul(n.mul(f.get(&[a]), f.get(&[b])), n.inv(f.get(&[g.mul(a, b)])))
    })
}

pub fn check_action(g: &Group, n: &Group, s: &[Automorphism]) -> Result<()> {
    if s.len() != g.order() || s.iter().any(|a| a.len() != n.order()) || !s[0].is_identity() {
        return Err(Error::MalformedTable("action has the wrong shape".into()));
    }
    for a in g.elements() {
        for b in g.elements() {
            if s[a].compose(&s[b]) != s[g.mul(a, b)] {
                return Err(Error::NotAHomomorphism { a, b });
            }
        }
    }
    Ok(())
}

/// f(gg') = f(g) S(g)(f(g')) for all g, g'.
pub fn is_crossed_homomorphism(g: &Group, n: &Group, s: &[Automorphism], f: &Cochain) -> bool {
    g.elements().all(|a| {
        g.elements().all(|b| f.get(&[g.mul(a, b)]) == n.mul(f.get(&[a]), s[a].apply(f.get(&[b]))))
    })
}

/// All 1-cocycles G -> N for the action S, by assigning generator values and propagating.
pub fn crossed_homomorphisms(g: &Group, n: &Group, s: &[Automorphism], budget: usize) -> Result<Vec<Cochain>> {
    check_action(g, n, s)?;
    let gens = g.generators();
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; g.order()];
    img[0] = 0;
    let mut nodes = 0usize;
    propagate(g, n, &gens, 0, &mut img, &mut nodes, budget, &mut |img| {
        out.push(Cochain::from_fn(1, g.order(), |t| img[t[0]]));
        true
    }, &|x, fx, _gi, fgi| n.mul(fx, s[x].apply(fgi)))?;
    Ok(out)
}

/// Generic generator propagation: value(x * g_i) = rule(x, value(x), g_i, value(g_i)).
#[allow(clippy::too_many_arguments)]
pub(crate) fn propagate(
    g: &Group,
    n: &Group,
    gens: &[usize],
    j: usize,
    img: &mut Vec<usize>,
    nodes: &mut usize,
    budget: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
    rule: &dyn Fn(usize, usize, usize, usize) -> usize,
) -> Result<bool> {
    if j == gens.len() {
        return Ok(visit(img));
    }
    for c in n.elements() {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::bound("search budget", *nodes, budget));
        }
        let gj = gens[j];
        let mut added = vec![gj];
        img[gj] = c;
        let mut ok = true;
        let mut frontier: Vec<usize> = g.elements().filter(|&x| img[x] != usize::MAX).collect();
        let mut i = 0;
        'outer: while i < frontier.len() {
            let x = frontier[i];
            i += 1;
            for &gk in &gens[..=j] {
                let y = g.mul(x, gk);
                let v = rule(x, img[x], gk, img[gk]);
                if img[y] == usize::MAX {
                    img[y] = v;
                    added.push(y);
                    frontier.push(y);
                } else if img[y] != v {
                    ok = false;
                    break 'outer;
                }
            }
        }
        let go_on = if ok { propagate(g, n, gens, j + 1, img, nodes, budget, visit, rule)? } else { true };
        for &x in &added {
            img[x] = usize::MAX;
        }
        if !go_on {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orbits of N on Z^1(G, N)_S under (n.f)(g) = n f(g) S(g)(n)^-1.
#[derive(Clone, Debug)]
pub struct PointedH1 {
    pub cocycles: Vec<Cochain>,
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
}

impl PointedH1 {
    /// Orbit index of a cocycle, if it is one of the enumerated cocycles.
    pub fn class_of(&self, f: &Cochain) -> Option<usize> {
        self.cocycles.iter().position(|c| c == f).map(|i| self.orbit_of[i])
    }

    pub fn base_point(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

pub fn act_on_cocycle(g: &Group, n: &Group, s: &[Automorphism], m: usize, f: &Cochain) -> Cochain {
    Cochain::from_fn(1, g.order(), |t| n.mul(n.mul(m, f.get(t)), n.inv(s[t[0]].apply(m))))
}

pub fn h1_pointed(g: &Group, n: &Group, s: &[Automorphism], budget: usize) -> Result<PointedH1> {
    let cocycles = crossed_homomorphisms(g, n, s, budget)?;
    let index: HashMap<&Cochain, usize> = cocycles.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut orbit_of = vec![usize::MAX; cocycles.len()];
    let mut orbits = Vec::new();
    for i in 0..cocycles.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> =
            n.elements().map(|m| index[&act_on_cocycle(g, n, s, m, &cocycles[i])]).collect();
        members.sort_unstable();
        members.dedup();
        for &x in &members {
            orbit_of[x] = orbits.len();
        }
        orbits.push(members);
    }
    Ok(PointedH1 { cocycles, orbits, orbit_of })
}

/// The start of Z(N)^G -> N^G -> N_ad^G -> H^1(G, Z(N)) -> H^1(G, N) -> H^1(G, N_ad),
/// computed exhaustively with exactness checked at each inner node.
#[derive(Clone, Debug)]
pub struct SevenTermPrefix {
    pub center_fixed: Vec<usize>,
    pub fixed: Vec<usize>,
    /// N_ad^G, in quotient labels (cosets ordered by smallest element).
    pub adjoint_fixed: Vec<usize>,
    /// H^1(G, Z(N)) coordinates of the connecting image of each element of N_ad^G.
    pub connecting: Vec<Vec<i64>>,
    pub h1_center: Vec<i64>,
    /// Orbit in H^1(G, N) of each H^1(G, Z(N)) class, in `all_coords` order.
    pub center_to_n: Vec<usize>,
    /// Orbit in H^1(G, N_ad) of each H^1(G, N) orbit.
    pub n_to_adjoint: Vec<usize>,
    pub exact_at_fixed: bool,
    pub exact_at_adjoint_fixed: bool,
    pub exact_at_h1_center: bool,
    pub exact_at_h1: bool,
}

impl SevenTermPrefix {
    pub fn is_exact(&self) -> bool {
        self.exact_at_fixed && self.exact_at_adjoint_fixed && self.exact_at_h1_center && self.exact_at_h1
    }
}

pub fn seven_term_prefix(g: &Group, n: &Group, s: &[Automorphism], budget: usize) -> Result<SevenTermPrefix> {
    use crate::cohomology::Cohomology;
    use crate::factor::Center;

    check_action(g, n, s)?;
    let z = Center::of(n);
    let (nad, q) = n.quotient(&n.center())?;
    let rep: Vec<usize> = nad.elements().map(|y| n.elements().find(|&x| q.apply(x) == y).unwrap()).collect();
    let s_ad: Vec<Automorphism> = s
        .iter()
        .map(|a| Automorphism::from_permutation(rep.iter().map(|&r| q.apply(a.apply(r))).collect()))
        .collect();
    let fixed_by = |grp: &Group, act: &[Automorphism]| -> Vec<usize> {
        grp.elements().filter(|&x| act.iter().all(|a| a.apply(x) == x)).collect()
    };
    let fixed = fixed_by(n, s);
    let center_fixed: Vec<usize> = fixed.iter().copied().filter(|&x| z.contains(x)).collect();
    let adjoint_fixed = fixed_by(&nad, &s_ad);

    let m = z.module(g, s)?;
    let h1z = Cohomology::new(&m, 1)?;
    let h1n = h1_pointed(g, n, s, budget)?;
    let h1ad = h1_pointed(g, &nad, &s_ad, budget)?;

    // N^G -> N_ad^G has kernel Z(N)^G
    let mut image_fixed: Vec<usize> = fixed.iter().map(|&x| q.apply(x)).collect();
    image_fixed.sort_unstable();
    image_fixed.dedup();
    let exact_at_fixed = fixed.iter().filter(|&&x| q.apply(x) == 0).count() == center_fixed.len();

    // connecting map: x = q(r) fixed -> [g -> r^-1 S(g)(r)]
    let connecting: Vec<Vec<i64>> = adjoint_fixed
        .iter()
        .map(|&y| {
            let r = rep[y];
            let c = Cochain::from_fn(1, g.order(), |t| n.mul(n.inv(r), s[t[0]].apply(r)));
            let c = z.from_n(&c).expect("fixed classes give central values");
            h1z.coords(&c).expect("the connecting image is a cocycle")
        })
        .collect();
    let zero: Vec<i64> = vec![0; h1z.invariants().len()];
    let mut kernel_of_delta: Vec<usize> =
        adjoint_fixed.iter().zip(&connecting).filter(|(_, c)| **c == zero).map(|(&y, _)| y).collect();
    kernel_of_delta.sort_unstable();
    let exact_at_adjoint_fixed = kernel_of_delta == image_fixed;

    let all = h1z.all_coords();
    let center_to_n: Vec<usize> = all
        .iter()
        .map(|c| h1n.class_of(&z.to_n(&h1z.cocycle(c))).expect("central cocycles are cocycles"))
        .collect();
    let mut delta_image: Vec<&Vec<i64>> = connecting.iter().collect();
    delta_image.sort();
    delta_image.dedup();
    let mut trivial_in_n: Vec<&Vec<i64>> = all.iter().zip(&center_to_n).filter(|(_, &o)| o == 0).map(|(c, _)| c).collect();
    trivial_in_n.sort();
    let exact_at_h1_center = delta_image == trivial_in_n;

    let n_to_adjoint: Vec<usize> = h1n
        .orbits
        .iter()
        .map(|orbit| {
            let f = &h1n.cocycles[orbit[0]];
            h1ad.class_of(&f.map_values(|x| q.apply(x))).expect("projected cocycles are cocycles")
        })
        .collect();
    let mut image_center: Vec<usize> = center_to_n.clone();
    image_center.sort_unstable();
    image_center.dedup();
    let over_base: Vec<usize> = (0..n_to_adjoint.len()).filter(|&o| n_to_adjoint[o] == 0).collect();
    let exact_at_h1 = image_center == over_base;

    Ok(SevenTermPrefix {
        center_fixed,
        fixed,
        adjoint_fixed,
        connecting,
        h1_center: h1z.invariants().to_vec(),
        center_to_n,
        n_to_adjoint,
        exact_at_fixed,
        exact_at_adjoint_fixed,
        exact_at_h1_center,
        exact_at_h1,
    })
}
