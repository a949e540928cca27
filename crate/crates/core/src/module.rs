//! Finite abelian groups with a group acting by automorphisms, in invariant-factor coordinates.

use std::collections::HashMap;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::{Automorphism, Group};
use crate::snf::{lcm, smith_int, Mat};

/// A finite abelian group A (written additively, element 0 is zero) with a G-action.
#[derive(Clone, Debug)]
pub struct CoefficientModule {
    carrier: Group,
    actor: Group,
    action: Vec<Automorphism>,
    factors: Vec<i64>,
    coords: Vec<Vec<i64>>,
    elem_of: HashMap<Vec<i64>, usize>,
    basis: Vec<usize>,
    matrices: Vec<Mat>,
}

impl CoefficientModule {
    pub fn new(carrier: Group, actor: Group, action: Vec<Automorphism>) -> Result<Self> {
        carrier.check_abelian()?;
        if action.len() != actor.order() || !action[0].is_identity() {
            return Err(Error::MalformedTable("action must start with the identity".into()));
        }
        for g in actor.elements() {
            for h in actor.elements() {
                if action[g].compose(&action[h]) != action[actor.mul(g, h)] {
                    return Err(Error::NotAHomomorphism { a: g, b: h });
                }
            }
        }
        let (factors, coords, basis) = decompose(&carrier);
        let elem_of = coords.iter().enumerate().map(|(x, c)| (c.clone(), x)).collect();
        let mut m = CoefficientModule {
            carrier,
            actor,
            action,
            factors,
            coords,
            elem_of,
            basis,
            matrices: Vec::new(),
        };
        m.matrices = m
            .actor
            .elements()
            .map(|g| {
                let k = m.rank();
                let cols: Vec<&Vec<i64>> = m.basis.iter().map(|&b| &m.coords[m.action[g].apply(b)]).collect();
                (0..k).map(|i| (0..k).map(|j| cols[j][i]).collect()).collect()
            })
            .collect();
        Ok(m)
    }

    pub fn trivial(carrier: Group, actor: Group) -> Result<Self> {
        let n = carrier.order();
        let action = vec![Automorphism::identity(n); actor.order()];
        Self::new(carrier, actor, action)
    }

    pub fn carrier(&self) -> &Group {
        &self.carrier
    }

    pub fn actor(&self) -> &Group {
        &self.actor
    }

    pub fn action(&self) -> &[Automorphism] {
        &self.action
    }

    /// Invariant factors d_1 | d_2 | ... (all > 1).
    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent(&self) -> i64 {
        self.factors.iter().fold(1, |a, &d| lcm(a, d))
    }

    pub fn coords(&self, x: usize) -> &[i64] {
        &self.coords[x]
    }

    pub fn element(&self, c: &[i64]) -> usize {
        let key: Vec<i64> = c.iter().zip(&self.factors).map(|(&x, &d)| x.rem_euclid(d)).collect();
        self.elem_of[&key]
    }

    /// Elements realizing the standard basis vectors.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn matrix(&self, g: usize) -> &Mat {
        &self.matrices[g]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.carrier.mul(a, b)
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.carrier.mul(a, self.carrier.inv(b))
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.carrier.inv(a)
    }

    #[inline]
    pub fn act(&self, g: usize, a: usize) -> usize {
        self.action[g].apply(a)
    }

    pub fn scale(&self, k: i64, a: usize) -> usize {
        let c: Vec<i64> = self.coords[a].iter().map(|&x| x * k).collect();
        self.element(&c)
    }

    pub fn add_cochains(&self, a: &Cochain, b: &Cochain) -> Cochain {
        a.pointwise(b, &self.carrier)
    }

    pub fn sub_cochains(&self, a: &Cochain, b: &Cochain) -> Cochain {
        a.pointwise(&b.pointwise_inverse(&self.carrier), &self.carrier)
    }

    pub fn neg_cochain(&self, a: &Cochain) -> Cochain {
        a.pointwise_inverse(&self.carrier)
    }

    /// Coordinates of a cochain, tuple-major.
    pub fn to_vector(&self, c: &Cochain) -> Vec<i64> {
        c.values().iter().flat_map(|&v| self.coords[v].iter().copied()).collect()
    }

    pub fn from_vector(&self, degree: usize, v: &[i64]) -> Cochain {
        let k = self.rank();
        let n = crate::cochain::num_tuples(degree, self.actor.order());
        let values = (0..n).map(|t| if k == 0 { 0 } else { self.element(&v[t * k..(t + 1) * k]) }).collect();
        Cochain::from_values(degree, self.actor.order(), values).expect("length")
    }

    /// Same carrier, acting group and action.
    pub fn same_as(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.actor == other.actor && self.action == other.action
    }
}

/// Invariant factors, per-element coordinates and basis elements of a finite abelian group.
fn decompose(a: &Group) -> (Vec<i64>, Vec<Vec<i64>>, Vec<usize>) {
    let gens = a.generators();
    let k = gens.len();
    let n = a.order();
    let mut vec_of: Vec<Option<Vec<i64>>> = vec![None; n];
    vec_of[0] = Some(vec![0; k]);
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (j, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            if vec_of[y].is_none() {
                let mut v = vec_of[x].clone().unwrap();
                v[j] += 1;
                vec_of[y] = Some(v);
                queue.push(y);
            }
        }
    }
    let vecs: Vec<Vec<i64>> = vec_of.into_iter().map(Option::unwrap).collect();
    // relation columns v(x) + e_j - v(x + g_j)
    let mut rel: Vec<Vec<i64>> = Vec::new();
    for x in 0..n {
        for (j, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            let col: Vec<i64> = (0..k).map(|r| vecs[x][r] + i64::from(r == j) - vecs[y][r]).collect();
            if col.iter().any(|&c| c != 0) {
                rel.push(col);
            }
        }
    }
    if k == 0 {
        return (Vec::new(), vec![Vec::new(); n], Vec::new());
    }
    let mat: Mat = (0..k).map(|r| rel.iter().map(|c| c[r]).collect()).collect();
    let s = smith_int(&mat, rel.len());
    let keep: Vec<usize> = (0..k).filter(|&i| s.diag.get(i).copied().unwrap_or(0) != 1).collect();
    let factors: Vec<i64> = keep.iter().map(|&i| s.diag[i]).collect();
    assert!(factors.iter().all(|&d| d > 1), "finite abelian group");
    let coords = vecs
        .iter()
        .map(|v| {
            keep.iter()
                .zip(&factors)
                .map(|(&i, &d)| s.u[i].iter().zip(v).map(|(x, y)| x * y).sum::<i64>().rem_euclid(d))
                .collect()
        })
        .collect();
    let basis = keep
        .iter()
        .map(|&i| {
            let mut x = 0;
            for (l, &g) in gens.iter().enumerate() {
                let c = s.u_inv[l][i].rem_euclid(a.element_order(g) as i64) as usize;
                x = a.mul(x, a.pow(g, c));
            }
            x
        })
        .collect();
    (factors, coords, basis)
}
