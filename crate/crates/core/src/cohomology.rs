//! Cohomology of a finite group with coefficients in a finite module, degrees 1 to 3.
//!
//! Cochain groups are handled as (Z/e)^n modulo relation vectors d_i e_(t,i), where e is the
//! exponent of the module, so every reduction stays exact and entries never grow.

use crate::cochain::{num_tuples, tuples, Cochain};
use crate::error::{Error, Result};
use crate::module::CoefficientModule;
use crate::snf::{gcd, smith_int, Mat, ModSnf};

/// Default cap on (|G|-1)^p * rank.
pub const DEFAULT_UNKNOWNS: usize = 200_000;

/// (d f)(g0..gp) = g0.f(g1..gp) + sum_j (-1)^j f(.., g(j-1) gj, ..) + (-1)^(p+1) f(g0..g(p-1)).
/// Defined for 0 < p <= 3, so d o d can be checked on C^1 and C^2.
pub fn differential(m: &CoefficientModule, f: &Cochain) -> Result<Cochain> {
    if f.degree() == 0 || f.degree() > 3 {
        return Err(Error::DegreeUnsupported(f.degree()));
    }
    Ok(differential_any(m, f))
}

pub(crate) fn differential_any(m: &CoefficientModule, f: &Cochain) -> Cochain {
    let g = m.actor();
    let p = f.degree();
    let mut args = vec![0; p];
    Cochain::from_fn(p + 1, g.order(), |t| {
        let mut acc = m.act(t[0], f.get(&t[1..]));
        for j in 1..=p {
            args[..j - 1].copy_from_slice(&t[..j - 1]);
            args[j - 1] = g.mul(t[j - 1], t[j]);
            args[j..].copy_from_slice(&t[j + 1..]);
            let v = f.get(&args);
            acc = if j % 2 == 0 { m.add(acc, v) } else { m.sub(acc, v) };
        }
        let last = f.get(&t[..p]);
        if (p + 1).is_multiple_of(2) {
            m.add(acc, last)
        } else {
            m.sub(acc, last)
        }
    })
}

/// Matrix of d: C^p -> C^(p+1) in module coordinates, tuple-major.
pub fn d_matrix(m: &CoefficientModule, p: usize) -> Mat {
    let g = m.actor();
    let k = m.rank();
    let n = g.order();
    let cols = num_tuples(p, n) * k;
    let rows = num_tuples(p + 1, n) * k;
    let mut a: Mat = vec![vec![0; cols]; rows];
    let probe = Cochain::zero(p, n);
    let e = m.exponent();
    let mut merged = vec![0; p];
    for (r, t) in tuples(p + 1, n).enumerate() {
        let mut add_block = |col: Option<usize>, sign: i64, mat: Option<&Mat>| {
            let Some(c) = col else { return };
            for i in 0..k {
                for j in 0..k {
                    let x = match mat {
                        Some(mm) => mm[i][j],
                        None => i64::from(i == j),
                    };
                    let cell = &mut a[r * k + i][c * k + j];
                    *cell = (*cell + sign * x).rem_euclid(e);
                }
            }
        };
        add_block(probe.index(&t[1..]), 1, Some(m.matrix(t[0])));
        for j in 1..=p {
            merged[..j - 1].copy_from_slice(&t[..j - 1]);
            merged[j - 1] = g.mul(t[j - 1], t[j]);
            merged[j..].copy_from_slice(&t[j + 1..]);
            add_block(probe.index(&merged), if j % 2 == 0 { 1 } else { -1 }, None);
        }
        add_block(probe.index(&t[..p]), if (p + 1).is_multiple_of(2) { 1 } else { -1 }, None);
    }
    a
}

fn check_size(m: &CoefficientModule, p: usize, limit: usize) -> Result<()> {
    let unknowns = num_tuples(p, m.actor().order()) * m.rank();
    if unknowns > limit {
        return Err(Error::bound("cochain unknowns", unknowns, limit));
    }
    Ok(())
}

fn first_nonzero(c: &Cochain) -> Option<Vec<usize>> {
    c.entries().find(|(_, v)| *v != 0).map(|(t, _)| t)
}

fn not_a_cocycle(t: &[usize]) -> Error {
    let at = |i: usize| t.get(i).copied().unwrap_or(0);
    Error::NotACocycle(at(0), at(1), at(2))
}

/// Decides membership in B^p and produces explicit preimages.
#[derive(Clone, Debug)]
pub struct CoboundarySolver {
    module: CoefficientModule,
    degree: usize,
    snf: ModSnf,
    prev_cols: usize,
}

impl CoboundarySolver {
    pub fn new(m: &CoefficientModule, p: usize) -> Result<Self> {
        Self::with_limit(m, p, DEFAULT_UNKNOWNS)
    }

    pub fn with_limit(m: &CoefficientModule, p: usize, limit: usize) -> Result<Self> {
        if !(1..=3).contains(&p) {
            return Err(Error::DegreeUnsupported(p));
        }
        check_size(m, p, limit)?;
        let bmat = boundary_generators(m, p);
        let cols = bmat.first().map_or(0, Vec::len);
        let prev_cols = num_tuples(p - 1, m.actor().order()) * m.rank();
        let snf = ModSnf::new(&bmat, cols, m.exponent(), true);
        Ok(CoboundarySolver { module: m.clone(), degree: p, snf, prev_cols })
    }

    pub fn module(&self) -> &CoefficientModule {
        &self.module
    }

    /// Some c with d c = x, if x is a coboundary.
    pub fn preimage(&self, x: &Cochain) -> Option<Cochain> {
        assert_eq!(x.degree(), self.degree);
        let v = self.module.to_vector(x);
        if v.is_empty() {
            return Some(Cochain::zero(self.degree - 1, x.group_order()));
        }
        let sol = self.snf.solve(&v)?;
        let c = self.module.from_vector(self.degree - 1, &sol[..self.prev_cols]);
        debug_assert_eq!(&differential_any(&self.module, &c), x);
        Some(c)
    }

    pub fn is_coboundary(&self, x: &Cochain) -> bool {
        self.preimage(x).is_some()
    }
}

/// Columns of d_(p-1) followed by the relation vectors d_i e_(t,i).
fn boundary_generators(m: &CoefficientModule, p: usize) -> Mat {
    let k = m.rank();
    let np = num_tuples(p, m.actor().order()) * k;
    let mut b = d_matrix(m, p - 1);
    for (r, row) in b.iter_mut().enumerate() {
        for c in 0..np {
            row.push(if c == r { m.factors()[r % k] % m.exponent() } else { 0 });
        }
    }
    b
}

/// H^p(G, A) with a generator cocycle per invariant factor.
#[derive(Clone, Debug)]
pub struct Cohomology {
    module: CoefficientModule,
    degree: usize,
    invariants: Vec<i64>,
    reps: Vec<Cochain>,
    boundaries: CoboundarySolver,
    coord_solver: Option<ModSnf>,
}

/// A cohomology class: coordinates against the invariant factors plus a representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: usize,
    pub invariants: Vec<i64>,
    pub coords: Vec<i64>,
    pub representative: Cochain,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

pub fn cohomology(m: &CoefficientModule, p: usize) -> Result<Cohomology> {
    Cohomology::with_limit(m, p, DEFAULT_UNKNOWNS)
}

impl Cohomology {
    pub fn new(m: &CoefficientModule, p: usize) -> Result<Self> {
        Self::with_limit(m, p, DEFAULT_UNKNOWNS)
    }

    pub fn with_limit(m: &CoefficientModule, p: usize, limit: usize) -> Result<Self> {
        if !(1..=3).contains(&p) {
            return Err(Error::DegreeUnsupported(p));
        }
        check_size(m, p, limit)?;
        let boundaries = CoboundarySolver::with_limit(m, p, limit)?;
        let k = m.rank();
        let e = m.exponent();
        let n = m.actor().order();
        let np = num_tuples(p, n) * k;
        if np == 0 {
            return Ok(Cohomology {
                module: m.clone(),
                degree: p,
                invariants: Vec::new(),
                reps: Vec::new(),
                boundaries,
                coord_solver: None,
            });
        }
        // cocycles: kernel of d_p read modulo the target relations
        let mut dp = d_matrix(m, p);
        for (r, row) in dp.iter_mut().enumerate() {
            let w = e / m.factors()[r % k];
            row.iter_mut().for_each(|x| *x = (*x * w).rem_euclid(e));
        }
        let kgens = ModSnf::new(&dp, np, e, false).kernel();
        // images of cocycles in (Z/e)^n / B
        let bs = &boundaries.snf;
        let u = bs.u.as_ref().expect("u");
        let g: Vec<i64> = (0..np).map(|i| bs.diag.get(i).map_or(e, |&d| gcd(d, e))).collect();
        let live: Vec<usize> = (0..np).filter(|&i| g[i] > 1).collect();
        let q: Vec<Vec<i64>> = kgens
            .iter()
            .map(|kv| {
                live.iter()
                    .map(|&i| u[i].iter().zip(kv).map(|(x, y)| x * y).sum::<i64>().rem_euclid(g[i]))
                    .collect()
            })
            .collect();
        // relations among the images
        let a2: Mat = live
            .iter()
            .enumerate()
            .map(|(r, &i)| q.iter().map(|qj| (qj[r] * (e / g[i])).rem_euclid(e)).collect())
            .collect();
        let s2 = ModSnf::new(&a2, kgens.len(), e, false);
        let mut orders = Vec::new();
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for j in 0..kgens.len() {
            let o = if j < s2.diag.len() { e / gcd(s2.diag[j], e) } else { 1 };
            if o > 1 {
                orders.push(o);
                let z: Vec<i64> = (0..np)
                    .map(|t| kgens.iter().enumerate().map(|(l, kl)| s2.v[l][j] * kl[t]).sum::<i64>().rem_euclid(e))
                    .collect();
                gens.push(z);
            }
        }
        // invariant-factor normal form
        let r = orders.len();
        let (invariants, gens) = if r == 0 {
            (Vec::new(), Vec::new())
        } else {
            let diag: Mat = (0..r).map(|i| (0..r).map(|j| if i == j { orders[i] } else { 0 }).collect()).collect();
            let s = smith_int(&diag, r);
            let mut inv = Vec::new();
            let mut out = Vec::new();
            for j in 0..r {
                if s.diag[j] > 1 {
                    inv.push(s.diag[j]);
                    out.push(
                        (0..np)
                            .map(|t| (0..r).map(|i| s.u_inv[i][j] * gens[i][t]).sum::<i64>().rem_euclid(e))
                            .collect::<Vec<i64>>(),
                    );
                }
            }
            (inv, out)
        };
        let reps: Vec<Cochain> = gens.iter().map(|z| m.from_vector(p, z)).collect();
        let bmat = boundary_generators(m, p);
        let cmat: Mat = (0..np)
            .map(|t| gens.iter().map(|z| z[t]).chain(bmat[t].iter().copied()).collect())
            .collect();
        let cols = gens.len() + bmat[0].len();
        let coord_solver = Some(ModSnf::new(&cmat, cols, e, true));
        Ok(Cohomology { module: m.clone(), degree: p, invariants, reps, boundaries, coord_solver })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn module(&self) -> &CoefficientModule {
        &self.module
    }

    pub fn invariants(&self) -> &[i64] {
        &self.invariants
    }

    pub fn order(&self) -> u128 {
        self.invariants.iter().map(|&d| d as u128).product()
    }

    pub fn representatives(&self) -> &[Cochain] {
        &self.reps
    }

    pub fn check_cocycle(&self, x: &Cochain) -> Result<()> {
        if x.degree() != self.degree || x.group_order() != self.module.actor().order() {
            return Err(Error::DegreeUnsupported(x.degree()));
        }
        match first_nonzero(&differential_any(&self.module, x)) {
            Some(t) => Err(not_a_cocycle(&t)),
            None => Ok(()),
        }
    }

    /// Coordinates of the class of a cocycle.
    pub fn coords(&self, x: &Cochain) -> Result<Vec<i64>> {
        self.check_cocycle(x)?;
        let Some(solver) = &self.coord_solver else { return Ok(Vec::new()) };
        let v = self.module.to_vector(x);
        let sol = solver.solve(&v).expect("cocycle lies in Z + B");
        Ok(sol.iter().zip(&self.invariants).map(|(&y, &d)| y.rem_euclid(d)).collect())
    }

    pub fn class_of(&self, x: &Cochain) -> Result<CohomologyClass> {
        Ok(CohomologyClass {
            degree: self.degree,
            invariants: self.invariants.clone(),
            coords: self.coords(x)?,
            representative: x.clone(),
        })
    }

    /// The cocycle sum_j c_j z_j.
    pub fn cocycle(&self, coords: &[i64]) -> Cochain {
        let m = &self.module;
        let mut acc = Cochain::zero(self.degree, m.actor().order());
        for (z, &c) in self.reps.iter().zip(coords) {
            let scaled = z.map_values(|v| m.scale(c, v));
            acc = m.add_cochains(&acc, &scaled);
        }
        acc
    }

    /// Every coordinate vector, in lexicographic order.
    pub fn all_coords(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.invariants {
            out = out.into_iter().flat_map(|v| (0..d).map(move |c| [v.clone(), vec![c]].concat())).collect();
        }
        out
    }

    pub fn add_coords(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).zip(&self.invariants).map(|((x, y), d)| (x + y).rem_euclid(*d)).collect()
    }

    pub fn neg_coords(&self, a: &[i64]) -> Vec<i64> {
        a.iter().zip(&self.invariants).map(|(x, d)| (-x).rem_euclid(*d)).collect()
    }

    pub fn is_coboundary(&self, x: &Cochain) -> bool {
        self.boundaries.is_coboundary(x)
    }

    pub fn preimage(&self, x: &Cochain) -> Option<Cochain> {
        self.boundaries.preimage(x)
    }

    pub fn solver(&self) -> &CoboundarySolver {
        &self.boundaries
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, cyclic_product};
    use crate::group::Automorphism;

    fn inversion_module(n: usize) -> CoefficientModule {
        let a = cyclic(n);
        let inv = Automorphism::from_permutation((0..n).map(|x| (n - x) % n).collect());
        CoefficientModule::new(a, cyclic(2), vec![Automorphism::identity(n), inv]).unwrap()
    }

    #[test]
    fn small_groups_by_hand() {
        let c2 = CoefficientModule::trivial(cyclic(2), cyclic(2)).unwrap();
        assert_eq!(Cohomology::new(&c2, 3).unwrap().invariants(), &[2]);
        let c4 = CoefficientModule::trivial(cyclic(4), cyclic(2)).unwrap();
        assert_eq!(Cohomology::new(&c4, 1).unwrap().invariants(), &[2]);
        assert_eq!(Cohomology::new(&c4, 2).unwrap().invariants(), &[2]);
        let v4 = CoefficientModule::trivial(cyclic(2), cyclic_product(2, 2)).unwrap();
        assert_eq!(Cohomology::new(&v4, 2).unwrap().order(), 8);
        let inv = inversion_module(4);
        assert_eq!(Cohomology::new(&inv, 2).unwrap().order(), 2);
    }

    #[test]
    fn d_matrix_matches_pointwise() {
        let m = inversion_module(4);
        let f = Cochain::from_fn(1, 2, |_| 1);
        let df = differential(&m, &f).unwrap();
        let mat = d_matrix(&m, 1);
        let v = m.to_vector(&f);
        let w: Vec<i64> = mat.iter().map(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>()).collect();
        assert_eq!(m.from_vector(2, &w), df);
    }

    #[test]
    fn coordinates_and_representatives_agree() {
        let m = CoefficientModule::trivial(cyclic(2), cyclic_product(2, 2)).unwrap();
        let h = Cohomology::new(&m, 2).unwrap();
        for c in h.all_coords() {
            let z = h.cocycle(&c);
            assert_eq!(h.coords(&z).unwrap(), c);
        }
    }
}
