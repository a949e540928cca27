//! Finite groups as Cayley tables with the identity pinned at index 0.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 128;

const UNSET: usize = usize::MAX;

/// A finite group given by its multiplication table. Cloning is cheap.
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupData>,
}

struct GroupData {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    label: Option<String>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.n == other.inner.n && self.inner.table == other.inner.table)
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.label {
            Some(l) => write!(f, "Group({l}, order {})", self.inner.n),
            None => write!(f, "Group(order {})", self.inner.n),
        }
    }
}

/// Validate a square table and build a group from it.
///
/// If the identity is not at index 0 the labels of 0 and the identity are swapped.
pub fn make_group(rows: &[Vec<usize>]) -> Result<Group> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!("row {i} has length {}", row.len())));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return Err(Error::MalformedTable(format!("entry {x} in row {i} out of range")));
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
        .ok_or(Error::NoIdentity)?;
    // relabel so that the identity is 0
    let swap = |x: usize| {
        if x == e {
            0
        } else if x == 0 {
            e
        } else {
            x
        }
    };
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = swap(rows[swap(a)][swap(b)]);
        }
    }
    let mut inv = vec![UNSET; n];
    for a in 0..n {
        let right = (0..n).find(|&b| table[a * n + b] == 0);
        let left = (0..n).find(|&b| table[b * n + a] == 0);
        match (right, left) {
            (Some(r), Some(l)) if r == l => inv[a] = r,
            _ => return Err(Error::NoInverse(swap(a))),
        }
    }
    let mut seen = vec![0usize; n];
    for a in 0..n {
        for b in 0..n {
            let x = table[a * n + b];
            if seen[x] == a + 1 {
                return Err(Error::NotLatinSquare(format!("row {} repeats {}", swap(a), swap(x))));
            }
            seen[x] = a + 1;
        }
    }
    seen.iter_mut().for_each(|s| *s = 0);
    for b in 0..n {
        for a in 0..n {
            let x = table[a * n + b];
            if seen[x] == b + 1 {
                return Err(Error::NotLatinSquare(format!("column {} repeats {}", swap(b), swap(x))));
            }
            seen[x] = b + 1;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b];
            for c in 0..n {
                if table[ab * n + c] != table[a * n + table[b * n + c]] {
                    return Err(Error::NotAssociative { a: swap(a), b: swap(b), c: swap(c) });
                }
            }
        }
    }
    Ok(Group { inner: Arc::new(GroupData { n, table, inv, label: None }) })
}

impl Group {
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        make_group(rows)
    }

    /// Build from a flat table already known to be a group with identity 0.
    pub(crate) fn from_trusted(n: usize, table: Vec<usize>) -> Self {
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| table[a * n + b] == 0).expect("group table");
        }
        Group { inner: Arc::new(GroupData { n, table, inv, label: None }) }
    }

    pub fn trivial() -> Self {
        Self::from_trusted(1, vec![0])
    }

    pub fn with_label(self, label: impl Into<String>) -> Self {
        let d = &self.inner;
        Group {
            inner: Arc::new(GroupData {
                n: d.n,
                table: d.table.clone(),
                inv: d.inv.clone(),
                label: Some(label.into()),
            }),
        }
    }

    pub fn label(&self) -> Option<&str> {
        self.inner.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.inner.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.inner.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inv[a]
    }

    /// g x g^-1
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn row(&self, a: usize) -> &[usize] {
        let n = self.inner.n;
        &self.inner.table[a * n..(a + 1) * n]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.row(a).to_vec()).collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.inner.table
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check_abelian(&self) -> Result<()> {
        for a in self.elements() {
            for b in 0..a {
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::NotAbelian { a, b });
                }
            }
        }
        Ok(())
    }

    /// Sorted list of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut elems = vec![0];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Greedy generating set: smallest elements that enlarge the generated subgroup.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut member = vec![false; self.order()];
        member[0] = true;
        for x in 1..self.order() {
            if !member[x] {
                gens.push(x);
                for y in self.generated(&gens) {
                    member[y] = true;
                }
            }
        }
        gens
    }

    pub fn center(&self) -> Subgroup {
        let elems = self
            .elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup::from_sorted(self.order(), elems)
    }

    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        Subgroup::from_sorted(self.order(), self.generated(gens))
    }

    pub fn is_normal(&self, k: &Subgroup) -> bool {
        self.normality_witness(k).is_none()
    }

    fn normality_witness(&self, k: &Subgroup) -> Option<(usize, usize)> {
        for g in self.elements() {
            for &x in k.elements() {
                if !k.contains(self.conj(g, x)) {
                    return Some((g, x));
                }
            }
        }
        None
    }

    /// Quotient by a normal subgroup. Cosets are labelled in order of their smallest element.
    pub fn quotient(&self, k: &Subgroup) -> Result<(Group, GroupMap)> {
        if let Some((g, x)) = self.normality_witness(k) {
            return Err(Error::NotNormal { g, k: x });
        }
        let n = self.order();
        let mut proj = vec![UNSET; n];
        let mut reps = Vec::new();
        for x in self.elements() {
            if proj[x] == UNSET {
                let c = reps.len();
                reps.push(x);
                for &y in k.elements() {
                    proj[self.mul(x, y)] = c;
                }
            }
        }
        let m = reps.len();
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = proj[self.mul(reps[a], reps[b])];
            }
        }
        Ok((Group::from_trusted(m, table), GroupMap { image: proj }))
    }

    /// The subgroup as a group in its own right, with the embedding into `self`.
    pub fn restrict(&self, k: &Subgroup) -> (Group, Vec<usize>) {
        let embed = k.elements().to_vec();
        let m = embed.len();
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = k.position(self.mul(embed[a], embed[b])).expect("closed");
            }
        }
        (Group::from_trusted(m, table), embed)
    }

    /// Inner automorphism x -> g x g^-1.
    pub fn inner(&self, g: usize) -> Automorphism {
        let fwd: Vec<usize> = self.elements().map(|x| self.conj(g, x)).collect();
        let bwd: Vec<usize> = self.elements().map(|x| self.conj(self.inv(g), x)).collect();
        Automorphism { fwd, bwd }
    }

    /// Direct product with elements (a, b) labelled a + |self| * b.
    pub fn direct_product(&self, other: &Group) -> Group {
        let (n, m) = (self.order(), other.order());
        let nm = n * m;
        let mut table = vec![0; nm * nm];
        for x in 0..nm {
            for y in 0..nm {
                let a = self.mul(x % n, y % n);
                let b = other.mul(x / n, y / n);
                table[x * nm + y] = a + n * b;
            }
        }
        Group::from_trusted(nm, table)
    }
}

/// A subgroup, stored as a sorted element list plus a membership mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<usize>,
    member: Vec<bool>,
}

impl Subgroup {
    pub(crate) fn from_sorted(parent_order: usize, elements: Vec<usize>) -> Self {
        let mut member = vec![false; parent_order];
        for &x in &elements {
            member[x] = true;
        }
        Subgroup { elements, member }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }
}

/// A map between groups given by the image of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    pub image: Vec<usize>,
}

impl GroupMap {
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn check_homomorphism(&self, src: &Group, tgt: &Group) -> Result<()> {
        if self.image.len() != src.order() || self.image.iter().any(|&x| x >= tgt.order()) {
            return Err(Error::MalformedTable("map does not fit its groups".into()));
        }
        for a in src.elements() {
            for b in src.elements() {
                if self.image[src.mul(a, b)] != tgt.mul(self.image[a], self.image[b]) {
                    return Err(Error::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.image.iter().all(|x| seen.insert(*x))
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.image.len()).filter(|&x| self.image[x] == 0).collect()
    }
}

/// An automorphism with both directions stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    fwd: Vec<usize>,
    bwd: Vec<usize>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { fwd: (0..n).collect(), bwd: (0..n).collect() }
    }

    /// Checks that `images` is a bijective homomorphism of `g`.
    pub fn from_images(g: &Group, images: Vec<usize>) -> Result<Self> {
        let map = GroupMap { image: images };
        map.check_homomorphism(g, g)?;
        if !map.is_injective() {
            return Err(Error::MalformedTable("map is not bijective".into()));
        }
        Ok(Self::from_permutation(map.image))
    }

    /// Wraps a permutation without checking the homomorphism property.
    pub fn from_permutation(fwd: Vec<usize>) -> Self {
        let mut bwd = vec![0; fwd.len()];
        for (x, &y) in fwd.iter().enumerate() {
            bwd[y] = x;
        }
        Automorphism { fwd, bwd }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.fwd[x]
    }

    #[inline]
    pub fn apply_inv(&self, x: usize) -> usize {
        self.bwd[x]
    }

    pub fn forward(&self) -> &[usize] {
        &self.fwd
    }

    pub fn backward(&self) -> &[usize] {
        &self.bwd
    }

    pub fn inverse(&self) -> Self {
        Automorphism { fwd: self.bwd.clone(), bwd: self.fwd.clone() }
    }

    /// self after other: x -> self(other(x)).
    pub fn compose(&self, other: &Self) -> Self {
        let fwd: Vec<usize> = other.fwd.iter().map(|&y| self.fwd[y]).collect();
        let bwd: Vec<usize> = self.bwd.iter().map(|&y| other.bwd[y]).collect();
        Automorphism { fwd, bwd }
    }

    pub fn is_identity(&self) -> bool {
        self.fwd.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn len(&self) -> usize {
        self.fwd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fwd.is_empty()
    }
}

/// Anything with an associative multiplication on indices 0..order, identity 0.
trait Codomain {
    fn size(&self) -> usize;
    fn product(&self, a: usize, b: usize) -> usize;
    fn order_of(&self, x: usize) -> usize {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = self.product(y, x);
            k += 1;
        }
        k
    }
}

impl Codomain for Group {
    fn size(&self) -> usize {
        self.order()
    }
    fn product(&self, a: usize, b: usize) -> usize {
        self.mul(a, b)
    }
    fn order_of(&self, x: usize) -> usize {
        self.element_order(x)
    }
}

impl Codomain for OuterClassTable {
    fn size(&self) -> usize {
        self.num_classes()
    }
    fn product(&self, a: usize, b: usize) -> usize {
        self.class_mul(a, b)
    }
}

struct HomSearch<'a> {
    src: &'a Group,
    tgt: &'a dyn Codomain,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    injective: bool,
    img: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> HomSearch<'a> {
    fn new(src: &'a Group, tgt: &'a dyn Codomain, injective: bool) -> Self {
        let gens = src.generators();
        let tgt_orders: Vec<usize> = (0..tgt.size()).map(|x| tgt.order_of(x)).collect();
        let candidates = gens
            .iter()
            .map(|&g| {
                let o = src.element_order(g);
                (0..tgt.size())
                    .filter(|&x| if injective { tgt_orders[x] == o } else { o.is_multiple_of(tgt_orders[x]) })
                    .collect()
            })
            .collect();
        let mut img = vec![UNSET; src.order()];
        img[0] = 0;
        let mut used = vec![false; tgt.size()];
        used[0] = true;
        HomSearch { src, tgt, gens, candidates, injective, img, used }
    }

    /// Assign gens[j] -> c and close up; returns newly assigned elements or None on conflict.
    fn assign(&mut self, j: usize, c: usize) -> Option<Vec<usize>> {
        let g = self.gens[j];
        let mut added = Vec::new();
        if self.img[g] != UNSET || (self.injective && self.used[c]) {
            return None;
        }
        self.set(g, c, &mut added);
        let mut frontier: Vec<usize> = (0..self.src.order()).filter(|&x| self.img[x] != UNSET).collect();
        let mut i = 0;
        while i < frontier.len() {
            let x = frontier[i];
            i += 1;
            for k in 0..=j {
                let gk = self.gens[k];
                let y = self.src.mul(x, gk);
                let v = self.tgt.product(self.img[x], self.img[gk]);
                if self.img[y] == UNSET {
                    if self.injective && self.used[v] {
                        self.undo(&added);
                        return None;
                    }
                    self.set(y, v, &mut added);
                    frontier.push(y);
                } else if self.img[y] != v {
                    self.undo(&added);
                    return None;
                }
            }
        }
        Some(added)
    }

    fn set(&mut self, x: usize, v: usize, added: &mut Vec<usize>) {
        self.img[x] = v;
        if self.injective {
            self.used[v] = true;
        }
        added.push(x);
    }

    fn undo(&mut self, added: &[usize]) {
        for &x in added {
            if self.injective {
                self.used[self.img[x]] = false;
            }
            self.img[x] = UNSET;
        }
    }

    fn run(&mut self, j: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if j == self.gens.len() {
            return visit(&self.img);
        }
        for ci in 0..self.candidates[j].len() {
            let c = self.candidates[j][ci];
            if let Some(added) = self.assign(j, c) {
                let go_on = self.run(j + 1, visit);
                self.undo(&added);
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
}

fn check_bound(g: &Group, max_order: usize) -> Result<()> {
    if g.order() > max_order {
        return Err(Error::bound("group order", g.order(), max_order));
    }
    Ok(())
}

/// All automorphisms, identity first, then in generator-image backtracking order.
pub fn automorphism_group(g: &Group, max_order: usize) -> Result<Vec<Automorphism>> {
    check_bound(g, max_order)?;
    let mut out = Vec::new();
    HomSearch::new(g, g, true).run(0, &mut |img| {
        out.push(Automorphism::from_permutation(img.to_vec()));
        true
    });
    if let Some(pos) = out.iter().position(|a| a.is_identity()) {
        let id = out.remove(pos);
        out.insert(0, id);
    }
    Ok(out)
}

/// All homomorphisms `src -> tgt` in backtracking order.
pub fn homomorphisms(src: &Group, tgt: &Group) -> Vec<GroupMap> {
    let mut out = Vec::new();
    HomSearch::new(src, tgt, false).run(0, &mut |img| {
        out.push(GroupMap { image: img.to_vec() });
        true
    });
    out
}

/// All homomorphisms `src -> Out(N)` as class assignments, without building the Out(N) table.
pub fn homomorphisms_to_out(src: &Group, table: &OuterClassTable) -> Vec<GroupMap> {
    let mut out = Vec::new();
    HomSearch::new(src, table, false).run(0, &mut |img| {
        out.push(GroupMap { image: img.to_vec() });
        true
    });
    out
}

/// First isomorphism found by backtracking, if any.
pub fn isomorphic(g1: &Group, g2: &Group, max_order: usize) -> Result<Option<GroupMap>> {
    check_bound(g1, max_order)?;
    check_bound(g2, max_order)?;
    if g1.order() != g2.order() || g1.order_profile() != g2.order_profile() {
        return Ok(None);
    }
    let mut found = None;
    HomSearch::new(g1, g2, true).run(0, &mut |img| {
        found = Some(GroupMap { image: img.to_vec() });
        false
    });
    Ok(found)
}

/// Aut(N) split into Inn(N)-cosets. Class 0 is Inn(N).
#[derive(Clone, Debug)]
pub struct OuterClassTable {
    group: Group,
    auts: Vec<Automorphism>,
    index: HashMap<Vec<usize>, usize>,
    inn: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    inner_by: Vec<Vec<usize>>,
}

impl OuterClassTable {
    pub fn new(group: &Group, max_order: usize) -> Result<Self> {
        Ok(Self::from_automorphisms(group, automorphism_group(group, max_order)?))
    }

    pub fn from_automorphisms(group: &Group, auts: Vec<Automorphism>) -> Self {
        let index: HashMap<Vec<usize>, usize> =
            auts.iter().enumerate().map(|(i, a)| (a.forward().to_vec(), i)).collect();
        let mut inner_by = vec![Vec::new(); auts.len()];
        for n in group.elements() {
            let i = index[group.inner(n).forward()];
            inner_by[i].push(n);
        }
        let inn: Vec<usize> = (0..auts.len()).filter(|&i| !inner_by[i].is_empty()).collect();
        let mut class_of = vec![UNSET; auts.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..auts.len() {
            if class_of[a] != UNSET {
                continue;
            }
            let mut members: Vec<usize> =
                inn.iter().map(|&c| index[auts[a].compose(&auts[c]).forward()]).collect();
            members.sort_by(|&x, &y| auts[x].forward().cmp(auts[y].forward()));
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        classes.sort_by(|x, y| auts[x[0]].forward().cmp(auts[y[0]].forward()));
        for (c, members) in classes.iter().enumerate() {
            for &m in members {
                class_of[m] = c;
            }
        }
        OuterClassTable { group: group.clone(), auts, index, inn, class_of, classes, inner_by }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.auts
    }

    pub fn inner_indices(&self) -> &[usize] {
        &self.inn
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn index_of(&self, a: &Automorphism) -> Option<usize> {
        self.index.get(a.forward()).copied()
    }

    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_of(&self, a: &Automorphism) -> Option<usize> {
        self.index_of(a).map(|i| self.class_of[i])
    }

    /// Lexicographically smallest member of the class.
    pub fn representative(&self, class: usize) -> &Automorphism {
        &self.auts[self.classes[class][0]]
    }

    /// Elements n with c_n = a, in increasing order; empty if a is outer.
    pub fn inner_witnesses(&self, a: &Automorphism) -> &[usize] {
        match self.index_of(a) {
            Some(i) => &self.inner_by[i],
            None => &[],
        }
    }

    pub fn class_mul(&self, c1: usize, c2: usize) -> usize {
        let a = self.representative(c1).compose(self.representative(c2));
        self.class_of(&a).expect("closed under composition")
    }

    /// Out(N) as a group on class indices.
    pub fn out_group(&self) -> Group {
        let m = self.num_classes();
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = self.class_mul(a, b);
            }
        }
        Group::from_trusted(m, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Group {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        make_group(&rows).unwrap()
    }

    #[test]
    fn identity_is_relocated() {
        let g = make_group(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn broken_tables_are_rejected() {
        assert_eq!(make_group(&[vec![0, 1], vec![1, 1]]).unwrap_err(), Error::NoInverse(1));
        assert!(matches!(make_group(&[vec![0, 1], vec![1]]), Err(Error::MalformedTable(_))));
        assert_eq!(make_group(&[vec![1, 1], vec![1, 1]]).unwrap_err(), Error::NoIdentity);
    }

    #[test]
    fn cyclic_basics() {
        let g = cyclic(6);
        assert!(g.is_abelian());
        assert_eq!(g.generators(), vec![1]);
        assert_eq!(g.element_order(2), 3);
        assert_eq!(automorphism_group(&g, 128).unwrap().len(), 2);
        let (q, p) = g.quotient(&g.subgroup(&[2])).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(p.image, vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn bound_is_enforced() {
        let g = cyclic(9);
        assert!(matches!(automorphism_group(&g, 8), Err(Error::BoundExceeded { .. })));
    }
}
