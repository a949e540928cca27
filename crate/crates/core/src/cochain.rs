//! Normalized cochains: dense tables over tuples of non-identity elements.

use crate::error::{Error, Result};
use crate::group::Group;

/// A normalized p-cochain G^p -> A. Values are element indices of the coefficient group;
/// any tuple containing the identity implicitly maps to 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    order: usize,
    values: Vec<usize>,
}

pub fn num_tuples(degree: usize, order: usize) -> usize {
    (order.saturating_sub(1)).pow(degree as u32)
}

/// All tuples of non-identity elements in lexicographic order.
pub fn tuples(degree: usize, order: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = num_tuples(degree, order);
    let m = order.saturating_sub(1);
    (0..count).map(move |mut idx| {
        let mut t = vec![0; degree];
        for slot in t.iter_mut().rev() {
            *slot = idx % m + 1;
            idx /= m;
        }
        t
    })
}

impl Cochain {
    pub fn zero(degree: usize, order: usize) -> Self {
        Cochain { degree, order, values: vec![0; num_tuples(degree, order)] }
    }

    pub fn from_fn(degree: usize, order: usize, mut f: impl FnMut(&[usize]) -> usize) -> Self {
        let values = tuples(degree, order).map(|t| f(&t)).collect();
        Cochain { degree, order, values }
    }

    pub fn from_values(degree: usize, order: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != num_tuples(degree, order) {
            return Err(Error::MalformedTable(format!(
                "cochain of degree {degree} over a group of order {order} needs {} values",
                num_tuples(degree, order)
            )));
        }
        Ok(Cochain { degree, order, values })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Order of the group the cochain is defined on.
    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn index(&self, args: &[usize]) -> Option<usize> {
        debug_assert_eq!(args.len(), self.degree);
        let m = self.order - 1;
        let mut idx = 0;
        for &a in args {
            if a == 0 {
                return None;
            }
            idx = idx * m + (a - 1);
        }
        Some(idx)
    }

    #[inline]
    pub fn get(&self, args: &[usize]) -> usize {
        match self.index(args) {
            Some(i) => self.values[i],
            None => 0,
        }
    }

    /// Panics if a tuple contains the identity and `v` is nonzero.
    pub fn set(&mut self, args: &[usize], v: usize) {
        match self.index(args) {
            Some(i) => self.values[i] = v,
            None => assert_eq!(v, 0, "normalized cochains vanish on the identity"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn map_values(&self, f: impl Fn(usize) -> usize) -> Self {
        Cochain { degree: self.degree, order: self.order, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    /// Pointwise product in a (possibly non-abelian) coefficient group.
    pub fn pointwise(&self, other: &Self, coeff: &Group) -> Self {
        assert_eq!((self.degree, self.order), (other.degree, other.order));
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| coeff.mul(a, b)).collect();
        Cochain { degree: self.degree, order: self.order, values }
    }

    pub fn pointwise_inverse(&self, coeff: &Group) -> Self {
        self.map_values(|v| coeff.inv(v))
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, usize)> + '_ {
        tuples(self.degree, self.order).zip(self.values.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_order_matches_index() {
        let c = Cochain::from_fn(2, 4, |t| t[0] * 10 + t[1]);
        for (i, t) in tuples(2, 4).enumerate() {
            assert_eq!(c.index(&t), Some(i));
            assert_eq!(c.get(&t), t[0] * 10 + t[1]);
        }
        assert_eq!(c.get(&[0, 2]), 0);
        assert_eq!(tuples(2, 3).collect::<Vec<_>>(), vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
    }

    #[test]
    fn degree_zero_has_one_entry() {
        let c = Cochain::from_fn(0, 5, |_| 3);
        assert_eq!(c.values(), &[3]);
        assert_eq!(c.get(&[]), 3);
    }
}
