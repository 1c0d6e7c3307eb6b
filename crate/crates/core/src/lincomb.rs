//! Sparse finite linear combinations of basis keys.

use std::collections::btree_map;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::scalar::Scalar;

/// A finite linear combination `Σ c_k · k` with no explicit zero coefficients.
///
/// Iteration order is the order of `K`, which makes every serialization
/// deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, R> {
    terms: BTreeMap<K, R>,
}

/// Linear combination over pairs of keys: an element of a tensor product.
pub type Tensor<K1, K2, R> = LinComb<(K1, K2), R>;

impl<K: Ord, R> Default for LinComb<K, R> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, R: Scalar> LinComb<K, R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: R) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, R::one())
    }

    pub fn add_term(&mut self, key: K, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `scale · other` into `self`.
    pub fn add_scaled(&mut self, other: &Self, scale: &R) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone() * scale.clone());
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.clone() * s.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn coeff(&self, key: &K) -> R {
        self.terms.get(key).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, R> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, R> {
        self.terms.keys()
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2, R>) -> LinComb<K2, R> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<K, R> {
        self.terms
    }
}

impl<K: Ord + Clone, R: Scalar> FromIterator<(K, R)> for LinComb<K, R> {
    fn from_iter<I: IntoIterator<Item = (K, R)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord, R> IntoIterator for &'a LinComb<K, R> {
    type Item = (&'a K, &'a R);
    type IntoIter = btree_map::Iter<'a, K, R>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone, R: Scalar> AddAssign<&LinComb<K, R>> for LinComb<K, R> {
    fn add_assign(&mut self, rhs: &LinComb<K, R>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone, R: Scalar> SubAssign<&LinComb<K, R>> for LinComb<K, R> {
    fn sub_assign(&mut self, rhs: &LinComb<K, R>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: Ord + Clone, R: Scalar> Add for &LinComb<K, R> {
    type Output = LinComb<K, R>;

    fn add(self, rhs: Self) -> LinComb<K, R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone, R: Scalar> Sub for &LinComb<K, R> {
    type Output = LinComb<K, R>;

    fn sub(self, rhs: Self) -> LinComb<K, R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone, R: Scalar> Add for LinComb<K, R> {
    type Output = LinComb<K, R>;

    fn add(mut self, rhs: Self) -> LinComb<K, R> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone, R: Scalar> Sub for LinComb<K, R> {
    type Output = LinComb<K, R>;

    fn sub(mut self, rhs: Self) -> LinComb<K, R> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone, R: Scalar> Neg for &LinComb<K, R> {
    type Output = LinComb<K, R>;

    fn neg(self) -> LinComb<K, R> {
        self.scale(&-R::one())
    }
}

impl<K: Ord + Clone, R: Scalar> Neg for LinComb<K, R> {
    type Output = LinComb<K, R>;

    fn neg(self) -> LinComb<K, R> {
        (&self).neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn cancellation_removes_terms() {
        let mut a: LinComb<u32, BigInt> = LinComb::term(1, BigInt::from(2));
        a.add_term(1, BigInt::from(-2));
        assert!(a.is_zero());
        let b = LinComb::term(3, BigInt::from(1)) + LinComb::term(2, BigInt::from(5));
        assert_eq!(b.keys().copied().collect::<Vec<_>>(), vec![2, 3]);
        assert!((&b - &b).is_zero());
    }
}
