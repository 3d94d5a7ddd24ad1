//! Finite formal linear combinations with canonical (sorted, zero-free) storage.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};


use crate::ring::Ring;

/// Anything carrying an integer degree.
pub trait Graded {
    fn degree(&self) -> i64;
}

impl<T: Graded> Graded for Vec<T> {
    fn degree(&self) -> i64 {
        self.iter().map(Graded::degree).sum()
    }
}

impl<A: Graded, B: Graded> Graded for (A, B) {
    fn degree(&self) -> i64 {
        self.0.degree() + self.1.degree()
    }
}

impl<A: Graded, B: Graded, C: Graded> Graded for (A, B, C) {
    fn degree(&self) -> i64 {
        self.0.degree() + self.1.degree() + self.2.degree()
    }
}

/// A formal `R`-linear combination of keys `K`.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// the represented elements.
#[derive(Clone, PartialEq)]
pub struct LinComb<K: Ord, R> {
    terms: BTreeMap<K, R>,
}

impl<K: Ord, R> Default for LinComb<K, R> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, R: Ring> LinComb<K, R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(key: K, coeff: R) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    /// The basis element `key` with coefficient one.
    pub fn basis(key: K) -> Self {
        Self::from_term(key, R::one())
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

    pub fn add_scaled(&mut self, other: &Self, factor: &R) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone() * factor.clone());
        }
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

    pub fn coefficient(&self, key: &K) -> R {
        self.terms.get(key).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, R> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, R> {
        self.terms.keys()
    }

    pub fn scale(&self, factor: &R) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Extends `f` linearly.
    pub fn map_linear<K2, F>(&self, mut f: F) -> LinComb<K2, R>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> LinComb<K2, R>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a map on keys; `None` means the image is zero.
    pub fn map_keys<K2, F>(&self, mut f: F) -> LinComb<K2, R>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> Option<(K2, R)>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            if let Some((k2, s)) = f(k) {
                out.add_term(k2, s * c.clone());
            }
        }
        out
    }

    /// Renames keys; colliding images are added.
    pub fn rekey<K2, F>(&self, mut f: F) -> LinComb<K2, R>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> K2,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<K, R> {
        self.terms
    }

    /// Pairs with another combination over the same keys: `sum a_k b_k`.
    pub fn dot(&self, other: &Self) -> R {
        let mut acc = R::zero();
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (k, c) in &small.terms {
            if let Some(d) = large.terms.get(k) {
                acc = acc + c.clone() * d.clone();
            }
        }
        acc
    }
}

impl<K: Ord + Clone + Graded, R: Ring> LinComb<K, R> {
    /// The degrees occurring in the support.
    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(Graded::degree).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: i64) -> Self {
        self.filter(|k| k.degree() == d)
    }
}

impl<K: Ord + Clone, R: Ring> FromIterator<(K, R)> for LinComb<K, R> {
    fn from_iter<I: IntoIterator<Item = (K, R)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (k, r) in iter {
            c.add_term(k, r);
        }
        c
    }
}

impl<'a, K: Ord, R> IntoIterator for &'a LinComb<K, R> {
    type Item = (&'a K, &'a R);
    type IntoIter = btree_map::Iter<'a, K, R>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone, R: Ring> AddAssign<&LinComb<K, R>> for LinComb<K, R> {
    fn add_assign(&mut self, rhs: &LinComb<K, R>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone, R: Ring> SubAssign<&LinComb<K, R>> for LinComb<K, R> {
    fn sub_assign(&mut self, rhs: &LinComb<K, R>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: Ord + Clone, R: Ring> Add for &LinComb<K, R> {
    type Output = LinComb<K, R>;
    fn add(self, rhs: Self) -> LinComb<K, R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone, R: Ring> Sub for &LinComb<K, R> {
    type Output = LinComb<K, R>;
    fn sub(self, rhs: Self) -> LinComb<K, R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone, R: Ring> Add for LinComb<K, R> {
    type Output = LinComb<K, R>;
    fn add(mut self, rhs: Self) -> LinComb<K, R> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone, R: Ring> Sub for LinComb<K, R> {
    type Output = LinComb<K, R>;
    fn sub(mut self, rhs: Self) -> LinComb<K, R> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone, R: Ring> Neg for LinComb<K, R> {
    type Output = LinComb<K, R>;
    fn neg(self) -> LinComb<K, R> {
        LinComb {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: Ord + fmt::Debug, R: fmt::Debug> fmt::Debug for LinComb<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c:?}*{k:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_pruned() {
        let mut c: LinComb<u32, i64> = LinComb::zero();
        c.add_term(1, 2);
        c.add_term(1, -2);
        c.add_term(2, 0);
        assert!(c.is_zero());
        let d = LinComb::from_term(3u32, 4i64);
        assert_eq!((&d - &d), LinComb::zero());
        assert_eq!(d.coefficient(&3), 4);
        assert_eq!(d.coefficient(&5), 0);
    }

    #[test]
    fn map_linear_accumulates() {
        let c: LinComb<u32, i64> = [(1, 1), (2, 3)].into_iter().collect();
        let image = c.map_linear(|k| LinComb::from_term(k % 2, 1));
        assert_eq!(image.coefficient(&1), 1);
        assert_eq!(image.coefficient(&0), 3);
    }
}
