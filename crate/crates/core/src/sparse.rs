//! Finitely supported formal linear combinations with exact coefficients.

use std::collections::btree_map::{self, BTreeMap};

use crate::scalar::Scalar;

/// A sparse vector keyed by an ordered basis label. Zero coefficients are
/// never stored, so two vectors are equal exactly when their maps are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVec<K: Ord> {
    coords: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for SparseVec<K> {
    fn default() -> Self {
        SparseVec { coords: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(key, coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, key: &K) -> Scalar {
        self.coords.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.coords.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.coords.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.coords.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: &Scalar, other: &Self) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.coords {
            self.add_term(k.clone(), factor * c);
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(factor, self);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone, F>(&self, mut f: F) -> SparseVec<L>
    where
        F: FnMut(&K) -> SparseVec<L>,
    {
        let mut out = SparseVec::zero();
        for (k, c) in &self.coords {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Fallible variant of [`SparseVec::map_linear`].
    pub fn try_map_linear<L: Ord + Clone, E, F>(&self, mut f: F) -> Result<SparseVec<L>, E>
    where
        F: FnMut(&K) -> Result<SparseVec<L>, E>,
    {
        let mut out = SparseVec::zero();
        for (k, c) in &self.coords {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for SparseVec<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<'a, K: Ord> IntoIterator for &'a SparseVec<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.coords.iter()
    }
}

impl<K: Ord + std::fmt::Debug> std::fmt::Debug for SparseVec<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.coords.iter()).finish()
    }
}
