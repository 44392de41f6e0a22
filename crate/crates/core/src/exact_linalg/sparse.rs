use std::collections::btree_map::{self, BTreeMap};

use super::Scalar;

/// A finite formal linear combination of keys with exact coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVec<K: Ord>(BTreeMap<K, Scalar>);

impl<K: Ord> Default for SparseVec<K> {
    fn default() -> Self {
        SparseVec(BTreeMap::new())
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(k: K) -> Self {
        let mut v = Self::new();
        v.0.insert(k, Scalar::one());
        v
    }

    pub fn add_term(&mut self, k: K, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SparseVec<K>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn sub(&self, other: &SparseVec<K>) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn get(&self, k: &K) -> Option<&Scalar> {
        self.0.get(k)
    }

    pub fn coeff(&self, k: &K) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Re-indexes every term; colliding images are summed.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> SparseVec<L> {
        let mut out = SparseVec::new();
        for (k, v) in self.iter() {
            out.add_term(f(k), v);
        }
        out
    }

    /// First key (in order) where the two combinations differ.
    pub fn first_difference(&self, other: &SparseVec<K>) -> Option<K> {
        let diff = self.sub(other);
        diff.0.into_keys().next()
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for SparseVec<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut v = SparseVec::new();
        for (k, c) in iter {
            v.add_term(k, &c);
        }
        v
    }
}

impl<K: Ord> IntoIterator for SparseVec<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut v: SparseVec<usize> = SparseVec::unit(3);
        v.add_term(3, &Scalar::from_int(-1));
        assert!(v.is_zero());
    }

    #[test]
    fn map_keys_sums_collisions() {
        let v: SparseVec<usize> =
            [(0, Scalar::one()), (1, Scalar::from_int(2))].into_iter().collect();
        let w = v.map_keys(|_| 7usize);
        assert_eq!(w.coeff(&7), Scalar::from_int(3));
    }
}
