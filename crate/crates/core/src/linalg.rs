//! Sparse reduced row echelon form over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::poly::Rational;

/// A sparse vector indexed by an ordered key type.
pub type SparseVec<K> = BTreeMap<K, Rational>;

/// Incrementally maintained reduced row echelon basis.
///
/// Each row's pivot is its smallest key, normalised to coefficient one, and
/// no other row has a nonzero entry in that column. Rows are kept sorted by
/// pivot, so two echelons spanning the same space compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new() }
    }
}

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, factor: &Rational, row: &SparseVec<K>) {
    for (k, c) in row {
        let delta = factor * c;
        match target.get_mut(k) {
            Some(v) => {
                *v += delta;
                if v.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                target.insert(k.clone(), delta);
            }
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        v.retain(|_, c| !c.is_zero());
        for row in &self.rows {
            let pivot = row.keys().next().expect("rows are nonzero");
            if let Some(c) = v.get(pivot).cloned() {
                axpy(&mut v, &-c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span. Returns the new normalised row, or `None` if
    /// `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec<K>) -> Option<SparseVec<K>> {
        let mut r = self.reduce(v);
        let (pivot, lead) = match r.iter().next() {
            Some((k, c)) => (k.clone(), c.clone()),
            None => return None,
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for c in r.values_mut() {
                *c *= &inv;
            }
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &-c, &r);
            }
        }
        let pos = self.rows.partition_point(|row| row.keys().next().expect("nonzero") < &pivot);
        self.rows.insert(pos, r.clone());
        Some(r)
    }
}
