//! Sparse linear combinations over an ordered set of basis labels.
//!
//! [`LinComb`] is the workhorse behind every element type in the crate: a
//! `BTreeMap` from labels to nonzero rational coefficients. The map never
//! stores zeros, so structural equality is equality of linear combinations,
//! and iteration order is the canonical label order.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coeff::Coeff;

/// A finite formal sum `Σ c_l · l` with exact rational coefficients and no
/// zero terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<L: Ord + Clone> {
    terms: BTreeMap<L, Coeff>,
}

impl<L: Ord + Clone> Default for LinComb<L> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<L: Ord + Clone> LinComb<L> {
    /// The empty sum.
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    /// The single term `1 · label`.
    pub fn unit(label: L) -> Self {
        let mut t = BTreeMap::new();
        t.insert(label, crate::coeff::one());
        LinComb { terms: t }
    }

    /// Builds from `(label, coeff)` pairs, collecting duplicates and
    /// dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (L, Coeff)>) -> Self {
        let mut out = Self::zero();
        for (l, c) in pairs {
            out.add_term(l, c);
        }
        out
    }

    /// Adds `coeff · label` in place.
    pub fn add_term(&mut self, label: L, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(label);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// True when the sum has no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when there are no terms; alias of [`LinComb::is_zero`] for
    /// collection-flavored call sites.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `label` (zero when absent).
    pub fn coeff(&self, label: &L) -> Coeff {
        self.terms.get(label).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms in canonical label order.
    pub fn iter(&self) -> impl Iterator<Item = (&L, &Coeff)> {
        self.terms.iter()
    }

    /// Labels in canonical order.
    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.terms.keys()
    }

    /// `self + other`.
    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    /// `self - other`.
    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }

    /// `-self`.
    pub fn negated(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }

    /// `scalar · self`.
    pub fn scaled(&self, scalar: &Coeff) -> Self {
        if scalar.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c * scalar))
                .collect(),
        }
    }

    /// Applies `f` to every label, collecting coefficients of collided
    /// images. Used for relabelings like `ω` and tensor flips.
    pub fn map_labels<M: Ord + Clone>(&self, f: impl Fn(&L) -> M) -> LinComb<M> {
        LinComb::from_terms(self.iter().map(|(l, c)| (f(l), c.clone())))
    }

    /// Sum of `f(label, coeff)` over all terms, as a fresh combination.
    /// This is linear extension: `f` gives the image of a basis label, the
    /// coefficient scales it.
    pub fn extend_linear<M: Ord + Clone>(&self, f: impl Fn(&L) -> LinComb<M>) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (l, c) in self.iter() {
            for (m, d) in f(l).iter() {
                out.add_term(m.clone(), c * d);
            }
        }
        out
    }
}

impl<L: Ord + Clone> FromIterator<(L, Coeff)> for LinComb<L> {
    fn from_iter<I: IntoIterator<Item = (L, Coeff)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    #[test]
    fn zeros_never_stored() {
        let mut x: LinComb<u32> = LinComb::zero();
        x.add_term(4, int(2));
        x.add_term(4, int(-2));
        assert!(x.is_zero());
        x.add_term(5, int(0));
        assert!(x.is_zero());
    }

    #[test]
    fn arithmetic() {
        let x = LinComb::from_terms([(1u32, int(2)), (2, int(-1))]);
        let y = LinComb::from_terms([(2u32, int(1)), (3, int(5))]);
        let s = x.plus(&y);
        assert_eq!(s.coeff(&1), int(2));
        assert_eq!(s.coeff(&2), int(0));
        assert_eq!(s.coeff(&3), int(5));
        assert_eq!(s.len(), 2);
        assert_eq!(x.minus(&x), LinComb::zero());
        assert_eq!(x.negated().scaled(&int(-1)), x);
    }

    #[test]
    fn map_labels_collects_collisions() {
        let x = LinComb::from_terms([(1u32, int(1)), (3, int(1))]);
        let y = x.map_labels(|l| l % 2);
        assert_eq!(y.coeff(&1), int(2));
        assert_eq!(y.len(), 1);
    }
}
