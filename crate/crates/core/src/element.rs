//! Finitely supported formal linear combinations of basis labels.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::exactfield::Scalar;

/// `Σ c_l · l` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<L: Ord> {
    terms: BTreeMap<L, Scalar>,
}

/// An element of a tensor square, indexed by pairs of labels.
pub type Tensor<L> = Element<(L, L)>;

impl<L: Ord> Default for Element<L> {
    fn default() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }
}

impl<L: Ord + Clone> Element<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: L) -> Self {
        Self::term(label, Scalar::one())
    }

    pub fn term(label: L, coeff: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(label, coeff);
        e
    }

    pub fn add_term(&mut self, label: L, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c * factor))
                .collect(),
        }
    }

    pub fn coeff(&self, label: &L) -> Scalar {
        self.terms.get(label).cloned().unwrap_or_else(Scalar::zero)
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

    pub fn iter(&self) -> impl Iterator<Item = (&L, &Scalar)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.terms.keys()
    }

    /// Apply a linear map given on basis labels.
    pub fn map_linear<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> Element<M>) -> Element<M> {
        let mut out = Element::zero();
        for (l, c) in &self.terms {
            out.add_scaled(&f(l), c);
        }
        out
    }

    /// Relabel terms; labels that collide are summed.
    pub fn map_labels<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> Element<M> {
        self.terms.iter().map(|(l, c)| (f(l), c.clone())).collect()
    }
}

impl<L: Ord + Clone> FromIterator<(L, Scalar)> for Element<L> {
    fn from_iter<I: IntoIterator<Item = (L, Scalar)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (l, c) in iter {
            e.add_term(l, c);
        }
        e
    }
}

impl<L: Ord + Clone> Add for &Element<L> {
    type Output = Element<L>;
    fn add(self, rhs: &Element<L>) -> Element<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl<L: Ord + Clone> Add for Element<L> {
    type Output = Element<L>;
    fn add(self, rhs: Element<L>) -> Element<L> {
        &self + &rhs
    }
}

impl<L: Ord + Clone> Sub for &Element<L> {
    type Output = Element<L>;
    fn sub(self, rhs: &Element<L>) -> Element<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_integer(-1));
        out
    }
}

impl<L: Ord + Clone> Neg for &Element<L> {
    type Output = Element<L>;
    fn neg(self) -> Element<L> {
        self.scale(&Scalar::from_integer(-1))
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for Element<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·{l:?}")?;
        }
        Ok(())
    }
}
