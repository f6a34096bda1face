//! Coalgebras with a distinguished basis on which Δ and ε have 0/1
//! structure constants. Both path and incidence subcoalgebras are of this
//! kind, which lets the balanced-form machinery work on basis indices.

use std::fmt::Debug;

use crate::element::{Element, Tensor};
use crate::exactfield::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

pub trait BasisCoalgebra {
    type Label: Clone + Ord + Debug;

    fn basis(&self) -> &[Self::Label];

    fn dim(&self) -> usize {
        self.basis().len()
    }

    fn index_of(&self, label: &Self::Label) -> Option<usize>;

    /// `Δ(b_k) = Σ b_i ⊗ b_j` over the returned pairs `(i, j)`, all with
    /// coefficient one. Pairs are listed by increasing length of `b_i`.
    fn splits(&self, k: usize) -> &[(usize, usize)];

    /// `ε(b_k)`, which is 0 or 1.
    fn counit_at(&self, k: usize) -> bool;

    /// Human-readable name of a basis element.
    fn label_name(&self, k: usize) -> String;

    fn comul_indices(&self, k: usize) -> Tensor<usize> {
        self.splits(k).iter().map(|&p| (p, Scalar::one())).collect()
    }

    fn comul_labels(&self, k: usize) -> Tensor<Self::Label> {
        let b = self.basis();
        self.splits(k)
            .iter()
            .map(|&(i, j)| ((b[i].clone(), b[j].clone()), Scalar::one()))
            .collect()
    }
}

/// Returns the first basis index where `(Δ⊗id)Δ ≠ (id⊗Δ)Δ`.
pub fn coassociativity_failure<C: BasisCoalgebra + ?Sized>(c: &C) -> Option<usize> {
    (0..c.dim()).find(|&k| {
        let mut lhs: Element<(usize, usize, usize)> = Element::zero();
        let mut rhs: Element<(usize, usize, usize)> = Element::zero();
        for &(i, j) in c.splits(k) {
            for &(a, b) in c.splits(i) {
                lhs.add_term((a, b, j), Scalar::one());
            }
            for &(a, b) in c.splits(j) {
                rhs.add_term((i, a, b), Scalar::one());
            }
        }
        lhs != rhs
    })
}

/// Returns the first basis index where a counit law fails.
pub fn counit_failure<C: BasisCoalgebra + ?Sized>(c: &C) -> Option<usize> {
    (0..c.dim()).find(|&k| {
        let mut left: Element<usize> = Element::zero();
        let mut right: Element<usize> = Element::zero();
        for &(i, j) in c.splits(k) {
            if c.counit_at(i) {
                left.add_term(j, Scalar::one());
            }
            if c.counit_at(j) {
                right.add_term(i, Scalar::one());
            }
        }
        left != Element::basis(k) || right != Element::basis(k)
    })
}
