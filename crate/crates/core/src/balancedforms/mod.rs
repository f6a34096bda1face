//! Balanced bilinear forms: the direct checker, the brute-force solution
//! space of the balancing equations, and the closed-form parameterizations
//! for path and incidence subcoalgebras.

mod incidence;
mod path;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::coalgebra::BasisCoalgebra;
use crate::error::{Error, Result};
use crate::exactfield::Scalar;
use crate::linalg::{self, SparseEchelon, SparseRow};

pub use incidence::{compute_incidence_params, form_from_params, IncidenceFormParam, PairParams};
pub use path::{compute_f, f_names, form_from_f, FSet};

pub const DEFAULT_BOUND: usize = 40;

/// A bilinear form `β` on a coalgebra, stored as the matrix `β(b_i, b_j)`.
#[derive(Debug, Clone)]
pub struct BilinearForm<'a, C: BasisCoalgebra + ?Sized> {
    coalgebra: &'a C,
    matrix: Vec<Vec<Scalar>>,
}

impl<'a, C: BasisCoalgebra + ?Sized> BilinearForm<'a, C> {
    pub fn zero(coalgebra: &'a C) -> Self {
        let n = coalgebra.dim();
        BilinearForm {
            coalgebra,
            matrix: vec![vec![Scalar::zero(); n]; n],
        }
    }

    pub fn from_matrix(coalgebra: &'a C, matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = coalgebra.dim();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "form matrix must be {n}×{n}"
            )));
        }
        Ok(BilinearForm { coalgebra, matrix })
    }

    /// Reads an integer vector indexed by `p·n + q`.
    pub fn from_vector(coalgebra: &'a C, v: &SparseRow) -> Self {
        let n = coalgebra.dim();
        let mut f = Self::zero(coalgebra);
        for (&k, a) in v {
            f.matrix[k / n][k % n] = Scalar::from_rational(a.clone().into());
        }
        f
    }

    pub fn coalgebra(&self) -> &'a C {
        self.coalgebra
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn get(&self, p: usize, q: usize) -> &Scalar {
        &self.matrix[p][q]
    }

    pub fn set(&mut self, p: usize, q: usize, v: Scalar) {
        self.matrix[p][q] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Scalar::is_zero)
    }

    /// Nonzero entries as `(p·n + q) ↦ value`.
    pub fn support(&self) -> BTreeMap<usize, Scalar> {
        let n = self.matrix.len();
        let mut out = BTreeMap::new();
        for (p, row) in self.matrix.iter().enumerate() {
            for (q, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.insert(p * n + q, v.clone());
                }
            }
        }
        out
    }
}

/// A basis pair `(p, q)` and coordinate `c` at which
/// `Σ β(p₂,q) p₁ = Σ β(p,q₁) q₂` fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub p: usize,
    pub q: usize,
    pub coordinate: usize,
}

/// For a pair `(p, q)`, the coefficient of each basis coordinate in
/// `Σ β(p₂,q) p₁ − Σ β(p,q₁) q₂`, as unknown indices with signs.
fn balance_terms<C: BasisCoalgebra + ?Sized>(
    c: &C,
    p: usize,
    q: usize,
) -> BTreeMap<usize, Vec<(usize, i64)>> {
    let n = c.dim();
    let mut by_coord: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
    for &(p1, p2) in c.splits(p) {
        by_coord.entry(p1).or_default().push((p2 * n + q, 1));
    }
    for &(q1, q2) in c.splits(q) {
        by_coord.entry(q2).or_default().push((p * n + q1, -1));
    }
    by_coord
}

/// Expands both sides of the balancing identity for every basis pair.
pub fn is_balanced<C: BasisCoalgebra + ?Sized>(
    form: &BilinearForm<'_, C>,
) -> std::result::Result<(), Counterexample> {
    let c = form.coalgebra;
    let n = c.dim();
    for p in 0..n {
        for q in 0..n {
            for (coord, terms) in balance_terms(c, p, q) {
                let mut total = Scalar::zero();
                for (k, sign) in terms {
                    let v = &form.matrix[k / n][k % n];
                    if sign > 0 {
                        total += v;
                    } else {
                        total -= v;
                    }
                }
                if !total.is_zero() {
                    return Err(Counterexample {
                        p,
                        q,
                        coordinate: coord,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Rows of the homogeneous system in the `n²` unknowns `β(p, q)`
/// (index `p·n + q`), one per pair and coordinate, zero rows dropped.
pub fn balance_equations<C: BasisCoalgebra + ?Sized>(c: &C) -> Vec<SparseRow> {
    let n = c.dim();
    let mut rows = Vec::new();
    for p in 0..n {
        for q in 0..n {
            for (_, terms) in balance_terms(c, p, q) {
                let mut row = SparseRow::new();
                for (k, sign) in terms {
                    *row.entry(k).or_default() += BigInt::from(sign);
                }
                row.retain(|_, v| *v != BigInt::default());
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Exact basis of the space of balanced forms, found by solving the
/// balancing equations directly. Each vector is primitive and integral,
/// indexed by `p·n + q`.
pub fn balanced_space_bruteforce<C: BasisCoalgebra + ?Sized>(
    c: &C,
    bound: usize,
) -> Result<Vec<SparseRow>> {
    let n = c.dim();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    let mut ech = SparseEchelon::new(n * n);
    for row in balance_equations(c) {
        ech.insert(row);
    }
    Ok(ech.nullspace())
}

/// Whether a form satisfies every balancing equation; a second route to the
/// same question as [`is_balanced`], through the assembled linear system.
pub fn satisfies_equations<C: BasisCoalgebra + ?Sized>(form: &BilinearForm<'_, C>) -> bool {
    let n = form.coalgebra.dim();
    balance_equations(form.coalgebra).iter().all(|row| {
        let mut total = Scalar::zero();
        for (&k, a) in row {
            let v = &form.matrix[k / n][k % n];
            if a.is_one() {
                total += v;
            } else {
                total += &(v * &Scalar::from_rational(a.clone().into()));
            }
        }
        total.is_zero()
    })
}

/// Bases of `{x : β(x, C) = 0}` and `{y : β(C, y) = 0}`.
#[derive(Debug, Clone)]
pub struct Radicals {
    pub left: Vec<Vec<Scalar>>,
    pub right: Vec<Vec<Scalar>>,
}

impl Radicals {
    pub fn left_trivial(&self) -> bool {
        self.left.is_empty()
    }

    pub fn right_trivial(&self) -> bool {
        self.right.is_empty()
    }
}

pub fn radicals<C: BasisCoalgebra + ?Sized>(form: &BilinearForm<'_, C>) -> Radicals {
    let n = form.matrix.len();
    Radicals {
        left: linalg::nullspace(&linalg::transpose(&form.matrix, n), n),
        right: linalg::nullspace(&form.matrix, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidencecoalg::{IncidenceSubcoalgebra, Poset};
    use crate::quivercoalg::{Path, PathSubcoalgebra, Quiver, WindowedFamily};

    fn uv() -> PathSubcoalgebra {
        let q = Quiver::new(["u", "v"], [("a".into(), "u".into(), "v".into())]).unwrap();
        PathSubcoalgebra::full(q).unwrap()
    }

    fn points(n: usize) -> PathSubcoalgebra {
        let q = Quiver::new((0..n).map(|i| i.to_string()), []).unwrap();
        PathSubcoalgebra::full(q).unwrap()
    }

    #[test]
    fn zero_form_is_balanced() {
        let c = uv();
        let f = BilinearForm::zero(&c);
        assert!(is_balanced(&f).is_ok());
        let r = radicals(&f);
        assert_eq!((r.left.len(), r.right.len()), (3, 3));
    }

    #[test]
    fn single_entry_on_the_arrow_is_not_balanced() {
        let c = uv();
        let a = c.index_of(&Path::Arrows(vec![0])).unwrap();
        let mut f = BilinearForm::zero(&c);
        f.set(a, a, Scalar::one());
        let e = is_balanced(&f).unwrap_err();
        assert_eq!((e.p, e.q), (a, a));
        assert!(!satisfies_equations(&f));
    }

    #[test]
    fn bruteforce_dimensions() {
        assert_eq!(balanced_space_bruteforce(&points(4), 40).unwrap().len(), 4);
        assert_eq!(balanced_space_bruteforce(&uv(), 40).unwrap().len(), 1);
        let c2 = WindowedFamily::cycle(2, 1).unwrap().build().unwrap();
        assert_eq!(balanced_space_bruteforce(&c2, 40).unwrap().len(), 4);
        assert!(matches!(
            balanced_space_bruteforce(&c2, 3),
            Err(Error::SizeBound { size: 4, bound: 3 })
        ));
    }

    #[test]
    fn identity_form_on_grouplikes_is_nondegenerate() {
        let c = points(3);
        let mut f = BilinearForm::zero(&c);
        for i in 0..3 {
            f.set(i, i, Scalar::one());
        }
        assert!(is_balanced(&f).is_ok());
        let r = radicals(&f);
        assert!(r.left_trivial() && r.right_trivial());
    }

    #[test]
    fn bruteforce_vectors_are_balanced() {
        let c = IncidenceSubcoalgebra::full(Poset::chain(3));
        let ns = balanced_space_bruteforce(&c, 40).unwrap();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(is_balanced(&BilinearForm::from_vector(&c, v)).is_ok());
        }
    }
}
