//! Exact linear algebra: a sparse fraction-free eliminator over ℤ for large
//! homogeneous systems with integer coefficients, and dense Gaussian
//! elimination over the cyclotomic ground field.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactfield::{Rational, Scalar};

pub type SparseRow = BTreeMap<usize, BigInt>;

/// Incremental row-echelon form over ℤ.
///
/// Rows are reduced against existing pivots with the fraction-free update
/// `r ← p·r − a·P` and then divided by their content, so entries stay small.
/// Each stored row's pivot is its leading (smallest) column; the pivot for a
/// new row is the first nonzero entry left after reduction, which makes the
/// result depend only on the order rows are inserted.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

fn primitive_part(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let negate = row.values().next().is_some_and(|v| v.is_negative());
    if !g.is_one() && !g.is_zero() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
    if negate {
        for v in row.values_mut() {
            *v = -std::mem::take(v);
        }
    }
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    /// Insert a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        debug_assert!(row.keys().all(|&c| c < self.ncols));
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                return false;
            };
            let Some(pivot_row) = self.pivots.get(&lead) else {
                primitive_part(&mut row);
                self.pivots.insert(lead, row);
                return true;
            };
            let p = &pivot_row[&lead];
            let a = row[&lead].clone();
            let mut next = SparseRow::new();
            for (&c, v) in &row {
                next.insert(c, v * p);
            }
            for (&c, v) in pivot_row {
                let e = next.entry(c).or_insert_with(BigInt::zero);
                *e -= &a * v;
            }
            next.retain(|_, v| !v.is_zero());
            primitive_part(&mut next);
            row = next;
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Basis of the solution space of `A x = 0`: one primitive integer vector
    /// per free column `f`, normalized so that `x_f > 0` and every other free
    /// coordinate is zero.
    pub fn nullspace(&self) -> Vec<SparseRow> {
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut x: BTreeMap<usize, Rational> = BTreeMap::new();
                x.insert(f, Rational::one());
                for (&pc, row) in self.pivots.iter().rev() {
                    let mut acc = Rational::zero();
                    for (&c, a) in row.range(pc + 1..) {
                        if let Some(v) = x.get(&c) {
                            acc += v * Rational::from_integer(a.clone());
                        }
                    }
                    if !acc.is_zero() {
                        x.insert(pc, -acc / Rational::from_integer(row[&pc].clone()));
                    }
                }
                let denom = x.values().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
                let mut out: SparseRow = x
                    .into_iter()
                    .map(|(c, v)| (c, (v * Rational::from_integer(denom.clone())).to_integer()))
                    .collect();
                let g = out.values().fold(BigInt::zero(), |g, v| g.gcd(v));
                if !g.is_zero() && !g.is_one() {
                    for v in out.values_mut() {
                        *v /= &g;
                    }
                }
                if out[&f].is_negative() {
                    for v in out.values_mut() {
                        *v = -std::mem::take(v);
                    }
                }
                out
            })
            .collect()
    }
}

/// Nullspace of an integer system given as sparse rows.
pub fn integer_nullspace(
    ncols: usize,
    rows: impl IntoIterator<Item = SparseRow>,
) -> Vec<SparseRow> {
    let mut ech = SparseEchelon::new(ncols);
    for r in rows {
        ech.insert(r);
    }
    ech.nullspace()
}

/// Reduced row-echelon form over the ground field, in place. Returns the pivot
/// columns. Pivots are chosen as the first nonzero entry scanning rows top
/// down within each column.
pub fn rref(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    if !m[r][j].is_zero() {
                        let t = &f * &m[r][j];
                        m[i][j] -= &t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Basis of `{x : M x = 0}`.
pub fn nullspace(m: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Scalar::zero(); ncols];
            x[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -&work[row][f];
            }
            x
        })
        .collect()
}

pub fn transpose(m: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    (0..ncols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()
    }

    #[test]
    fn sparse_nullspace_small() {
        // x0 - x1 = 0, 2 x1 - 2 x2 = 0, x3 = 0 over 5 columns
        let ns = integer_nullspace(
            5,
            vec![
                row(&[(0, 1), (1, -1)]),
                row(&[(1, 2), (2, -2)]),
                row(&[(3, 1)]),
            ],
        );
        assert_eq!(ns.len(), 2);
        assert_eq!(ns[0], row(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(ns[1], row(&[(4, 1)]));
    }

    #[test]
    fn dependent_rows_do_not_raise_rank() {
        let mut e = SparseEchelon::new(3);
        assert!(e.insert(row(&[(0, 2), (1, 4)])));
        assert!(!e.insert(row(&[(0, -3), (1, -6)])));
        assert!(e.insert(row(&[(1, 1), (2, 1)])));
        assert!(!e.insert(row(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn dense_rank_and_nullspace() {
        let z = Scalar::zeta(3);
        let m = vec![
            vec![Scalar::one(), z.clone(), Scalar::zero()],
            vec![z.clone(), &z * &z, Scalar::zero()],
        ];
        assert_eq!(rank(&m), 1);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &m {
                let dot: Scalar = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
