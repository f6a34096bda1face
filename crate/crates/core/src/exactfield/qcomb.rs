//! q-analogues: q-integers, q-factorials and Gaussian binomial coefficients.

use super::CyclotomicScalar;
use crate::error::{Error, Result};

/// `(n)_q = 1 + q + … + q^{n-1}`.
pub fn q_integer(n: u32, q: &CyclotomicScalar) -> CyclotomicScalar {
    let mut acc = CyclotomicScalar::zero();
    let mut power = CyclotomicScalar::one();
    for _ in 0..n {
        acc += &power;
        power = &power * q;
    }
    acc
}

/// `(n)_q! = (1)_q (2)_q ⋯ (n)_q`, with `(0)_q! = 1`.
pub fn q_factorial(n: u32, q: &CyclotomicScalar) -> CyclotomicScalar {
    (1..=n).fold(CyclotomicScalar::one(), |acc, k| acc * q_integer(k, q))
}

/// Row `n` of the q-Pascal triangle, `[C(n,0)_q, …, C(n,n)_q]`, built with
/// `C(n,k)_q = C(n-1,k-1)_q + q^k C(n-1,k)_q`. No division is involved, so the
/// row is correct at roots of unity where q-integers vanish.
pub fn q_binomial_row(n: u32, q: &CyclotomicScalar) -> Vec<CyclotomicScalar> {
    let powers: Vec<CyclotomicScalar> =
        std::iter::successors(Some(CyclotomicScalar::one()), |p| Some(p * q))
            .take(n as usize + 1)
            .collect();
    let mut row = vec![CyclotomicScalar::one()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        next.push(CyclotomicScalar::one());
        for k in 1..m {
            next.push(&row[k - 1] + &powers[k] * &row[k]);
        }
        next.push(CyclotomicScalar::one());
        row = next;
    }
    row
}

/// Gaussian binomial `C(n,k)_q`; `k > n` is an error.
pub fn q_binomial(n: u32, k: u32, q: &CyclotomicScalar) -> Result<CyclotomicScalar> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "q-binomial C({n},{k}) needs k <= n"
        )));
    }
    Ok(q_binomial_row(n, q).swap_remove(k as usize))
}
