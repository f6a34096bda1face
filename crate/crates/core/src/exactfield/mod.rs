//! Exact scalars: rationals, cyclotomic fields `ℚ(ζ_m)` and q-combinatorics.

mod cyclotomic;
mod qcomb;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicScalar, Rational, RootOfUnity};
pub use qcomb::{q_binomial, q_binomial_row, q_factorial, q_integer};

/// The ground field every computation in this crate works over.
pub type Scalar = CyclotomicScalar;
