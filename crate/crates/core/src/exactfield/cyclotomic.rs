use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rationals. Numerator and denominator are kept coprime with a positive
/// denominator; zero is `0/1`.
pub type Rational = BigRational;

/// Euler's totient.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the `m`-th cyclotomic polynomial,
/// obtained by dividing `x^m - 1` by every `Φ_d` with `d | m`, `d < m`.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            num = divide_monic(&num, &divisor);
        }
    }
    let poly = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(m, poly.clone());
    poly
}

/// Exact quotient of integer polynomials; the divisor is monic and divides evenly.
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Reduce a polynomial in `ζ_m` modulo `Φ_m`, returning `φ(m)` coefficients.
fn reduce(mut poly: Vec<Rational>, m: u32) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    for k in (deg..poly.len()).rev() {
        let c = std::mem::take(&mut poly[k]);
        if c.is_zero() {
            continue;
        }
        for (i, p) in phi.iter().enumerate().take(deg) {
            if !p.is_zero() {
                poly[k - deg + i] -= &c * Rational::from_integer(p.clone());
            }
        }
    }
    poly.resize(deg, Rational::zero());
    poly
}

/// An element of the cyclotomic field `ℚ(ζ_m)`, stored as its coefficient
/// vector in the power basis `1, ζ_m, …, ζ_m^{φ(m)-1}`.
///
/// Elements that happen to be rational are normalized to conductor 1, so
/// `cyc(4)[-1,0]` and `-1/1` are the same value. Arithmetic between different
/// conductors happens in `ℚ(ζ_lcm)`.
#[derive(Clone)]
pub struct CyclotomicScalar {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicScalar {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        CyclotomicScalar {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// `num/den` as a scalar. Panics on a zero denominator.
    pub fn fraction(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Build from a raw power-basis vector of length at most `φ(m)`, or any
    /// polynomial in `ζ_m`; it is reduced modulo `Φ_m`.
    pub fn from_poly(conductor: u32, poly: Vec<Rational>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidArgument("conductor must be positive".into()));
        }
        Ok(Self::normalized(conductor, reduce(poly, conductor)))
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        assert!(m >= 1, "root of unity of order 0");
        let e = k.rem_euclid(m as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Self::normalized(m, reduce(poly, m))
    }

    pub fn zeta(m: u32) -> Self {
        Self::root_of_unity(m, 1)
    }

    fn normalized(conductor: u32, coeffs: Vec<Rational>) -> Self {
        if conductor > 1 && coeffs.iter().skip(1).all(Zero::is_zero) {
            let c0 = coeffs.into_iter().next().unwrap_or_else(Rational::zero);
            return Self::from_rational(c0);
        }
        CyclotomicScalar { conductor, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    /// Coefficients of this element inside `ℚ(ζ_target)`; `target` must be a
    /// multiple of the conductor.
    fn lifted_coeffs(&self, target: u32) -> Vec<Rational> {
        if target == self.conductor {
            return self.coeffs.clone();
        }
        debug_assert_eq!(target % self.conductor, 0);
        let step = (target / self.conductor) as usize;
        let len = (self.coeffs.len() - 1) * step + 1;
        let mut poly = vec![Rational::zero(); len];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        reduce(poly, target)
    }

    /// The same value, represented over conductor `target` (a multiple of the
    /// current conductor). The result is not renormalized.
    pub fn lift(&self, target: u32) -> Result<(u32, Vec<Rational>)> {
        if target == 0 || !target.is_multiple_of(self.conductor) {
            return Err(Error::InvalidArgument(format!(
                "cannot lift conductor {} to {}",
                self.conductor, target
            )));
        }
        Ok((target, self.lifted_coeffs(target)))
    }

    fn common(&self, other: &Self) -> (u32, Vec<Rational>, Vec<Rational>) {
        let m = self.conductor.lcm(&other.conductor);
        (m, self.lifted_coeffs(m), other.lifted_coeffs(m))
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return Self::normalized(self.conductor, coeffs);
        }
        let (m, a, b) = self.common(other);
        Self::normalized(m, a.into_iter().zip(b).map(|(x, y)| x + y).collect())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.conductor == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.conductor == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let (m, a, b) = self.common(other);
        let mut prod = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::normalized(m, reduce(prod, m))
    }

    /// Multiply by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CyclotomicScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse; fails only on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        // Solve (self · y) = 1 for y, as a linear system on power-basis coordinates.
        let m = self.conductor;
        let n = self.coeffs.len();
        let mut matrix: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n + 1]; n];
        for j in 0..n {
            let column = self.mul_ref(&Self::root_of_unity(m, j as i64));
            let col = column.lifted_coeffs(m);
            for (i, v) in col.into_iter().enumerate() {
                matrix[i][j] = v;
            }
        }
        matrix[0][n] = Rational::one();
        let solution = solve_square(matrix).ok_or(Error::DivisionByZero)?;
        Ok(Self::normalized(m, solution))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

/// Gauss–Jordan on an augmented `n × (n+1)` system; `None` when singular.
fn solve_square(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

impl Default for CyclotomicScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.common(other);
        a == b
    }
}

impl Eq for CyclotomicScalar {}

impl From<i64> for CyclotomicScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for CyclotomicScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl Neg for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        CyclotomicScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&CyclotomicScalar> for &CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $method(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
                let f: fn(&CyclotomicScalar, &CyclotomicScalar) -> CyclotomicScalar = $body;
                f(self, rhs)
            }
        }
        impl $trait<CyclotomicScalar> for CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $method(self, rhs: CyclotomicScalar) -> CyclotomicScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CyclotomicScalar> for CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $method(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<CyclotomicScalar> for &CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $method(self, rhs: CyclotomicScalar) -> CyclotomicScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));

impl AddAssign<&CyclotomicScalar> for CyclotomicScalar {
    fn add_assign(&mut self, rhs: &CyclotomicScalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&CyclotomicScalar> for CyclotomicScalar {
    fn sub_assign(&mut self, rhs: &CyclotomicScalar) {
        *self = self.add_ref(&-rhs);
    }
}

impl MulAssign<&CyclotomicScalar> for CyclotomicScalar {
    fn mul_assign(&mut self, rhs: &CyclotomicScalar) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for CyclotomicScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// `p/q` for rationals, `cyc(m)[c0,c1,…]` otherwise.
impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write_rational(f, &self.coeffs[0]);
        }
        write!(f, "cyc({})[", self.conductor)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_rational(f, c)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("malformed rational `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for CyclotomicScalar {
    type Err = Error;

    /// Accepts `p`, `p/q` and `cyc(m)[c0,…]` (the vector may be any polynomial
    /// in `ζ_m`; it is reduced).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("cyc(") {
            let bad = || Error::InvalidArgument(format!("malformed cyclotomic scalar `{s}`"));
            let (m, rest) = rest.split_once(')').ok_or_else(bad)?;
            let m: u32 = m.trim().parse().map_err(|_| bad())?;
            let body = rest
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(bad)?;
            let poly = if body.trim().is_empty() {
                vec![]
            } else {
                body.split(',')
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()?
            };
            return Self::from_poly(m, poly);
        }
        Ok(Self::from_rational(parse_rational(s)?))
    }
}

/// `ζ_m^k` with `gcd(k, m) = 1`: a primitive root of unity of order `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    order: u32,
    exponent: u32,
}

impl RootOfUnity {
    /// Primitive `order`-th root `ζ_order^exponent`; the exponent is reduced
    /// modulo the order and must be coprime to it.
    pub fn new(order: u32, exponent: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("root of unity of order 0".into()));
        }
        let e = exponent.rem_euclid(order as i64) as u32;
        if e.gcd(&order) != 1 {
            return Err(Error::InvalidArgument(format!(
                "ζ_{order}^{exponent} is not a primitive {order}-th root of unity"
            )));
        }
        Ok(RootOfUnity { order, exponent: e })
    }

    /// `exp(2πi · num/den)`, whatever its order turns out to be.
    pub fn from_turn(num: i64, den: u32) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator in turn".into()));
        }
        let num = num.rem_euclid(den as i64) as u32;
        let g = num.gcd(&den);
        let (num, den) = if num == 0 { (0, 1) } else { (num / g, den / g) };
        Ok(RootOfUnity {
            order: den,
            exponent: num,
        })
    }

    pub fn one() -> Self {
        RootOfUnity {
            order: 1,
            exponent: 0,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = self.order.lcm(&other.order);
        let num = self.exponent as i64 * (m / self.order) as i64
            + other.exponent as i64 * (m / other.order) as i64;
        Self::from_turn(num, m).expect("lcm is positive")
    }

    pub fn pow(&self, e: i64) -> Self {
        let num = (self.exponent as i64 * e).rem_euclid(self.order as i64);
        Self::from_turn(num, self.order).expect("order is positive")
    }

    pub fn to_scalar(&self) -> CyclotomicScalar {
        CyclotomicScalar::root_of_unity(self.order, self.exponent as i64)
    }
}

/// Written as a fraction of a full turn, `k/m`.
impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.exponent, self.order)
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed root of unity `{s}`, expected k/m"));
        let (k, m) = s.trim().split_once('/').ok_or_else(bad)?;
        let k: i64 = k.trim().parse().map_err(|_| bad())?;
        let m: u32 = m.trim().parse().map_err(|_| bad())?;
        Self::from_turn(k, m)
    }
}
