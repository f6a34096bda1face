use super::group::FiniteGroupData;
use super::table::HopfTable;
use crate::coalgebra::BasisCoalgebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::exactfield::{q_binomial_row, q_factorial, RootOfUnity, Scalar};
use crate::quivercoalg::{Path, WindowedFamily};

/// `p_{i,i+u}` in `K[A∞|s]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AInfLabel {
    pub i: i64,
    pub u: usize,
}

/// `q_{k̄|u}` in `K[Cₙ,s]`: the path of length `u` starting at `k mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CnLabel {
    pub k: usize,
    pub u: usize,
}

/// The quantum-line product on `K[A∞|s]` and `K[Cₙ,s]`:
///
/// `p_{i,i+u} p_{j,j+v} = q^{ju} C(u+v,u)_q p_{i+j,i+j+u+v}` for `u+v ≤ s`,
/// and otherwise, with `w = u+v−s−1`,
/// `α q^{ju} (w)_q!/((u)_q!(v)_q!) (p_{i+j+s+1,i+j+u+v} − p_{i+j,i+j+w})`.
#[derive(Debug, Clone)]
pub struct QuantumLineProduct {
    s: usize,
    alpha: Scalar,
    powers: Vec<Scalar>,
    binomials: Vec<Vec<Scalar>>,
    factorials: Vec<Scalar>,
}

impl QuantumLineProduct {
    pub fn new(s: usize, q: RootOfUnity, alpha: Scalar) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidArgument("s must be positive".into()));
        }
        if q.order() as usize != s + 1 {
            return Err(Error::InvalidArgument(format!(
                "q must be a primitive {}-th root of unity, got order {}",
                s + 1,
                q.order()
            )));
        }
        let qs = q.to_scalar();
        Ok(QuantumLineProduct {
            s,
            alpha,
            powers: (0..=s).map(|e| q.pow(e as i64).to_scalar()).collect(),
            binomials: (0..=s as u32).map(|m| q_binomial_row(m, &qs)).collect(),
            factorials: (0..=s as u32).map(|m| q_factorial(m, &qs)).collect(),
        })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// The product of `p_{i,i+u}` and `p_{j,j+v}` as terms
    /// `(start offset from i+j, length, coefficient)`.
    fn terms(&self, j: i64, u: usize, v: usize) -> Vec<(i64, usize, Scalar)> {
        let s = self.s;
        let qju = &self.powers[(j * u as i64).rem_euclid(s as i64 + 1) as usize];
        if u + v <= s {
            return vec![(0, u + v, qju * &self.binomials[u + v][u])];
        }
        if self.alpha.is_zero() {
            return Vec::new();
        }
        let w = u + v - s - 1;
        let denom = &self.factorials[u] * &self.factorials[v];
        let c = &(&self.alpha * qju)
            * &self.factorials[w]
                .checked_div(&denom)
                .expect("(u)_q! is nonzero for u ≤ s");
        vec![(s as i64 + 1, w, c.clone()), (0, w, -&c)]
    }

    fn check(&self, u: usize) -> Result<()> {
        if u > self.s {
            return Err(Error::InvalidArgument(format!(
                "path length {u} exceeds s = {}",
                self.s
            )));
        }
        Ok(())
    }

    pub fn ainf(&self, a: AInfLabel, b: AInfLabel) -> Result<Element<AInfLabel>> {
        self.check(a.u)?;
        self.check(b.u)?;
        Ok(self
            .terms(b.i, a.u, b.u)
            .into_iter()
            .map(|(off, u, c)| {
                (
                    AInfLabel {
                        i: a.i + b.i + off,
                        u,
                    },
                    c,
                )
            })
            .collect())
    }

    pub fn ainf_elements(
        &self,
        x: &Element<AInfLabel>,
        y: &Element<AInfLabel>,
    ) -> Result<Element<AInfLabel>> {
        let mut out = Element::zero();
        for (&a, ca) in x.iter() {
            for (&b, cb) in y.iter() {
                out.add_scaled(&self.ainf(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Same formula with vertex indices reduced mod `n`; needs `s+1 | n` so
    /// that `q^{ju}` depends only on `j mod n`.
    pub fn cn(&self, n: usize, a: CnLabel, b: CnLabel) -> Result<Element<CnLabel>> {
        if !n.is_multiple_of(self.s + 1) {
            return Err(Error::Precondition(format!(
                "s+1 = {} does not divide n = {n}",
                self.s + 1
            )));
        }
        self.check(a.u)?;
        self.check(b.u)?;
        let (i, j) = ((a.k % n) as i64, (b.k % n) as i64);
        Ok(self
            .terms(j, a.u, b.u)
            .into_iter()
            .map(|(off, u, c)| {
                let k = (i + j + off).rem_euclid(n as i64) as usize;
                (CnLabel { k, u }, c)
            })
            .collect())
    }
}

pub fn product_ainf(
    s: usize,
    q: RootOfUnity,
    alpha: &Scalar,
    a: AInfLabel,
    b: AInfLabel,
) -> Result<Element<AInfLabel>> {
    QuantumLineProduct::new(s, q, alpha.clone())?.ainf(a, b)
}

pub fn product_cn(
    n: usize,
    s: usize,
    q: RootOfUnity,
    alpha: &Scalar,
    a: CnLabel,
    b: CnLabel,
) -> Result<Element<CnLabel>> {
    QuantumLineProduct::new(s, q, alpha.clone())?.cn(n, a, b)
}

/// `Δ(p_{i,i+u}) = Σ_h p_{i,i+h} ⊗ p_{i+h,i+u}` in `K[A∞|s]`.
pub fn comul_ainf(a: AInfLabel) -> Element<(AInfLabel, AInfLabel)> {
    (0..=a.u)
        .map(|h| {
            (
                (
                    AInfLabel { i: a.i, u: h },
                    AInfLabel {
                        i: a.i + h as i64,
                        u: a.u - h,
                    },
                ),
                Scalar::one(),
            )
        })
        .collect()
}

/// Index of `h·x^u` in a table from [`build_hn`].
pub fn hn_index(s: usize, h: usize, u: usize) -> usize {
    h * (s + 1) + u
}

/// `Hₙ(s, q, G, g, χ, α)` on the basis `h·x^u` (`h ∈ G`, `0 ≤ u ≤ s`):
/// `(h x^u)(k x^v) = χ(k)^u hk x^{u+v}` with `x^{s+1} = α(g^{s+1} − 1)`,
/// `Δ(h x^u) = Σ_k C(u,k)_q h x^{u−k} ⊗ h g^{u−k} x^k`, `ε(h x^u) = δ_{u,0}`.
/// The antipode is computed and attached.
pub fn build_hn(
    s: usize,
    q: RootOfUnity,
    group: &FiniteGroupData,
    alpha: Scalar,
) -> Result<HopfTable> {
    let pre = |msg: String| Error::Precondition(msg);
    if s == 0 {
        return Err(pre("s must be positive".into()));
    }
    if q.order() as usize != s + 1 {
        return Err(pre(format!(
            "q must be a primitive {}-th root of unity",
            s + 1
        )));
    }
    let g = group.g();
    if group.chi(g) != q {
        return Err(pre(format!("χ(g) = {} differs from q = {q}", group.chi(g))));
    }
    let n = group.element_order(g);
    if n < 2 || !n.is_multiple_of(s + 1) {
        return Err(pre(format!(
            "ord(g) = {n} must be at least 2 and divisible by s+1 = {}",
            s + 1
        )));
    }
    if !alpha.is_zero() {
        if let Some(h) = (0..group.order()).find(|&h| !group.chi(h).pow(s as i64 + 1).is_one()) {
            return Err(pre(format!(
                "α may be nonzero only if χ^(s+1) = 1, but χ({})^{} ≠ 1",
                group.name(h),
                s + 1
            )));
        }
    }
    let order = group.order();
    let dim = order * (s + 1);
    let idx = |h: usize, u: usize| hn_index(s, h, u);
    let qs = q.to_scalar();
    let binomials: Vec<Vec<Scalar>> = (0..=s as u32).map(|m| q_binomial_row(m, &qs)).collect();
    let gs1 = group.pow(g, s + 1);

    let mut labels = Vec::with_capacity(dim);
    let mut degree = Vec::with_capacity(dim);
    let mut counit = Vec::with_capacity(dim);
    for h in 0..order {
        for u in 0..=s {
            let x = match u {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{u}"),
            };
            labels.push(match (group.name(h), u) {
                (hn, 0) => hn.to_string(),
                ("1", _) => x,
                (hn, _) => format!("{hn}·{x}"),
            });
            degree.push(u);
            counit.push(if u == 0 {
                Scalar::one()
            } else {
                Scalar::zero()
            });
        }
    }

    let mut product = vec![vec![Element::zero(); dim]; dim];
    for h in 0..order {
        for k in 0..order {
            let hk = group.mul(h, k);
            for u in 0..=s {
                let c = group.chi(k).pow(u as i64).to_scalar();
                for v in 0..=s {
                    let entry = &mut product[idx(h, u)][idx(k, v)];
                    if u + v <= s {
                        *entry = Element::term(idx(hk, u + v), c.clone());
                    } else if !alpha.is_zero() {
                        let w = u + v - s - 1;
                        let a = &c * &alpha;
                        let mut e = Element::term(idx(group.mul(hk, gs1), w), a.clone());
                        e.add_term(idx(hk, w), -&a);
                        *entry = e;
                    }
                }
            }
        }
    }

    let mut coproduct = Vec::with_capacity(dim);
    for h in 0..order {
        for u in 0..=s {
            let mut d = Element::zero();
            for k in 0..=u {
                let right = group.mul(h, group.pow(g, u - k));
                d.add_term((idx(h, u - k), idx(right, k)), binomials[u][k].clone());
            }
            coproduct.push(d);
        }
    }

    HopfTable {
        labels,
        unit: idx(group.identity(), 0),
        product,
        coproduct,
        counit,
        degree,
        antipode: None,
    }
    .with_antipode()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnIsoReport {
    pub basis_size: usize,
    pub comul: bool,
    pub counit: bool,
    pub bijective: bool,
    pub product_matches: bool,
    pub pairs_checked: usize,
    pub failure: Option<String>,
}

impl CnIsoReport {
    pub fn passed(&self) -> bool {
        self.comul && self.counit && self.bijective && self.product_matches
    }
}

/// Checks that `φ(q_{ī|u}) = c^i x^u / (u)_q!` is a coalgebra isomorphism
/// `K[Cₙ,s] → Hₙ(s, q, Cₙ, c, χ, α)` with `χ(c) = q`, and that the product of
/// `Hₙ` pulled back along `φ` is [`product_cn`].
pub fn verify_coalgebra_iso_cn(
    n: usize,
    s: usize,
    q: RootOfUnity,
    alpha: Scalar,
) -> Result<CnIsoReport> {
    if s == 0 || !n.is_multiple_of(s + 1) {
        return Err(Error::Precondition(format!(
            "s+1 = {} does not divide n = {n}",
            s + 1
        )));
    }
    let group = FiniteGroupData::cyclic(n, q)?;
    let h = build_hn(s, q, &group, alpha.clone())?;
    let prod = QuantumLineProduct::new(s, q, alpha)?;
    let c = WindowedFamily::cycle(n, s)?.build()?;
    let qs = q.to_scalar();
    let fact: Vec<Scalar> = (0..=s as u32).map(|m| q_factorial(m, &qs)).collect();
    let label_of = |p: &Path| CnLabel {
        k: c.quiver().source(p),
        u: p.len(),
    };
    // cyclic(n, ·) puts c^i at index i
    let phi = |l: CnLabel| -> Result<Element<usize>> {
        Ok(Element::term(hn_index(s, l.k, l.u), fact[l.u].inv()?))
    };
    let phi_inv = |x: &Element<usize>| -> Element<CnLabel> {
        x.iter()
            .map(|(&a, coef)| {
                let (k, u) = (a / (s + 1), a % (s + 1));
                (CnLabel { k, u }, coef * &fact[u])
            })
            .collect()
    };

    let mut failure = None;
    let mut comul = true;
    let mut counit = true;
    let mut images = std::collections::BTreeSet::new();
    for (bi, b) in c.basis().iter().enumerate() {
        let l = label_of(b);
        images.insert(hn_index(s, l.k, l.u));
        let img = phi(l)?;
        let lhs = h.comul(&img);
        let mut rhs = Element::zero();
        for &(i, j) in c.splits(bi) {
            let (li, lj) = (label_of(&c.basis()[i]), label_of(&c.basis()[j]));
            let (pi, pj) = (phi(li)?, phi(lj)?);
            for (&x, cx) in pi.iter() {
                for (&y, cy) in pj.iter() {
                    rhs.add_term((x, y), cx * cy);
                }
            }
        }
        if lhs != rhs {
            comul = false;
            failure.get_or_insert_with(|| format!("Δ at q_{{{}|{}}}", l.k, l.u));
        }
        let eps = if c.counit_at(bi) {
            Scalar::one()
        } else {
            Scalar::zero()
        };
        if h.counit_of(&img) != eps {
            counit = false;
            failure.get_or_insert_with(|| format!("ε at q_{{{}|{}}}", l.k, l.u));
        }
    }
    let bijective = images.len() == c.dim() && c.dim() == h.dim();

    let mut product_matches = true;
    let mut pairs = 0;
    for a in c.basis() {
        for b in c.basis() {
            let (la, lb) = (label_of(a), label_of(b));
            pairs += 1;
            let pulled = phi_inv(&h.mul(&phi(la)?, &phi(lb)?));
            if pulled != prod.cn(n, la, lb)? {
                product_matches = false;
                failure.get_or_insert_with(|| {
                    format!(
                        "product at (q_{{{}|{}}}, q_{{{}|{}}})",
                        la.k, la.u, lb.k, lb.u
                    )
                });
            }
        }
    }
    Ok(CnIsoReport {
        basis_size: c.dim(),
        comul,
        counit,
        bijective,
        product_matches,
        pairs_checked: pairs,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::q_binomial;
    use crate::hopf::verify_hopf;

    fn minus() -> RootOfUnity {
        RootOfUnity::new(2, 1).unwrap()
    }

    fn l(i: i64, u: usize) -> AInfLabel {
        AInfLabel { i, u }
    }

    #[test]
    fn ainf_examples() {
        let one = Scalar::one();
        let p = product_ainf(1, minus(), &one, l(3, 0), l(-2, 1)).unwrap();
        assert_eq!(p, Element::basis(l(1, 1)));
        let p = product_ainf(1, minus(), &one, l(0, 1), l(0, 1)).unwrap();
        let mut e = Element::basis(l(2, 0));
        e.add_term(l(0, 0), -Scalar::one());
        assert_eq!(p, e);
        let z3 = RootOfUnity::new(3, 1).unwrap();
        let p = product_ainf(2, z3, &one, l(0, 1), l(1, 1)).unwrap();
        let zeta = Scalar::zeta(3);
        let expect = &zeta * &(&Scalar::one() + &zeta);
        assert_eq!(p, Element::term(l(1, 2), expect));
    }

    #[test]
    fn cn_examples() {
        let c = |k, u| CnLabel { k, u };
        let zero = Scalar::zero();
        let p = product_cn(4, 1, minus(), &zero, c(0, 0), c(3, 1)).unwrap();
        assert_eq!(p, Element::basis(c(3, 1)));
        assert!(product_cn(2, 1, minus(), &zero, c(0, 1), c(0, 1))
            .unwrap()
            .is_zero());
        let p = product_cn(4, 1, minus(), &Scalar::one(), c(0, 1), c(0, 1)).unwrap();
        let mut e = Element::basis(c(2, 0));
        e.add_term(c(0, 0), -Scalar::one());
        assert_eq!(p, e);
        assert!(product_cn(3, 1, minus(), &zero, c(0, 1), c(0, 1)).is_err());
    }

    #[test]
    fn sweedler() {
        let g = FiniteGroupData::cyclic(2, minus()).unwrap();
        let h = build_hn(1, minus(), &g, Scalar::zero()).unwrap();
        assert_eq!(h.labels, vec!["1", "x", "c", "c·x"]);
        let r = verify_hopf(&h);
        assert!(r.passed(), "{r:?}");
        // x c = −c x, x² = 0
        assert_eq!(h.product[1][2], Element::term(3, -Scalar::one()));
        assert!(h.product[1][1].is_zero());
        let s = h.antipode.as_ref().unwrap();
        let mut fourth: Vec<Element<usize>> = (0..4).map(Element::basis).collect();
        for _ in 0..4 {
            fourth = fourth.iter().map(|x| HopfTable::apply(s, x)).collect();
        }
        assert_eq!(fourth, (0..4).map(Element::basis).collect::<Vec<_>>());
        assert_ne!(s[1], Element::basis(1));
    }

    #[test]
    fn corrupted_product_fails_associativity() {
        let g = FiniteGroupData::cyclic(2, minus()).unwrap();
        let mut h = build_hn(1, minus(), &g, Scalar::zero()).unwrap();
        h.product[1][2] = Element::term(3, Scalar::from_integer(2));
        let r = verify_hopf(&h);
        assert!(!r.associativity);
        assert!(r.failure.unwrap().starts_with("associativity"));
    }

    #[test]
    fn alpha_needs_trivial_power() {
        let g =
            FiniteGroupData::cyclic_times_c2(3, RootOfUnity::new(3, 1).unwrap(), minus()).unwrap();
        let z3 = RootOfUnity::new(3, 1).unwrap();
        assert!(build_hn(2, z3, &g, Scalar::one()).is_err());
        assert!(build_hn(2, z3, &g, Scalar::zero()).is_ok());
    }

    #[test]
    fn coproduct_uses_quantum_binomials() {
        let z4 = RootOfUnity::new(4, 1).unwrap();
        let g = FiniteGroupData::cyclic(4, z4).unwrap();
        let h = build_hn(3, z4, &g, Scalar::zero()).unwrap();
        let d = &h.coproduct[hn_index(3, 0, 3)];
        let q = z4.to_scalar();
        for k in 0..=3 {
            let right = hn_index(3, 3 - k, k);
            assert_eq!(
                d.coeff(&(hn_index(3, 0, 3 - k), right)),
                q_binomial(3, k as u32, &q).unwrap()
            );
        }
    }

    #[test]
    fn small_isos() {
        let r = verify_coalgebra_iso_cn(2, 1, minus(), Scalar::zero()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.pairs_checked, 16);
    }
}
