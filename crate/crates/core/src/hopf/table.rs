use super::group::FiniteGroupData;
use crate::element::{Element, Tensor};
use crate::error::{Error, Result};
use crate::exactfield::Scalar;

/// A finite dimensional Hopf algebra written out on a basis: structure
/// constants for the product and coproduct, counit values, the unit and
/// (once computed) the antipode.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfTable {
    pub labels: Vec<String>,
    pub unit: usize,
    /// `product[a][b] = b_a · b_b`.
    pub product: Vec<Vec<Element<usize>>>,
    pub coproduct: Vec<Tensor<usize>>,
    pub counit: Vec<Scalar>,
    /// Coradical filtration degree; the antipode recursion visits basis
    /// elements in increasing degree.
    pub degree: Vec<usize>,
    pub antipode: Option<Vec<Element<usize>>>,
}

impl HopfTable {
    /// The group algebra `KG`.
    pub fn group_algebra(group: &FiniteGroupData) -> Self {
        let n = group.order();
        HopfTable {
            labels: group.names().to_vec(),
            unit: group.identity(),
            product: (0..n)
                .map(|a| (0..n).map(|b| Element::basis(group.mul(a, b))).collect())
                .collect(),
            coproduct: (0..n).map(|a| Element::basis((a, a))).collect(),
            counit: vec![Scalar::one(); n],
            degree: vec![0; n],
            antipode: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, x: &Element<usize>, y: &Element<usize>) -> Element<usize> {
        let mut out = Element::zero();
        for (&a, ca) in x.iter() {
            for (&b, cb) in y.iter() {
                out.add_scaled(&self.product[a][b], &(ca * cb));
            }
        }
        out
    }

    pub fn comul(&self, x: &Element<usize>) -> Tensor<usize> {
        let mut out = Element::zero();
        for (&a, ca) in x.iter() {
            out.add_scaled(&self.coproduct[a], ca);
        }
        out
    }

    pub fn counit_of(&self, x: &Element<usize>) -> Scalar {
        x.iter().map(|(&a, c)| c * &self.counit[a]).sum()
    }

    /// `(x₁ ⊗ x₂)(y₁ ⊗ y₂) = x₁y₁ ⊗ x₂y₂`.
    pub fn mul_tensor(&self, x: &Tensor<usize>, y: &Tensor<usize>) -> Tensor<usize> {
        let mut out = Element::zero();
        for (&(a1, a2), ca) in x.iter() {
            for (&(b1, b2), cb) in y.iter() {
                let c = ca * cb;
                for (&l, cl) in self.product[a1][b1].iter() {
                    for (&r, cr) in self.product[a2][b2].iter() {
                        out.add_term((l, r), &(&c * cl) * cr);
                    }
                }
            }
        }
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn apply(map: &[Element<usize>], x: &Element<usize>) -> Element<usize> {
        let mut out = Element::zero();
        for (&a, c) in x.iter() {
            out.add_scaled(&map[a], c);
        }
        out
    }

    /// The same algebra on the reordered basis whose `i`-th element is the
    /// old `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.dim();
        let mut inv = vec![usize::MAX; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::InvalidArgument(
                    "not a permutation of the basis".into(),
                ));
            }
            inv[p] = i;
        }
        if perm.len() != n {
            return Err(Error::InvalidArgument(
                "not a permutation of the basis".into(),
            ));
        }
        let el = |x: &Element<usize>| x.map_labels(|&a| inv[a]);
        Ok(HopfTable {
            labels: perm.iter().map(|&p| self.labels[p].clone()).collect(),
            unit: inv[self.unit],
            product: perm
                .iter()
                .map(|&a| perm.iter().map(|&b| el(&self.product[a][b])).collect())
                .collect(),
            coproduct: perm
                .iter()
                .map(|&a| self.coproduct[a].map_labels(|&(l, r)| (inv[l], inv[r])))
                .collect(),
            counit: perm.iter().map(|&a| self.counit[a].clone()).collect(),
            degree: perm.iter().map(|&a| self.degree[a]).collect(),
            antipode: self
                .antipode
                .as_ref()
                .map(|s| perm.iter().map(|&a| el(&s[a])).collect()),
        })
    }

    pub fn with_antipode(mut self) -> Result<Self> {
        self.antipode = Some(compute_antipode(&self)?);
        Ok(self)
    }

    pub fn element_name(&self, x: &Element<usize>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(&a, c)| {
                if c.is_one() {
                    self.labels[a].clone()
                } else {
                    format!("({c})·{}", self.labels[a])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn grouplike_inverse(h: &HopfTable, g: usize) -> Result<usize> {
    if h.coproduct[g] != Element::basis((g, g)) {
        return Err(Error::Precondition(format!(
            "{} is not grouplike",
            h.labels[g]
        )));
    }
    let one = Element::basis(h.unit);
    (0..h.dim())
        .find(|&k| h.product[g][k] == one && h.product[k][g] == one)
        .ok_or_else(|| Error::Precondition(format!("grouplike {} has no inverse", h.labels[g])))
}

/// Solves `Σ S(c₁)c₂ = ε(c)1` basis element by basis element in increasing
/// coradical degree. Each `Δ(c)` must contain exactly one term `c ⊗ h` with
/// `h` an invertible grouplike, and every other left factor must have lower
/// degree.
pub fn compute_antipode(h: &HopfTable) -> Result<Vec<Element<usize>>> {
    let n = h.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&c| (h.degree[c], c));
    let mut s: Vec<Option<Element<usize>>> = vec![None; n];
    for c in order {
        let mut lead: Option<(usize, Scalar)> = None;
        let mut rest = Element::zero();
        for (&(c1, c2), coef) in h.coproduct[c].iter() {
            if c1 == c {
                if lead.is_some() {
                    return Err(Error::Precondition(format!(
                        "Δ({}) has two terms with left factor {}",
                        h.labels[c], h.labels[c]
                    )));
                }
                lead = Some((c2, coef.clone()));
                continue;
            }
            let s1 = s[c1].as_ref().ok_or_else(|| {
                Error::Precondition(format!(
                    "Δ({}) involves {} of no lower degree",
                    h.labels[c], h.labels[c1]
                ))
            })?;
            rest.add_scaled(&h.mul(s1, &Element::basis(c2)), coef);
        }
        let (g, coef) = lead.ok_or_else(|| {
            Error::Precondition(format!(
                "Δ({}) has no term {} ⊗ h",
                h.labels[c], h.labels[c]
            ))
        })?;
        let g_inv = grouplike_inverse(h, g)?;
        let mut rhs = Element::term(h.unit, h.counit[c].clone());
        rhs = &rhs - &rest;
        let value = h.mul(&rhs, &Element::basis(g_inv)).scale(&coef.inv()?);
        s[c] = Some(value);
    }
    Ok(s.into_iter()
        .map(|x| x.expect("every basis element visited"))
        .collect())
}

/// Outcome of the exhaustive axiom check. `failure` names the first axiom
/// that failed and the basis elements where it did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfReport {
    pub dim: usize,
    pub associativity: bool,
    pub unit: bool,
    pub coassociativity: bool,
    pub counit: bool,
    pub comul_multiplicative: bool,
    pub counit_multiplicative: bool,
    pub antipode_left: bool,
    pub antipode_right: bool,
    pub failure: Option<String>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.associativity
            && self.unit
            && self.coassociativity
            && self.counit
            && self.comul_multiplicative
            && self.counit_multiplicative
            && self.antipode_left
            && self.antipode_right
    }
}

/// Records the first failure; always returns `false`.
fn note(failure: &mut Option<String>, msg: String) -> bool {
    failure.get_or_insert(msg);
    false
}

pub fn verify_hopf(h: &HopfTable) -> HopfReport {
    let n = h.dim();
    let b = |a: usize| Element::basis(a);
    let name = |a: usize| h.labels[a].as_str();
    let mut failure: Option<String> = None;

    let mut associativity = true;
    'assoc: for x in 0..n {
        for y in 0..n {
            let xy = &h.product[x][y];
            for z in 0..n {
                let left = h.mul(xy, &b(z));
                let right = h.mul(&b(x), &h.product[y][z]);
                if left != right {
                    associativity = note(
                        &mut failure,
                        format!("associativity at ({}, {}, {})", name(x), name(y), name(z)),
                    );
                    break 'assoc;
                }
            }
        }
    }

    let mut unit =
        h.coproduct[h.unit] == Element::basis((h.unit, h.unit)) && h.counit[h.unit].is_one();
    if !unit {
        note(&mut failure, "unit is not grouplike".into());
    }
    if let Some(x) = (0..n).find(|&x| h.product[h.unit][x] != b(x) || h.product[x][h.unit] != b(x))
    {
        unit = note(&mut failure, format!("unit law at {}", name(x)));
    }

    let mut coassociativity = true;
    let mut counit = true;
    for x in 0..n {
        let d = &h.coproduct[x];
        let mut left: Element<(usize, usize, usize)> = Element::zero();
        let mut right: Element<(usize, usize, usize)> = Element::zero();
        let mut eps_left = Element::zero();
        let mut eps_right = Element::zero();
        for (&(x1, x2), c) in d.iter() {
            for (&(y1, y2), e) in h.coproduct[x1].iter() {
                left.add_term((y1, y2, x2), c * e);
            }
            for (&(y1, y2), e) in h.coproduct[x2].iter() {
                right.add_term((x1, y1, y2), c * e);
            }
            eps_left.add_term(x2, c * &h.counit[x1]);
            eps_right.add_term(x1, c * &h.counit[x2]);
        }
        if coassociativity && left != right {
            coassociativity = note(&mut failure, format!("coassociativity at {}", name(x)));
        }
        if counit && (eps_left != b(x) || eps_right != b(x)) {
            counit = note(&mut failure, format!("counit law at {}", name(x)));
        }
    }

    let mut comul_multiplicative = true;
    let mut counit_multiplicative = true;
    for x in 0..n {
        for y in 0..n {
            let xy = &h.product[x][y];
            if comul_multiplicative && h.comul(xy) != h.mul_tensor(&h.coproduct[x], &h.coproduct[y])
            {
                comul_multiplicative = note(
                    &mut failure,
                    format!("Δ(ab) = Δ(a)Δ(b) at ({}, {})", name(x), name(y)),
                );
            }
            if counit_multiplicative && h.counit_of(xy) != &h.counit[x] * &h.counit[y] {
                counit_multiplicative = note(
                    &mut failure,
                    format!("ε(ab) = ε(a)ε(b) at ({}, {})", name(x), name(y)),
                );
            }
        }
    }

    let (mut antipode_left, mut antipode_right) = (false, false);
    match &h.antipode {
        None => {
            note(&mut failure, "no antipode".into());
        }
        Some(s) => {
            antipode_left = true;
            antipode_right = true;
            for x in 0..n {
                let expect = Element::term(h.unit, h.counit[x].clone());
                let mut l = Element::zero();
                let mut r = Element::zero();
                for (&(x1, x2), c) in h.coproduct[x].iter() {
                    l.add_scaled(&h.mul(&s[x1], &b(x2)), c);
                    r.add_scaled(&h.mul(&b(x1), &s[x2]), c);
                }
                if antipode_left && l != expect {
                    antipode_left = note(&mut failure, format!("Σ S(a₁)a₂ = ε(a)1 at {}", name(x)));
                }
                if antipode_right && r != expect {
                    antipode_right =
                        note(&mut failure, format!("Σ a₁S(a₂) = ε(a)1 at {}", name(x)));
                }
            }
        }
    }

    HopfReport {
        dim: n,
        associativity,
        unit,
        coassociativity,
        counit,
        comul_multiplicative,
        counit_multiplicative,
        antipode_left,
        antipode_right,
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::RootOfUnity;

    #[test]
    fn group_algebra_of_c3() {
        let g = FiniteGroupData::cyclic(3, RootOfUnity::one()).unwrap();
        let h = HopfTable::group_algebra(&g).with_antipode().unwrap();
        let s = h.antipode.as_ref().unwrap();
        for a in 0..3 {
            assert_eq!(s[a], Element::basis(g.inverse(a)));
        }
        let r = verify_hopf(&h);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn missing_antipode_is_reported() {
        let g = FiniteGroupData::cyclic(2, RootOfUnity::one()).unwrap();
        let r = verify_hopf(&HopfTable::group_algebra(&g));
        assert!(r.associativity && !r.antipode_left && !r.passed());
        assert_eq!(r.failure.as_deref(), Some("no antipode"));
    }
}
