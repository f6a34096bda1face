use std::collections::{BTreeMap, BTreeSet};

use super::BilinearForm;
use crate::coalgebra::BasisCoalgebra;
use crate::error::{Error, Result};
use crate::exactfield::Scalar;
use crate::quivercoalg::{Path, PathSubcoalgebra};

/// The paths `d = qp` (with `q, p` in the basis) that parameterize the
/// balanced forms of a path subcoalgebra, each with one witness
/// decomposition `(q, p)` given as basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSet {
    pub paths: Vec<Path>,
    pub witnesses: Vec<(usize, usize)>,
}

impl FSet {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn position(&self, d: &Path) -> Option<usize> {
        self.paths.iter().position(|x| x == d)
    }
}

/// Whether every decomposition `d = qp` into basis paths passes both arrow
/// tests: `ap ∈ B` forces `q` to end with `a`, and `qb ∈ B` forces `p` to
/// start with `b`. Vertex factors count as decompositions.
fn passes_arrow_tests(c: &PathSubcoalgebra, d: &Path) -> bool {
    let quiver = c.quiver();
    for (q, p) in quiver.path_splits(d) {
        if !c.contains(&q) || !c.contains(&p) {
            continue;
        }
        for a in quiver.in_arrows(quiver.source(&p)) {
            let ap = quiver
                .concat(&Path::Arrows(vec![a]), &p)
                .expect("arrow ends at s(p)");
            if c.contains(&ap) && q.last_arrow() != Some(a) {
                return false;
            }
        }
        for b in quiver.out_arrows(quiver.target(&q)) {
            let qb = quiver
                .concat(&q, &Path::Arrows(vec![b]))
                .expect("arrow starts at t(q)");
            if c.contains(&qb) && p.first_arrow() != Some(b) {
                return false;
            }
        }
    }
    true
}

/// Enumerates every concatenation `qp` of basis paths and keeps those passing
/// the arrow tests. Ordered by length, then path.
pub fn compute_f(c: &PathSubcoalgebra) -> FSet {
    let quiver = c.quiver();
    let basis = c.basis();
    let mut candidates: BTreeMap<(usize, Path), (usize, usize)> = BTreeMap::new();
    for (qi, q) in basis.iter().enumerate() {
        for (pi, p) in basis.iter().enumerate() {
            if let Some(d) = quiver.concat(q, p) {
                candidates.entry((d.len(), d)).or_insert((qi, pi));
            }
        }
    }
    let mut paths = Vec::new();
    let mut witnesses = Vec::new();
    for ((_, d), w) in candidates {
        if passes_arrow_tests(c, &d) {
            paths.push(d);
            witnesses.push(w);
        }
    }
    FSet { paths, witnesses }
}

/// `β(p, q) = α_d` when `s(p) = t(q)` and `qp = d ∈ F`, else 0.
pub fn form_from_f<'a>(
    c: &'a PathSubcoalgebra,
    f: &FSet,
    alpha: &[Scalar],
) -> Result<BilinearForm<'a, PathSubcoalgebra>> {
    if alpha.len() != f.len() {
        return Err(Error::InvalidArgument(format!(
            "{} parameters for an F-set of size {}",
            alpha.len(),
            f.len()
        )));
    }
    let lookup: BTreeMap<&Path, &Scalar> = f.paths.iter().zip(alpha).collect();
    let quiver = c.quiver();
    let mut form = BilinearForm::zero(c);
    for (pi, p) in c.basis().iter().enumerate() {
        for (qi, q) in c.basis().iter().enumerate() {
            if let Some(d) = quiver.concat(q, p) {
                if let Some(&v) = lookup.get(&d) {
                    form.set(pi, qi, v.clone());
                }
            }
        }
    }
    Ok(form)
}

/// Paths of `F` as printable names, for reports.
pub fn f_names(c: &PathSubcoalgebra, f: &FSet) -> BTreeSet<String> {
    f.paths.iter().map(|p| c.quiver().path_name(p)).collect()
}
