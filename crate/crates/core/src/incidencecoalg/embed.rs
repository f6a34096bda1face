use std::collections::HashMap;

use super::poset::Poset;
use super::subcoalgebra::{segment_name, IncidenceSubcoalgebra, Segment};
use crate::coalgebra::BasisCoalgebra;
use crate::element::{Element, Tensor};
use crate::exactfield::Scalar;
use crate::linalg::{SparseEchelon, SparseRow};
use crate::quivercoalg::{Path, Quiver};

/// Vertices are the elements of `X`; there is one arrow `x->y` for every
/// cover `x ⋖ y`.
pub fn hasse_quiver(poset: &Poset) -> Quiver {
    let arrows = poset.covers().into_iter().map(|(x, y)| {
        (
            format!("{}->{}", poset.name(x), poset.name(y)),
            poset.name(x).to_string(),
            poset.name(y).to_string(),
        )
    });
    Quiver::new(poset.elements().to_vec(), arrows).expect("covers join declared elements")
}

/// All paths from `x` to `y` in the Hasse quiver, in DFS order.
pub fn hasse_paths(quiver: &Quiver, poset: &Poset, x: usize, y: usize) -> Vec<Path> {
    if x == y {
        return vec![Path::Vertex(x)];
    }
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(x, Vec::new())];
    while let Some((v, arrows)) = stack.pop() {
        if v == y {
            out.push(Path::Arrows(arrows));
            continue;
        }
        let next: Vec<usize> = quiver
            .out_arrows(v)
            .filter(|&a| poset.leq(quiver.arrow(a).target, y))
            .collect();
        for a in next.into_iter().rev() {
            let mut p = arrows.clone();
            p.push(a);
            stack.push((quiver.arrow(a).target, p));
        }
    }
    out
}

/// The map `e_{x,y} ↦ Σ p` over the Hasse-quiver paths from `x` to `y`.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub quiver: Quiver,
    pub images: Vec<Element<Path>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub morphism: bool,
    pub counit: bool,
    /// First segment where a compatibility check failed.
    pub failure: Option<String>,
    pub rank: usize,
    pub injective: bool,
    /// Whether every image is a single path, so the image is spanned by paths.
    pub is_path_subcoalgebra: bool,
    /// Segments whose image is a sum of at least two paths.
    pub multi_path_segments: usize,
}

pub fn embed(c: &IncidenceSubcoalgebra) -> Embedding {
    let poset = c.poset();
    let quiver = hasse_quiver(poset);
    let images = c
        .segments()
        .iter()
        .map(|e| {
            hasse_paths(&quiver, poset, e.lo, e.hi)
                .into_iter()
                .map(|p| (p, Scalar::one()))
                .collect()
        })
        .collect();
    Embedding { quiver, images }
}

impl Embedding {
    fn comul_path_element(&self, x: &Element<Path>) -> Tensor<Path> {
        x.map_linear(|p| {
            self.quiver
                .path_splits(p)
                .into_iter()
                .map(|t| (t, Scalar::one()))
                .collect()
        })
    }

    pub fn verify(&self, c: &IncidenceSubcoalgebra) -> EmbeddingReport {
        let mut morphism = true;
        let mut counit = true;
        let mut failure = None;
        for k in 0..c.dim() {
            let lhs = self.comul_path_element(&self.images[k]);
            let mut rhs: Tensor<Path> = Element::zero();
            for &(i, j) in c.splits(k) {
                for (p, a) in self.images[i].iter() {
                    for (q, b) in self.images[j].iter() {
                        rhs.add_term((p.clone(), q.clone()), a * b);
                    }
                }
            }
            let eps: Scalar = self.images[k]
                .iter()
                .filter(|(p, _)| p.is_vertex())
                .map(|(_, a)| a.clone())
                .sum();
            let eps_ok = eps
                == if c.counit_at(k) {
                    Scalar::one()
                } else {
                    Scalar::zero()
                };
            if lhs != rhs || !eps_ok {
                morphism &= lhs == rhs;
                counit &= eps_ok;
                failure.get_or_insert_with(|| c.label_name(k));
            }
        }

        let mut columns: HashMap<Path, usize> = HashMap::new();
        let rows: Vec<SparseRow> = self
            .images
            .iter()
            .map(|img| {
                img.iter()
                    .map(|(p, a)| {
                        let n = columns.len();
                        let col = *columns.entry(p.clone()).or_insert(n);
                        let v = a.as_rational().expect("path coefficients are rational");
                        (col, v.to_integer())
                    })
                    .collect()
            })
            .collect();
        let mut ech = SparseEchelon::new(columns.len());
        for row in rows {
            ech.insert(row);
        }
        let rank = ech.rank();
        let multi = self.images.iter().filter(|i| i.len() >= 2).count();
        EmbeddingReport {
            morphism,
            counit,
            failure,
            rank,
            injective: rank == self.images.len(),
            is_path_subcoalgebra: multi == 0,
            multi_path_segments: multi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorIsoReport {
    pub product_size: usize,
    pub segments_checked: usize,
    pub comul: bool,
    pub counit: bool,
    pub bijective: bool,
    pub failure: Option<String>,
}

impl TensorIsoReport {
    pub fn passed(&self) -> bool {
        self.comul && self.counit && self.bijective
    }
}

/// A basis element `e_{x,x'} ⊗ e_{y,y'}` of `KX ⊗ KY`.
type PairLabel = (Segment, Segment);

/// Checks that `ψ(e_{(x,y),(x',y')}) = e_{x,x'} ⊗ e_{y,y'}` is a coalgebra
/// isomorphism `K(X×Y) → KX ⊗ KY` for the componentwise order.
pub fn tensor_iso_check(x: &Poset, y: &Poset) -> crate::Result<TensorIsoReport> {
    let prod = Poset::product(x, y)?;
    let ny = y.len();
    let kp = IncidenceSubcoalgebra::full(prod.clone());
    let kx = IncidenceSubcoalgebra::full(x.clone());
    let ky = IncidenceSubcoalgebra::full(y.clone());
    let psi = |e: Segment| -> PairLabel {
        (
            Segment::new(e.lo / ny, e.hi / ny),
            Segment::new(e.lo % ny, e.hi % ny),
        )
    };
    let mut comul = true;
    let mut counit = true;
    let mut failure = None;
    let mut images = std::collections::BTreeSet::new();
    for k in 0..kp.dim() {
        let e = kp.segments()[k];
        let (ex, ey) = psi(e);
        images.insert((ex, ey));
        // (ψ⊗ψ)Δ(e)
        let mut lhs: Element<(PairLabel, PairLabel)> = Element::zero();
        for &(i, j) in kp.splits(k) {
            lhs.add_term(
                (psi(kp.segments()[i]), psi(kp.segments()[j])),
                Scalar::one(),
            );
        }
        // Δ_{KX⊗KY}(ψ(e)) = Σ (ex₁⊗ey₁) ⊗ (ex₂⊗ey₂)
        let mut rhs: Element<(PairLabel, PairLabel)> = Element::zero();
        let (ix, iy) = (kx.index_of(&ex), ky.index_of(&ey));
        match (ix, iy) {
            (Some(ix), Some(iy)) => {
                for &(a, b) in kx.splits(ix) {
                    for &(c, d) in ky.splits(iy) {
                        rhs.add_term(
                            (
                                (kx.segments()[a], ky.segments()[c]),
                                (kx.segments()[b], ky.segments()[d]),
                            ),
                            Scalar::one(),
                        );
                    }
                }
            }
            _ => {
                comul = false;
                failure.get_or_insert_with(|| segment_name(&prod, e));
                continue;
            }
        }
        let eps_ok = kp.counit_at(k) == (ex.is_trivial() && ey.is_trivial());
        if lhs != rhs || !eps_ok {
            comul &= lhs == rhs;
            counit &= eps_ok;
            failure.get_or_insert_with(|| segment_name(&prod, e));
        }
    }
    let bijective = images.len() == kp.dim() && kp.dim() == kx.dim() * ky.dim();
    Ok(TensorIsoReport {
        product_size: prod.len(),
        segments_checked: kp.dim(),
        comul,
        counit,
        bijective,
        failure,
    })
}
