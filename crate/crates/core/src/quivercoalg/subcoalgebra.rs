use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::quiver::{Path, Quiver};
use crate::coalgebra::{BasisCoalgebra, Side};
use crate::element::Tensor;
use crate::error::{Error, Result};
use crate::exactfield::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Arrow indices out of range or not composable.
    NotAPath {
        position: usize,
    },
    Duplicate {
        path: String,
    },
    MissingSubpath {
        of: String,
        missing: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotAPath { position } => {
                write!(f, "basis entry #{position} is not a path of the quiver")
            }
            Violation::Duplicate { path } => write!(f, "{path} listed twice"),
            Violation::MissingSubpath { of, missing } => {
                write!(f, "{missing} (subpath of {of}) missing")
            }
        }
    }
}

/// Lists every closure violation of a candidate basis. Missing subpaths are
/// reported once each, attributed to the first basis path requiring them.
pub fn validate(quiver: &Quiver, basis: &[Path]) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut present = BTreeSet::new();
    for (i, p) in basis.iter().enumerate() {
        if !quiver.check_path(p) {
            out.push(Violation::NotAPath { position: i });
        } else if !present.insert(p.clone()) {
            out.push(Violation::Duplicate {
                path: quiver.path_name(p),
            });
        }
    }
    let mut reported = BTreeSet::new();
    for p in basis.iter().filter(|p| quiver.check_path(p)) {
        for s in quiver.subpaths(p) {
            if !present.contains(&s) && reported.insert(s.clone()) {
                out.push(Violation::MissingSubpath {
                    of: quiver.path_name(p),
                    missing: quiver.path_name(&s),
                });
            }
        }
    }
    out
}

/// A subcoalgebra of the path coalgebra `KΓ` spanned by a subpath-closed set
/// of paths. The basis keeps the order it was given in.
#[derive(Debug, Clone)]
pub struct PathSubcoalgebra {
    quiver: Quiver,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    splits: Vec<Vec<(usize, usize)>>,
}

impl PathSubcoalgebra {
    pub fn new(quiver: Quiver, basis: Vec<Path>) -> Result<Self> {
        let violations = validate(&quiver, &basis);
        if !violations.is_empty() {
            return Err(Error::InvalidBasis(
                violations.iter().map(ToString::to_string).collect(),
            ));
        }
        let index: HashMap<Path, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let splits = basis
            .iter()
            .map(|p| {
                quiver
                    .path_splits(p)
                    .into_iter()
                    .map(|(a, b)| (index[&a], index[&b]))
                    .collect()
            })
            .collect();
        Ok(PathSubcoalgebra {
            quiver,
            basis,
            index,
            splits,
        })
    }

    /// The full path coalgebra of a finite acyclic quiver.
    pub fn full(quiver: Quiver) -> Result<Self> {
        if quiver.has_cycle() {
            return Err(Error::Precondition(
                "the path coalgebra of a quiver with a cycle is infinite dimensional".into(),
            ));
        }
        let n = quiver.vertex_count();
        let basis = quiver.paths_up_to(n);
        Self::new(quiver, basis)
    }

    /// All paths of length at most `max_len`.
    pub fn with_max_length(quiver: Quiver, max_len: usize) -> Result<Self> {
        let basis = quiver.paths_up_to(max_len);
        Self::new(quiver, basis)
    }

    /// Disjoint union of the summands, ids of summand `i` prefixed `s{i}_`.
    pub fn direct_sum(parts: &[&PathSubcoalgebra]) -> Result<Self> {
        let prefixes: Vec<String> = (0..parts.len()).map(|i| format!("s{i}_")).collect();
        let (quiver, offsets) = Quiver::disjoint_union(
            &parts
                .iter()
                .zip(&prefixes)
                .map(|(c, p)| (p.as_str(), &c.quiver))
                .collect::<Vec<_>>(),
        )?;
        let basis = parts
            .iter()
            .zip(&offsets)
            .flat_map(|(c, &(vo, ao))| c.basis.iter().map(move |p| Quiver::shift_path(p, vo, ao)))
            .collect();
        Self::new(quiver, basis)
    }

    /// The coopposite coalgebra realized on the opposite quiver.
    pub fn opposite(&self) -> Self {
        let quiver = self.quiver.opposite();
        let basis = self
            .basis
            .iter()
            .map(|p| self.quiver.reverse_path(p))
            .collect();
        Self::new(quiver, basis).expect("reversal preserves subpath closure")
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn paths(&self) -> &[Path] {
        &self.basis
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.index.contains_key(p)
    }

    fn require(&self, p: &Path) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::NotInBasis(self.describe(p)))
    }

    fn describe(&self, p: &Path) -> String {
        if self.quiver.check_path(p) {
            self.quiver.path_name(p)
        } else {
            format!("{p:?}")
        }
    }

    pub fn comul(&self, p: &Path) -> Result<Tensor<Path>> {
        let k = self.require(p)?;
        Ok(self.comul_labels(k))
    }

    pub fn counit(&self, p: &Path) -> Result<Scalar> {
        self.require(p)?;
        Ok(if p.is_vertex() {
            Scalar::one()
        } else {
            Scalar::zero()
        })
    }

    /// Position of `p` in the coradical filtration, which is its length.
    pub fn coradical_degree(&self, p: &Path) -> Result<usize> {
        self.require(p)?;
        Ok(p.len())
    }

    /// Vertices lying in the basis, in quiver order.
    pub fn grouplikes(&self) -> Vec<usize> {
        (0..self.quiver.vertex_count())
            .filter(|&v| self.index.contains_key(&Path::Vertex(v)))
            .collect()
    }

    /// Number of arrows `v → w` in the basis: the dimension of the
    /// nontrivial skew-primitives between the two grouplikes.
    pub fn skew_primitive_count(&self, v: usize, w: usize) -> usize {
        self.quiver
            .out_arrows(v)
            .filter(|&a| self.quiver.arrow(a).target == w)
            .filter(|&a| self.index.contains_key(&Path::Arrows(vec![a])))
            .count()
    }

    /// Basis of the injective envelope of the simple comodule at `v`:
    /// paths ending at `v` for the left side, starting at `v` for the right.
    pub fn injective_envelope(&self, v: usize, side: Side) -> Result<Vec<Path>> {
        self.require(&Path::Vertex(v))?;
        Ok(self
            .basis
            .iter()
            .filter(|p| match side {
                Side::Left => self.quiver.target(p) == v,
                Side::Right => self.quiver.source(p) == v,
            })
            .cloned()
            .collect())
    }

    /// Basis paths that are arrows, as arrow indices.
    pub fn arrows_in_basis(&self) -> Vec<usize> {
        (0..self.quiver.arrow_count())
            .filter(|&a| self.index.contains_key(&Path::Arrows(vec![a])))
            .collect()
    }
}

impl BasisCoalgebra for PathSubcoalgebra {
    type Label = Path;

    fn basis(&self) -> &[Path] {
        &self.basis
    }

    fn index_of(&self, label: &Path) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn splits(&self, k: usize) -> &[(usize, usize)] {
        &self.splits[k]
    }

    fn counit_at(&self, k: usize) -> bool {
        self.basis[k].is_vertex()
    }

    fn label_name(&self, k: usize) -> String {
        self.quiver.path_name(&self.basis[k])
    }
}
