use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::poset::Poset;
use crate::coalgebra::{BasisCoalgebra, Side};
use crate::element::Tensor;
use crate::error::{Error, Result};
use crate::exactfield::Scalar;

/// The basis element `e_{lo,hi}` of an incidence coalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub lo: usize,
    pub hi: usize,
}

impl Segment {
    pub fn new(lo: usize, hi: usize) -> Self {
        Segment { lo, hi }
    }

    pub fn is_trivial(&self) -> bool {
        self.lo == self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { position: usize },
    NotOrdered { segment: String },
    Duplicate { segment: String },
    MissingSubinterval { of: String, missing: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { position } => {
                write!(f, "basis entry #{position} names an unknown element")
            }
            Violation::NotOrdered { segment } => write!(f, "{segment} has lo ≰ hi"),
            Violation::Duplicate { segment } => write!(f, "{segment} listed twice"),
            Violation::MissingSubinterval { of, missing } => {
                write!(f, "{missing} (inside {of}) missing")
            }
        }
    }
}

pub fn segment_name(poset: &Poset, e: Segment) -> String {
    format!("[{},{}]", poset.name(e.lo), poset.name(e.hi))
}

/// Every closure violation of a candidate segment basis: each missing
/// `e_{a,b}` with `x ≤ a ≤ b ≤ y` for some listed `e_{x,y}`, reported once.
pub fn validate(poset: &Poset, basis: &[Segment]) -> Vec<Violation> {
    let n = poset.len();
    let mut out = Vec::new();
    let mut present = BTreeSet::new();
    let mut good = Vec::new();
    for (i, &e) in basis.iter().enumerate() {
        if e.lo >= n || e.hi >= n {
            out.push(Violation::OutOfRange { position: i });
        } else if !poset.leq(e.lo, e.hi) {
            out.push(Violation::NotOrdered {
                segment: segment_name(poset, e),
            });
        } else if !present.insert(e) {
            out.push(Violation::Duplicate {
                segment: segment_name(poset, e),
            });
        } else {
            good.push(e);
        }
    }
    let mut reported = BTreeSet::new();
    for e in good {
        let iv = poset.interval(e.lo, e.hi);
        for &a in &iv {
            for &b in &iv {
                let s = Segment::new(a, b);
                if poset.leq(a, b) && !present.contains(&s) && reported.insert(s) {
                    out.push(Violation::MissingSubinterval {
                        of: segment_name(poset, e),
                        missing: segment_name(poset, s),
                    });
                }
            }
        }
    }
    out
}

/// A subcoalgebra of the incidence coalgebra `KX` spanned by an
/// interval-closed set of segments.
#[derive(Debug, Clone)]
pub struct IncidenceSubcoalgebra {
    poset: Poset,
    basis: Vec<Segment>,
    index: HashMap<Segment, usize>,
    splits: Vec<Vec<(usize, usize)>>,
}

impl IncidenceSubcoalgebra {
    pub fn new(poset: Poset, basis: Vec<Segment>) -> Result<Self> {
        let violations = validate(&poset, &basis);
        if !violations.is_empty() {
            return Err(Error::InvalidBasis(
                violations.iter().map(ToString::to_string).collect(),
            ));
        }
        let index: HashMap<Segment, usize> =
            basis.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let splits = basis
            .iter()
            .map(|e| {
                poset
                    .interval(e.lo, e.hi)
                    .into_iter()
                    .map(|z| (index[&Segment::new(e.lo, z)], index[&Segment::new(z, e.hi)]))
                    .collect()
            })
            .collect();
        Ok(IncidenceSubcoalgebra {
            poset,
            basis,
            index,
            splits,
        })
    }

    /// The whole incidence coalgebra `KX`, segments ordered by `(lo, hi)`.
    pub fn full(poset: Poset) -> Self {
        let n = poset.len();
        let basis = (0..n)
            .flat_map(|i| (0..n).map(move |j| Segment::new(i, j)))
            .filter(|e| poset.leq(e.lo, e.hi))
            .collect();
        Self::new(poset, basis).expect("all segments form a closed basis")
    }

    /// The coopposite coalgebra, realized on the dual poset.
    pub fn opposite(&self) -> Self {
        let basis = self
            .basis
            .iter()
            .map(|e| Segment::new(e.hi, e.lo))
            .collect();
        Self::new(self.poset.dual(), basis).expect("reversal preserves interval closure")
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn segments(&self) -> &[Segment] {
        &self.basis
    }

    pub fn contains(&self, lo: usize, hi: usize) -> bool {
        self.index.contains_key(&Segment::new(lo, hi))
    }

    fn require(&self, e: Segment) -> Result<usize> {
        self.index.get(&e).copied().ok_or_else(|| {
            let n = self.poset.len();
            Error::NotInBasis(if e.lo < n && e.hi < n {
                segment_name(&self.poset, e)
            } else {
                format!("{e:?}")
            })
        })
    }

    pub fn comul(&self, e: Segment) -> Result<Tensor<Segment>> {
        let k = self.require(e)?;
        Ok(self.comul_labels(k))
    }

    pub fn counit(&self, e: Segment) -> Result<Scalar> {
        self.require(e)?;
        Ok(if e.is_trivial() {
            Scalar::one()
        } else {
            Scalar::zero()
        })
    }

    /// Elements `a` with `e_{a,a}` in the basis.
    pub fn points(&self) -> Vec<usize> {
        (0..self.poset.len())
            .filter(|&a| self.contains(a, a))
            .collect()
    }

    /// Basis of the injective envelope of `K e_{a,a}`: segments ending at
    /// `a` for the left side, starting at `a` for the right.
    pub fn injective_envelope(&self, a: usize, side: Side) -> Result<Vec<Segment>> {
        self.require(Segment::new(a, a))?;
        Ok(self
            .basis
            .iter()
            .filter(|e| match side {
                Side::Left => e.hi == a,
                Side::Right => e.lo == a,
            })
            .copied()
            .collect())
    }
}

impl BasisCoalgebra for IncidenceSubcoalgebra {
    type Label = Segment;

    fn basis(&self) -> &[Segment] {
        &self.basis
    }

    fn index_of(&self, label: &Segment) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn splits(&self, k: usize) -> &[(usize, usize)] {
        &self.splits[k]
    }

    fn counit_at(&self, k: usize) -> bool {
        self.basis[k].is_trivial()
    }

    fn label_name(&self, k: usize) -> String {
        segment_name(&self.poset, self.basis[k])
    }
}

/// A finite window of the ladder of diamonds: `a_n < b_{n,i} < a_{n+1}` with
/// the `b_{n,i}` pairwise incomparable, for blocks `0 ≤ n < blocks`. The
/// basis is spanned by the points, the covers, the segments
/// `e_{a_n,a_{n+1}}` and the segments `e_{b_{n,i},b_{n+1,i}}`.
pub struct DiamondLadder {
    pub coalgebra: IncidenceSubcoalgebra,
    /// Elements whose co-Frobenius conditions do not see the window edges.
    pub interior: Vec<usize>,
    pub s: usize,
    pub blocks: usize,
}

/// With `half` set, block 0 is the true start of the ladder (the
/// nonnegative part) and only the upper edge is truncated.
pub fn diamond_ladder(s: usize, blocks: usize, half: bool) -> Result<DiamondLadder> {
    if s == 0 || blocks < 3 {
        return Err(Error::InvalidArgument(
            "diamond ladder needs s ≥ 1 and at least 3 blocks".into(),
        ));
    }
    let a = |n: usize| format!("a{n}");
    let b = |n: usize, i: usize| format!("b{n}_{i}");
    let mut elements = Vec::new();
    for n in 0..=blocks {
        elements.push(a(n));
        if n < blocks {
            for i in 1..=s {
                elements.push(b(n, i));
            }
        }
    }
    let mut covers = Vec::new();
    for n in 0..blocks {
        for i in 1..=s {
            covers.push((a(n), b(n, i)));
            covers.push((b(n, i), a(n + 1)));
        }
    }
    let poset = Poset::from_covers(elements, covers.clone())?;
    let id = |name: &str| poset.index_of(name).expect("declared element");
    let mut basis: Vec<Segment> = (0..poset.len()).map(|x| Segment::new(x, x)).collect();
    basis.extend(covers.iter().map(|(x, y)| Segment::new(id(x), id(y))));
    for n in 0..blocks {
        basis.push(Segment::new(id(&a(n)), id(&a(n + 1))));
        if n + 1 < blocks {
            for i in 1..=s {
                basis.push(Segment::new(id(&b(n, i)), id(&b(n + 1, i))));
            }
        }
    }
    let lo = if half { 0 } else { 1 };
    let mut interior = Vec::new();
    for n in lo..=blocks - 2 {
        interior.push(id(&a(n)));
        for i in 1..=s {
            interior.push(id(&b(n, i)));
        }
    }
    interior.sort_unstable();
    let coalgebra = IncidenceSubcoalgebra::new(poset, basis)?;
    Ok(DiamondLadder {
        coalgebra,
        interior,
        s,
        blocks,
    })
}
