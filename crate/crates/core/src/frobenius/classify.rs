use std::collections::BTreeMap;

use super::analyze::Witness;
use crate::error::{Error, Result};
use crate::quivercoalg::{LineKind, Path, PathSubcoalgebra, Quiver, WindowedFamily};

/// Tells [`classify`] that a line component is a finite window of an
/// infinite family: `vertices[i]` is the vertex at position `window.0 + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowDeclaration {
    pub kind: LineKind,
    pub window: (i64, i64),
    pub vertices: Vec<String>,
    pub r: Vec<i64>,
}

impl WindowDeclaration {
    /// The declaration matching `f.build()` with vertex names prefixed.
    pub fn for_family(f: &WindowedFamily, prefix: &str) -> Option<Self> {
        match f {
            WindowedFamily::Line { kind, window, r } => Some(WindowDeclaration {
                kind: *kind,
                window: *window,
                vertices: (window.0..=window.1)
                    .map(|k| format!("{prefix}{k}"))
                    .collect(),
                r: r.clone(),
            }),
            WindowedFamily::Cycle { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Summand {
    Point,
    Cycle {
        n: usize,
        s: usize,
    },
    Line {
        kind: LineKind,
        window: (i64, i64),
        r: Vec<i64>,
    },
}

impl Summand {
    pub fn key(&self) -> SummandKey {
        match self {
            Summand::Point => SummandKey::Point,
            Summand::Cycle { n, s } => SummandKey::Cycle { n: *n, s: *s },
            Summand::Line {
                kind: LineKind::AInf,
                window,
                r,
            } => SummandKey::AInf {
                offsets: (window.0..).zip(r).map(|(k, &rk)| rk - k).collect(),
            },
            Summand::Line {
                kind: LineKind::A0Inf,
                r,
                ..
            } => SummandKey::A0Inf { r: r.clone() },
        }
    }

    pub fn is_line(&self) -> bool {
        matches!(self, Summand::Line { .. })
    }
}

/// Isomorphism data of one summand. A line over ℤ is recorded by its
/// offsets `r(n) − n`, which do not change under a shift of the window.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SummandKey {
    Point,
    Cycle { n: usize, s: usize },
    AInf { offsets: Vec<i64> },
    A0Inf { r: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub summands: Vec<Summand>,
    /// Vertex name to summand index.
    pub vertex_summand: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyOutcome {
    Classified(Classification),
    NotCoFrobenius(Witness),
}

impl ClassifyOutcome {
    pub fn classification(&self) -> Option<&Classification> {
        match self {
            ClassifyOutcome::Classified(c) => Some(c),
            ClassifyOutcome::NotCoFrobenius(_) => None,
        }
    }
}

struct Components {
    /// Each component's vertices, in the order first reached from its
    /// smallest vertex.
    members: Vec<Vec<usize>>,
}

fn components(c: &PathSubcoalgebra, arrows: &[usize]) -> Components {
    let q = c.quiver();
    let points = c.grouplikes();
    let mut adj: BTreeMap<usize, Vec<usize>> = points.iter().map(|&v| (v, Vec::new())).collect();
    for &a in arrows {
        let ar = q.arrow(a);
        adj.get_mut(&ar.source).unwrap().push(ar.target);
        adj.get_mut(&ar.target).unwrap().push(ar.source);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut members = Vec::new();
    for &v in &points {
        if !seen.insert(v) {
            continue;
        }
        let mut comp = vec![v];
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[&comp[i]] {
                if seen.insert(w) {
                    comp.push(w);
                }
            }
            i += 1;
        }
        members.push(comp);
    }
    Components { members }
}

/// Length of the unique maximal basis path starting at `v`, if the set of
/// such paths is a chain of prefixes.
fn max_out_length(c: &PathSubcoalgebra, v: usize) -> Option<usize> {
    let q = c.quiver();
    let out: Vec<&Path> = c.paths().iter().filter(|p| q.source(p) == v).collect();
    let longest = out.iter().max_by_key(|p| p.len())?;
    out.iter()
        .all(|p| longest.arrows().starts_with(p.arrows()))
        .then_some(longest.len())
}

fn witness(q: &Quiver, v: usize, reason: &str) -> Witness {
    Witness {
        at: q.vertex_name(v).to_string(),
        reason: reason.to_string(),
    }
}

/// Decomposes a co-Frobenius path subcoalgebra into canonical summands, one
/// per connected component of the subquiver of vertices and arrows in `B`.
/// Line components must be declared as windows of infinite families, since
/// no finite line component is co-Frobenius on its own.
pub fn classify(c: &PathSubcoalgebra, decls: &[WindowDeclaration]) -> Result<ClassifyOutcome> {
    let q = c.quiver();
    let arrows = c.arrows_in_basis();
    let mut out_deg = vec![0usize; q.vertex_count()];
    let mut in_deg = vec![0usize; q.vertex_count()];
    let mut next = vec![None; q.vertex_count()];
    for &a in &arrows {
        let ar = q.arrow(a);
        out_deg[ar.source] += 1;
        in_deg[ar.target] += 1;
        next[ar.source] = Some(ar.target);
    }
    let mut decl_of: BTreeMap<usize, usize> = BTreeMap::new();
    for (di, d) in decls.iter().enumerate() {
        for name in &d.vertices {
            let v = q
                .vertex_index(name)
                .filter(|&v| c.contains(&Path::Vertex(v)))
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("declared vertex {name} not in B"))
                })?;
            if decl_of.insert(v, di).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "vertex {name} declared twice"
                )));
            }
        }
    }

    let mut summands = Vec::new();
    let mut vertex_summand = BTreeMap::new();
    for comp in components(c, &arrows).members {
        let idx = summands.len();
        for &v in &comp {
            vertex_summand.insert(q.vertex_name(v).to_string(), idx);
        }
        if let Some(&di) = comp.iter().find_map(|v| decl_of.get(v)) {
            summands.push(declared_line(c, &comp, &decls[di], &next)?);
            continue;
        }
        // Degree bounds: at most one arrow in and one out.
        if let Some(&v) = comp.iter().find(|&&v| out_deg[v] > 1) {
            return Ok(ClassifyOutcome::NotCoFrobenius(witness(
                q,
                v,
                "more than one arrow of B starts here",
            )));
        }
        if let Some(&v) = comp.iter().find(|&&v| in_deg[v] > 1) {
            return Ok(ClassifyOutcome::NotCoFrobenius(witness(
                q,
                v,
                "more than one arrow of B ends here",
            )));
        }
        if comp.len() == 1 && out_deg[comp[0]] == 0 {
            summands.push(Summand::Point);
            continue;
        }
        if let Some(&v) = comp.iter().find(|&&v| out_deg[v] == 0) {
            return Ok(ClassifyOutcome::NotCoFrobenius(witness(
                q,
                v,
                "finite line: an arrow of B ends here but none starts here",
            )));
        }
        // A cycle: walk it from the smallest vertex.
        let start = *comp.iter().min().unwrap();
        let mut order = vec![start];
        let mut v = next[start].unwrap();
        while v != start {
            order.push(v);
            v = next[v].unwrap();
        }
        let n = order.len();
        let mut lengths = Vec::with_capacity(n);
        for &v in &order {
            match max_out_length(c, v) {
                Some(m) => lengths.push(m),
                None => {
                    return Ok(ClassifyOutcome::NotCoFrobenius(witness(
                        q,
                        v,
                        "no unique maximal path starts here",
                    )))
                }
            }
        }
        if let Some(k) = (0..n).find(|&k| lengths[k] > lengths[(k + 1) % n]) {
            return Ok(ClassifyOutcome::NotCoFrobenius(witness(
                q,
                order[k],
                "maximal path from here is longer than from the next vertex",
            )));
        }
        summands.push(Summand::Cycle { n, s: lengths[0] });
    }
    Ok(ClassifyOutcome::Classified(Classification {
        summands,
        vertex_summand,
    }))
}

fn declared_line(
    c: &PathSubcoalgebra,
    comp: &[usize],
    d: &WindowDeclaration,
    next: &[Option<usize>],
) -> Result<Summand> {
    let q = c.quiver();
    let family = WindowedFamily::Line {
        kind: d.kind,
        window: d.window,
        r: d.r.clone(),
    };
    family.validate()?;
    let mismatch = |msg: String| Error::InvalidArgument(format!("window declaration: {msg}"));
    let verts: Vec<usize> = d
        .vertices
        .iter()
        .map(|n| q.vertex_index(n).unwrap())
        .collect();
    if verts.len() != d.r.len() {
        return Err(mismatch("vertex count differs from window length".into()));
    }
    let mut sorted_comp = comp.to_vec();
    let mut sorted_decl = verts.clone();
    sorted_comp.sort_unstable();
    sorted_decl.sort_unstable();
    if sorted_comp != sorted_decl {
        return Err(mismatch("declared vertices are not one component".into()));
    }
    let b = d.window.1;
    for (i, &v) in verts.iter().enumerate() {
        let k = d.window.0 + i as i64;
        let expect_next = verts.get(i + 1).copied();
        let arrows_out = q
            .out_arrows(v)
            .filter(|&a| c.contains(&Path::Arrows(vec![a])))
            .count();
        if next[v] != expect_next || arrows_out != usize::from(expect_next.is_some()) {
            return Err(mismatch(format!(
                "{} is not followed by the next window vertex",
                d.vertices[i]
            )));
        }
        let expected = (d.r[i].min(b) - k) as usize;
        if max_out_length(c, v) != Some(expected) {
            return Err(mismatch(format!(
                "paths from {} do not match r",
                d.vertices[i]
            )));
        }
    }
    Ok(Summand::Line {
        kind: d.kind,
        window: d.window,
        r: d.r.clone(),
    })
}

/// Materializes the direct sum of the families (summand `i` prefixed `s{i}_`)
/// and classifies it.
pub fn classify_families(fams: &[WindowedFamily]) -> Result<ClassifyOutcome> {
    let built: Vec<PathSubcoalgebra> = fams.iter().map(|f| f.build()).collect::<Result<_>>()?;
    let sum = PathSubcoalgebra::direct_sum(&built.iter().collect::<Vec<_>>())?;
    let decls: Vec<WindowDeclaration> = fams
        .iter()
        .enumerate()
        .filter_map(|(i, f)| WindowDeclaration::for_family(f, &format!("s{i}_")))
        .collect();
    classify(&sum, &decls)
}

/// Sorted multiset of summand keys.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub Vec<SummandKey>);

pub fn iso_invariants(c: &Classification) -> CanonicalKey {
    let mut keys: Vec<SummandKey> = c.summands.iter().map(Summand::key).collect();
    keys.sort();
    CanonicalKey(keys)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// Set when line summands are compared on finite windows only.
    pub window_limited: bool,
}

pub fn iso_check(a: &Classification, b: &Classification) -> IsoResult {
    IsoResult {
        isomorphic: iso_invariants(a) == iso_invariants(b),
        window_limited: a.summands.iter().chain(&b.summands).any(Summand::is_line),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopfFamily {
    /// Copies of one `K[A∞|s]`.
    I,
    /// Copies of one `K[Cₙ,s]` with `s+1 | n`.
    II,
    /// Copies of `K`.
    III,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAdmissibility {
    pub family: HopfFamily,
    pub s: Option<usize>,
    pub n: Option<usize>,
    pub summand_count: usize,
    pub note: Option<String>,
}

pub fn admits_hopf(c: &Classification) -> HopfAdmissibility {
    let count = c.summands.len();
    let mut res = HopfAdmissibility {
        family: HopfFamily::None,
        s: None,
        n: None,
        summand_count: count,
        note: None,
    };
    let Some(first) = c.summands.first() else {
        return res;
    };
    match first {
        Summand::Point if c.summands.iter().all(|x| *x == Summand::Point) => {
            res.family = HopfFamily::III;
        }
        Summand::Cycle { n, s } => {
            let same = c
                .summands
                .iter()
                .all(|x| matches!(x, Summand::Cycle { n: m, s: t } if m == n && t == s));
            if same && n % (s + 1) == 0 {
                res.family = HopfFamily::II;
                res.n = Some(*n);
                res.s = Some(*s);
            }
        }
        Summand::Line { .. } => {
            let offset = |x: &Summand| match x.key() {
                SummandKey::AInf { offsets } if offsets.windows(2).all(|w| w[0] == w[1]) => {
                    offsets.first().copied()
                }
                _ => None,
            };
            if let Some(s) = offset(first) {
                if c.summands.iter().all(|x| offset(x) == Some(s)) {
                    res.family = HopfFamily::I;
                    res.s = Some(s as usize);
                    res.note = Some(
                        "the Hopf structure lives over an infinite group and is not \
                         materialized; the coalgebra-side product is available through \
                         product_ainf on finitely supported elements"
                            .into(),
                    );
                }
            }
        }
        Summand::Point => {}
    }
    res
}

/// Whether the (finite dimensional) path coalgebra `KΓ` admits a Hopf
/// algebra structure: exactly when `Γ` has no arrows.
pub fn finite_path_coalgebra_hopf(q: &Quiver) -> Result<bool> {
    if q.has_cycle() {
        return Err(Error::Precondition(
            "quiver has an oriented cycle, so its path coalgebra is infinite dimensional".into(),
        ));
    }
    Ok(q.arrow_count() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(fams: &[WindowedFamily]) -> Classification {
        classify_families(fams)
            .unwrap()
            .classification()
            .unwrap()
            .clone()
    }

    fn point() -> PathSubcoalgebra {
        PathSubcoalgebra::full(Quiver::new(["p"], []).unwrap()).unwrap()
    }

    #[test]
    fn two_cycles_and_a_point() {
        let c3 = WindowedFamily::cycle(3, 2).unwrap().build().unwrap();
        let sum = PathSubcoalgebra::direct_sum(&[&c3, &c3, &point()]).unwrap();
        let out = classify(&sum, &[]).unwrap();
        let key = iso_invariants(out.classification().unwrap());
        assert_eq!(
            key.0,
            vec![
                SummandKey::Point,
                SummandKey::Cycle { n: 3, s: 2 },
                SummandKey::Cycle { n: 3, s: 2 }
            ]
        );
    }

    #[test]
    fn unequal_lengths_on_a_cycle() {
        let q = WindowedFamily::cycle(3, 1)
            .unwrap()
            .build()
            .unwrap()
            .quiver()
            .clone();
        let mut basis = q.paths_up_to(1);
        basis.push(Path::Arrows(vec![0, 1]));
        let c = PathSubcoalgebra::new(q, basis).unwrap();
        let ClassifyOutcome::NotCoFrobenius(w) = classify(&c, &[]).unwrap() else {
            panic!("expected a witness");
        };
        assert_eq!(w.at, "0");
    }

    #[test]
    fn finite_acyclic_is_rejected() {
        let q = Quiver::new(
            ["u", "v", "w"],
            [
                ("a".into(), "u".into(), "v".into()),
                ("b".into(), "u".into(), "w".into()),
            ],
        )
        .unwrap();
        let c = PathSubcoalgebra::full(q.clone()).unwrap();
        assert!(matches!(
            classify(&c, &[]).unwrap(),
            ClassifyOutcome::NotCoFrobenius(_)
        ));
        let c = PathSubcoalgebra::with_max_length(q.opposite(), 1).unwrap();
        assert!(matches!(
            classify(&c, &[]).unwrap(),
            ClassifyOutcome::NotCoFrobenius(_)
        ));
    }

    #[test]
    fn declared_windows_round_trip() {
        let fams = vec![
            WindowedFamily::a_inf((-2, 4), vec![0, 2, 3, 4, 6, 7, 8]).unwrap(),
            WindowedFamily::a0_inf(5, vec![1, 3, 4, 6, 7, 8]).unwrap(),
            WindowedFamily::cycle(4, 1).unwrap(),
        ];
        let c = cls(&fams);
        assert_eq!(c.summands.len(), 3);
        assert_eq!(c.vertex_summand["s1_0"], 1);
    }

    #[test]
    fn shifted_windows_are_isomorphic() {
        let r: Vec<i64> = vec![2, 4, 5, 6, 8, 9];
        let a = cls(&[WindowedFamily::a_inf((0, 5), r.clone()).unwrap()]);
        // r'(n) = r(n + 3) − 3 on the window [−3, 2]
        let shifted: Vec<i64> = r.iter().map(|x| x - 3).collect();
        let b = cls(&[WindowedFamily::a_inf((-3, 2), shifted).unwrap()]);
        let res = iso_check(&a, &b);
        assert!(res.isomorphic && res.window_limited);
    }

    #[test]
    fn cycle_isomorphism() {
        let a = cls(&[WindowedFamily::cycle(2, 1).unwrap()]);
        let b = cls(&[WindowedFamily::cycle(4, 1).unwrap()]);
        assert!(iso_check(&a, &a).isomorphic);
        let res = iso_check(&a, &b);
        assert!(!res.isomorphic && !res.window_limited);
    }

    #[test]
    fn hopf_trichotomy() {
        let pts = Classification {
            summands: vec![Summand::Point; 7],
            vertex_summand: BTreeMap::new(),
        };
        assert_eq!(admits_hopf(&pts).family, HopfFamily::III);
        let c = cls(&[
            WindowedFamily::cycle(4, 1).unwrap(),
            WindowedFamily::cycle(4, 1).unwrap(),
        ]);
        let h = admits_hopf(&c);
        assert_eq!(
            (h.family, h.n, h.s, h.summand_count),
            (HopfFamily::II, Some(4), Some(1), 2)
        );
        let c = cls(&[WindowedFamily::cycle(3, 1).unwrap()]);
        assert_eq!(admits_hopf(&c).family, HopfFamily::None);
        let c = cls(&[
            WindowedFamily::a_inf_constant((0, 6), 2).unwrap(),
            WindowedFamily::a_inf_constant((-4, 3), 2).unwrap(),
        ]);
        assert_eq!(admits_hopf(&c).family, HopfFamily::I);
    }

    #[test]
    fn finite_path_coalgebras() {
        assert!(finite_path_coalgebra_hopf(&Quiver::new(["a", "b", "c"], []).unwrap()).unwrap());
        let q = Quiver::new(["u", "v"], [("a".into(), "u".into(), "v".into())]).unwrap();
        assert!(!finite_path_coalgebra_hopf(&q).unwrap());
        let c = WindowedFamily::cycle(2, 1).unwrap().build().unwrap();
        assert!(finite_path_coalgebra_hopf(c.quiver()).is_err());
    }
}
