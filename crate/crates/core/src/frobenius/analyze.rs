use std::fmt;

use crate::error::Result;
use crate::incidencecoalg::IncidenceSubcoalgebra;
use crate::quivercoalg::{LineKind, Path, PathSubcoalgebra, WindowedFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    /// Holds at every vertex the window determines; the global claim is
    /// conditional on the declared family data outside the window.
    YesOnWindow,
    WindowInconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::YesOnWindow => "yes-on-window",
            Verdict::WindowInconclusive => "window-inconclusive",
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, Verdict::Yes | Verdict::YesOnWindow)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A vertex (or poset element) and the reason a condition fails there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub at: String,
    pub reason: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.at, self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexReport {
    pub name: String,
    /// `r(v)` when `v ∈ R(C)`.
    pub r: Option<String>,
    /// `l(v)` when `v ∈ L(C)`.
    pub l: Option<String>,
    pub left_ok: bool,
    pub right_ok: bool,
    /// Whether the verdicts at this vertex are determined by the input.
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub vertices: Vec<VertexReport>,
    pub left: Verdict,
    pub right: Verdict,
    pub left_witness: Option<Witness>,
    pub right_witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl FrobeniusReport {
    pub fn r_census(&self) -> usize {
        self.vertices.iter().filter(|v| v.r.is_some()).count()
    }

    pub fn l_census(&self) -> usize {
        self.vertices.iter().filter(|v| v.l.is_some()).count()
    }
}

/// `R`/`L` data on the points of a coalgebra, by point position.
pub(crate) struct Local {
    pub names: Vec<String>,
    pub r: Vec<Option<usize>>,
    pub l: Vec<Option<usize>>,
}

impl Local {
    /// Why condition (c) fails at `v` (left side), if it does.
    fn left_failure(&self, v: usize) -> Option<String> {
        let Some(w) = self.r[v] else {
            return Some("no unique maximal path starts here (not in R(C))".into());
        };
        match self.l[w] {
            None => Some(format!("r = {} is not in L(C)", self.names[w])),
            Some(x) if x != v => Some(format!(
                "l(r) = l({}) = {} differs from the vertex",
                self.names[w], self.names[x]
            )),
            _ => None,
        }
    }

    /// The same test on the coopposite coalgebra: `L` and `R` trade places.
    fn right_failure(&self, v: usize) -> Option<String> {
        let Some(w) = self.l[v] else {
            return Some("no unique maximal path ends here (not in L(C))".into());
        };
        match self.r[w] {
            None => Some(format!("l = {} is not in R(C)", self.names[w])),
            Some(x) if x != v => Some(format!(
                "r(l) = r({}) = {} differs from the vertex",
                self.names[w], self.names[x]
            )),
            _ => None,
        }
    }

    fn report(&self, exact: &[bool]) -> (Vec<VertexReport>, Option<Witness>, Option<Witness>) {
        let mut rows = Vec::new();
        let mut lw = None;
        let mut rw = None;
        for v in 0..self.names.len() {
            let lf = self.left_failure(v);
            let rf = self.right_failure(v);
            if exact[v] {
                if let (None, Some(reason)) = (&lw, &lf) {
                    lw = Some(Witness {
                        at: self.names[v].clone(),
                        reason: reason.clone(),
                    });
                }
                if let (None, Some(reason)) = (&rw, &rf) {
                    rw = Some(Witness {
                        at: self.names[v].clone(),
                        reason: reason.clone(),
                    });
                }
            }
            rows.push(VertexReport {
                name: self.names[v].clone(),
                r: self.r[v].map(|w| self.names[w].clone()),
                l: self.l[v].map(|w| self.names[w].clone()),
                left_ok: lf.is_none(),
                right_ok: rf.is_none(),
                exact: exact[v],
            });
        }
        (rows, lw, rw)
    }
}

fn is_prefix(p: &Path, d: &Path) -> bool {
    d.arrows().starts_with(p.arrows())
}

fn is_suffix(p: &Path, d: &Path) -> bool {
    d.arrows().ends_with(p.arrows())
}

/// The unique maximal element of a set of paths under the given "is a
/// subpath at this end" order, if one exists.
fn unique_max<'a>(paths: &[&'a Path], below: impl Fn(&Path, &Path) -> bool) -> Option<&'a Path> {
    let longest = paths.iter().max_by_key(|p| p.len())?;
    paths.iter().all(|p| below(p, longest)).then_some(*longest)
}

pub(crate) fn path_local(c: &PathSubcoalgebra) -> Local {
    let q = c.quiver();
    let points = c.grouplikes();
    let pos: std::collections::HashMap<usize, usize> =
        points.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut r = Vec::new();
    let mut l = Vec::new();
    for &v in &points {
        let out: Vec<&Path> = c.paths().iter().filter(|p| q.source(p) == v).collect();
        let inc: Vec<&Path> = c.paths().iter().filter(|p| q.target(p) == v).collect();
        r.push(unique_max(&out, is_prefix).map(|d| pos[&q.target(d)]));
        l.push(unique_max(&inc, is_suffix).map(|d| pos[&q.source(d)]));
    }
    Local {
        names: points
            .iter()
            .map(|&v| q.vertex_name(v).to_string())
            .collect(),
        r,
        l,
    }
}

pub(crate) fn incidence_local(c: &IncidenceSubcoalgebra) -> Local {
    let poset = c.poset();
    let points = c.points();
    let pos: std::collections::HashMap<usize, usize> =
        points.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = poset.len();
    let mut r = Vec::new();
    let mut l = Vec::new();
    for &a in &points {
        let up: Vec<usize> = (0..n).filter(|&x| c.contains(a, x)).collect();
        let down: Vec<usize> = (0..n).filter(|&x| c.contains(x, a)).collect();
        let top = up
            .iter()
            .copied()
            .find(|&g| up.iter().all(|&x| poset.leq(x, g)));
        let bottom = down
            .iter()
            .copied()
            .find(|&g| down.iter().all(|&x| poset.leq(g, x)));
        r.push(top.map(|g| pos[&g]));
        l.push(bottom.map(|g| pos[&g]));
    }
    Local {
        names: points.iter().map(|&v| poset.name(v).to_string()).collect(),
        r,
        l,
    }
}

fn exact_verdicts(local: &Local) -> FrobeniusReport {
    let exact = vec![true; local.names.len()];
    let (vertices, lw, rw) = local.report(&exact);
    FrobeniusReport {
        vertices,
        left: if lw.is_some() {
            Verdict::No
        } else {
            Verdict::Yes
        },
        right: if rw.is_some() {
            Verdict::No
        } else {
            Verdict::Yes
        },
        left_witness: lw,
        right_witness: rw,
        notes: Vec::new(),
    }
}

/// Condition (c) at every vertex and on both sides.
pub fn analyze_path(c: &PathSubcoalgebra) -> FrobeniusReport {
    exact_verdicts(&path_local(c))
}

pub fn analyze_incidence(c: &IncidenceSubcoalgebra) -> FrobeniusReport {
    exact_verdicts(&incidence_local(c))
}

/// For a finite window of an infinite incidence coalgebra: verdicts use only
/// the listed interior elements (poset indices).
pub fn analyze_incidence_window(c: &IncidenceSubcoalgebra, interior: &[usize]) -> FrobeniusReport {
    let local = incidence_local(c);
    let points = c.points();
    let exact: Vec<bool> = points.iter().map(|p| interior.contains(p)).collect();
    let (vertices, lw, rw) = local.report(&exact);
    let any = exact.iter().any(|&e| e);
    let verdict = |w: &Option<Witness>| match (w, any) {
        (Some(_), _) => Verdict::No,
        (None, true) => Verdict::YesOnWindow,
        (None, false) => Verdict::WindowInconclusive,
    };
    FrobeniusReport {
        left: verdict(&lw),
        right: verdict(&rw),
        vertices,
        left_witness: lw,
        right_witness: rw,
        notes: vec!["verdicts cover interior elements of the window only".into()],
    }
}

/// Windowed analysis of a canonical family. Cycles are finite and exact.
/// On a line window of length `L` with margin `M = max(r(n) − n)`, the
/// vertex at position `k` is exact when `k + M ≤ L − 1` and, unless the
/// window starts at the true origin of a half-line, `k ≥ M`.
pub fn analyze_family(f: &WindowedFamily) -> Result<FrobeniusReport> {
    analyze_family_with_margin(f, 0)
}

/// [`analyze_family`] with the margin raised to at least `min_margin`, for
/// callers that want more slack at the window ends than `r` demands.
pub fn analyze_family_with_margin(
    f: &WindowedFamily,
    min_margin: usize,
) -> Result<FrobeniusReport> {
    let c = f.build()?;
    let WindowedFamily::Line { kind, window, r } = f else {
        return Ok(analyze_path(&c));
    };
    let local = path_local(&c);
    let len = (window.1 - window.0 + 1) as usize;
    let m = (f.margin() as usize).max(min_margin);
    let exact: Vec<bool> = (0..len)
        .map(|k| (*kind == LineKind::A0Inf || k >= m) && k + m < len)
        .collect();
    let (vertices, lw, rw) = local.report(&exact);
    let mut notes = Vec::new();
    // Strictly increasing r with r(n) > n makes every vertex satisfy the
    // left condition; a failure on an exact vertex would mean a bug.
    let (left, left_witness) = match lw {
        Some(w) => (Verdict::No, Some(w)),
        None => {
            notes.push("left: holds for the whole family given the declared r".into());
            (Verdict::Yes, None)
        }
    };
    let offsets: Vec<i64> = (window.0..=window.1)
        .zip(r)
        .map(|(k, &rk)| rk - k)
        .collect();
    let constant = offsets.windows(2).all(|w| w[0] == w[1]);
    let (right, right_witness) = match kind {
        LineKind::A0Inf => {
            let w = rw.filter(|w| w.at == "0").unwrap_or_else(|| Witness {
                at: "0".into(),
                reason: "l(0) = 0 but r(0) > 0".into(),
            });
            (Verdict::No, Some(w))
        }
        LineKind::AInf if !constant => {
            let w = rw.unwrap_or_else(|| {
                let k = offsets.windows(2).position(|w| w[0] != w[1]).unwrap();
                Witness {
                    at: (window.0 + k as i64 + 1).to_string(),
                    reason: "r(n) − n is not constant, so r is not onto".into(),
                }
            });
            (Verdict::No, Some(w))
        }
        LineKind::AInf => match rw {
            Some(w) => (Verdict::No, Some(w)),
            None if exact.iter().any(|&e| e) => {
                notes.push(format!(
                    "right: r(n) = n + {} on the window; global claim needs it for all n",
                    offsets[0]
                ));
                (Verdict::YesOnWindow, None)
            }
            None => (Verdict::WindowInconclusive, None),
        },
    };
    Ok(FrobeniusReport {
        vertices,
        left,
        right,
        left_witness,
        right_witness,
        notes,
    })
}
