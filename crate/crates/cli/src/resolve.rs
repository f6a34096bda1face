//! Turns a parsed document into library values, checking references and
//! running each module's validation.

use std::collections::HashMap;
use std::path::Path as FsPath;

use pathcoalg::exactfield::{RootOfUnity, Scalar};
use pathcoalg::frobenius::WindowDeclaration;
use pathcoalg::hopf::{build_hn, FiniteGroupData, HopfTable};
use pathcoalg::incidencecoalg::{IncidenceSubcoalgebra, Poset, Segment};
use pathcoalg::quivercoalg::{PathSubcoalgebra, Quiver, WindowedFamily};

use crate::dsl::*;
use crate::groupcsv;

/// Largest basis any constructor may materialize.
pub const MAX_BASIS: usize = 20_000;

#[derive(Debug, Clone)]
pub enum PathPart {
    Family(WindowedFamily),
    Plain(PathSubcoalgebra),
}

impl PathPart {
    fn build(&self) -> pathcoalg::Result<PathSubcoalgebra> {
        match self {
            PathPart::Family(f) => f.build(),
            PathPart::Plain(c) => Ok(c.clone()),
        }
    }
}

/// A path coalgebra together with how it was assembled. A sum of several
/// parts is materialized with the ids of part `i` prefixed `s{i}_`.
#[derive(Debug, Clone)]
pub struct PathValue {
    pub coalgebra: PathSubcoalgebra,
    pub parts: Vec<PathPart>,
}

impl PathValue {
    pub fn prefix(&self, i: usize) -> String {
        if self.parts.len() == 1 {
            String::new()
        } else {
            format!("s{i}_")
        }
    }

    pub fn declarations(&self) -> Vec<WindowDeclaration> {
        self.parts
            .iter()
            .enumerate()
            .filter_map(|(i, p)| match p {
                PathPart::Family(f) => WindowDeclaration::for_family(f, &self.prefix(i)),
                PathPart::Plain(_) => None,
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct IncidenceValue {
    pub coalgebra: IncidenceSubcoalgebra,
    /// Poset indices of a declared window interior.
    pub interior: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub enum CoalgebraValue {
    Path(PathValue),
    Incidence(IncidenceValue),
}

#[derive(Debug, Clone)]
pub struct HopfValue {
    pub s: usize,
    pub q: RootOfUnity,
    pub group: FiniteGroupData,
    pub alpha: Scalar,
    pub table: HopfTable,
}

#[derive(Debug, Clone)]
pub enum Value {
    Quiver(Quiver),
    Poset(Poset),
    Coalgebra(CoalgebraValue),
    Hopf(Box<HopfValue>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Quiver(_) => "quiver",
            Value::Poset(_) => "poset",
            Value::Coalgebra(_) => "coalgebra",
            Value::Hopf(_) => "hopf",
        }
    }
}

/// Declarations in document order.
#[derive(Debug, Clone, Default)]
pub struct Resolved {
    pub entries: Vec<(String, Value)>,
    index: HashMap<String, usize>,
}

impl Resolved {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.index.get(name).map(|&i| &self.entries[i].1)
    }

    fn lookup(&self, id: &Ident, want: &str) -> Result<&Value, Diagnostic> {
        let v = self.get(&id.name).ok_or_else(|| {
            Diagnostic::reference(id.span, format!("'{}' is not declared before use", id.name))
        })?;
        if v.kind() != want {
            return Err(Diagnostic::reference(
                id.span,
                format!("'{}' is a {}, expected a {want}", id.name, v.kind()),
            ));
        }
        Ok(v)
    }

    fn quiver(&self, id: &Ident) -> Result<&Quiver, Diagnostic> {
        match self.lookup(id, "quiver")? {
            Value::Quiver(q) => Ok(q),
            _ => unreachable!(),
        }
    }

    fn poset(&self, id: &Ident) -> Result<&Poset, Diagnostic> {
        match self.lookup(id, "poset")? {
            Value::Poset(p) => Ok(p),
            _ => unreachable!(),
        }
    }
}

fn invalid(span: Span, e: impl std::fmt::Display) -> Diagnostic {
    Diagnostic::validation(span, e.to_string())
}

fn natural(i: &Int, what: &str, min: i64) -> Result<usize, Diagnostic> {
    if i.value < min {
        return Err(Diagnostic::validation(
            i.span,
            format!("{what} must be at least {min}"),
        ));
    }
    Ok(i.value as usize)
}

/// Resolves every declaration in order. Group table files are read relative
/// to `base`.
pub fn resolve(doc: &Document, base: &FsPath) -> Result<Resolved, Diagnostic> {
    let mut out = Resolved::default();
    for item in &doc.items {
        let name = item.name();
        if out.index.contains_key(&name.name) {
            return Err(Diagnostic::reference(
                name.span,
                format!("'{}' is declared twice", name.name),
            ));
        }
        let value = match item {
            Item::Quiver(q) => Value::Quiver(quiver(q)?),
            Item::Poset(p) => Value::Poset(poset(p)?),
            Item::Coalgebra(c) => Value::Coalgebra(coalgebra(&out, c)?),
            Item::Hopf(h) => Value::Hopf(Box::new(hopf(h, base)?)),
        };
        out.index.insert(name.name.clone(), out.entries.len());
        out.entries.push((name.name.clone(), value));
    }
    Ok(out)
}

fn quiver(q: &QuiverDecl) -> Result<Quiver, Diagnostic> {
    let mut seen = HashMap::new();
    for v in &q.vertices {
        if seen.insert(v.name.as_str(), "vertex").is_some() {
            return Err(Diagnostic::validation(
                v.span,
                format!("vertex '{}' listed twice", v.name),
            ));
        }
    }
    for a in &q.arrows {
        for end in [&a.source, &a.target] {
            if seen.get(end.name.as_str()) != Some(&"vertex") {
                return Err(Diagnostic::reference(
                    a.id.span,
                    format!(
                        "arrow '{}' has undeclared endpoint '{}'",
                        a.id.name, end.name
                    ),
                ));
            }
        }
        if let Some(kind) = seen.insert(a.id.name.as_str(), "arrow") {
            return Err(Diagnostic::validation(
                a.id.span,
                format!("arrow id '{}' is already a {kind} id", a.id.name),
            ));
        }
    }
    Quiver::new(
        q.vertices.iter().map(|v| v.name.clone()),
        q.arrows.iter().map(|a| {
            (
                a.id.name.clone(),
                a.source.name.clone(),
                a.target.name.clone(),
            )
        }),
    )
    .map_err(|e| invalid(q.name.span, e))
}

fn poset(p: &PosetDecl) -> Result<Poset, Diagnostic> {
    let known: Vec<&str> = p.elements.iter().map(|e| e.name.as_str()).collect();
    for (a, b) in &p.relations {
        for x in [a, b] {
            if !known.contains(&x.name.as_str()) {
                return Err(Diagnostic::reference(
                    x.span,
                    format!("'{}' is not an element of {}", x.name, p.name.name),
                ));
            }
        }
    }
    Poset::from_covers(
        p.elements.iter().map(|e| e.name.clone()),
        p.relations
            .iter()
            .map(|(a, b)| (a.name.clone(), b.name.clone())),
    )
    .map_err(|e| invalid(p.name.span, e))
}

/// Number of paths of length at most `max_len`, or `None` past the cap.
fn count_paths(q: &Quiver, max_len: usize) -> Option<usize> {
    let mut ending: Vec<usize> = vec![1; q.vertex_count()];
    let mut total = q.vertex_count();
    for _ in 0..max_len {
        let mut next = vec![0usize; q.vertex_count()];
        for a in q.arrows() {
            next[a.target] = next[a.target].saturating_add(ending[a.source]);
        }
        ending = next;
        total = ending.iter().fold(total, |t, &x| t.saturating_add(x));
        if total > MAX_BASIS {
            return None;
        }
        if ending.iter().all(|&x| x == 0) {
            break;
        }
    }
    Some(total)
}

fn element_indices(p: &Poset, ids: &[Ident]) -> Result<Vec<usize>, Diagnostic> {
    ids.iter()
        .map(|e| {
            p.index_of(&e.name).ok_or_else(|| {
                Diagnostic::reference(e.span, format!("'{}' is not an element", e.name))
            })
        })
        .collect()
}

fn path_value(part: PathPart, span: Span) -> Result<CoalgebraValue, Diagnostic> {
    let coalgebra = part.build().map_err(|e| invalid(span, e))?;
    Ok(CoalgebraValue::Path(PathValue {
        coalgebra,
        parts: vec![part],
    }))
}

fn coalgebra(env: &Resolved, c: &CoalgebraDecl) -> Result<CoalgebraValue, Diagnostic> {
    let span = c.span;
    match &c.expr {
        CoalgebraExpr::Paths { quiver, max_len } => {
            let q = env.quiver(quiver)?;
            let len = match max_len {
                Some(m) => natural(m, "maxlen", 0)?,
                None if q.has_cycle() => {
                    return Err(Diagnostic::validation(
                        quiver.span,
                        format!(
                            "'{}' has an oriented cycle; give paths({}, maxlen=N)",
                            quiver.name, quiver.name
                        ),
                    ))
                }
                None => q.vertex_count(),
            };
            if count_paths(q, len).is_none() {
                return Err(Diagnostic::validation(
                    span,
                    format!("more than {MAX_BASIS} paths"),
                ));
            }
            let c =
                PathSubcoalgebra::with_max_length(q.clone(), len).map_err(|e| invalid(span, e))?;
            path_value(PathPart::Plain(c), span)
        }
        CoalgebraExpr::Basis { quiver, paths } => {
            let q = env.quiver(quiver)?;
            let basis = paths
                .iter()
                .map(|p| {
                    let ids: Vec<&str> = p.iter().map(|i| i.name.as_str()).collect();
                    q.path_from_ids(&ids).map_err(|e| invalid(p[0].span, e))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let c = PathSubcoalgebra::new(q.clone(), basis).map_err(|e| invalid(span, e))?;
            path_value(PathPart::Plain(c), span)
        }
        CoalgebraExpr::Segments {
            poset,
            interior,
            segments,
        } => {
            let p = env.poset(poset)?;
            let basis = segments
                .iter()
                .map(|(lo, hi)| {
                    let ix = element_indices(p, &[lo.clone(), hi.clone()])?;
                    Ok(Segment::new(ix[0], ix[1]))
                })
                .collect::<Result<Vec<_>, Diagnostic>>()?;
            let coalgebra =
                IncidenceSubcoalgebra::new(p.clone(), basis).map_err(|e| invalid(span, e))?;
            let interior = interior
                .as_ref()
                .map(|ids| element_indices(p, ids))
                .transpose()?;
            Ok(CoalgebraValue::Incidence(IncidenceValue {
                coalgebra,
                interior,
            }))
        }
        CoalgebraExpr::Full { poset, interior } => {
            let p = env.poset(poset)?;
            let n = p.len();
            if n * (n + 1) / 2 > MAX_BASIS {
                return Err(Diagnostic::validation(span, "poset too large"));
            }
            let interior = interior
                .as_ref()
                .map(|ids| element_indices(p, ids))
                .transpose()?;
            Ok(CoalgebraValue::Incidence(IncidenceValue {
                coalgebra: IncidenceSubcoalgebra::full(p.clone()),
                interior,
            }))
        }
        CoalgebraExpr::Line { kind, window, r } => {
            let (a, b) = (window.0.value, window.1.value);
            if b < a {
                return Err(Diagnostic::validation(window.1.span, "empty window"));
            }
            let r: Vec<i64> = match r {
                RSpec::Offset(s) => (a..=b).map(|k| k + s.value).collect(),
                RSpec::Values(values) => {
                    let mut r = vec![None; (b - a + 1) as usize];
                    for (k, v) in values {
                        if !(a..=b).contains(&k.value) {
                            return Err(Diagnostic::validation(
                                k.span,
                                format!("{} lies outside the window [{a},{b}]", k.value),
                            ));
                        }
                        if r[(k.value - a) as usize].replace(v.value).is_some() {
                            return Err(Diagnostic::validation(
                                k.span,
                                format!("r({}) given twice", k.value),
                            ));
                        }
                    }
                    if let Some(i) = r.iter().position(Option::is_none) {
                        return Err(Diagnostic::validation(
                            span,
                            format!("r({}) is missing", a + i as i64),
                        ));
                    }
                    r.into_iter().flatten().collect()
                }
            };
            let f = match kind {
                LineKindAst::AInf => WindowedFamily::a_inf((a, b), r),
                LineKindAst::A0Inf if a != 0 => {
                    return Err(Diagnostic::validation(
                        window.0.span,
                        "an A0inf window starts at the origin 0",
                    ))
                }
                LineKindAst::A0Inf => WindowedFamily::a0_inf(b, r),
            }
            .map_err(|e| invalid(span, e))?;
            path_value(PathPart::Family(f), span)
        }
        CoalgebraExpr::Cycle { n, s } => {
            let (n, s) = (natural(n, "n", 1)?, natural(s, "s", 0)?);
            if n * (s + 1) > MAX_BASIS {
                return Err(Diagnostic::validation(span, "family too large"));
            }
            let f = WindowedFamily::cycle(n, s).map_err(|e| invalid(span, e))?;
            path_value(PathPart::Family(f), span)
        }
        CoalgebraExpr::Sum(names) => {
            let mut parts = Vec::new();
            for id in names {
                match env.lookup(id, "coalgebra")? {
                    Value::Coalgebra(CoalgebraValue::Path(v)) => parts.extend(v.parts.clone()),
                    _ => {
                        return Err(Diagnostic::validation(
                            id.span,
                            format!(
                                "'{}' is an incidence coalgebra; sum takes path coalgebras",
                                id.name
                            ),
                        ))
                    }
                }
            }
            let built = parts
                .iter()
                .map(PathPart::build)
                .collect::<pathcoalg::Result<Vec<_>>>()
                .map_err(|e| invalid(span, e))?;
            let coalgebra = if built.len() == 1 {
                built.into_iter().next().unwrap()
            } else {
                PathSubcoalgebra::direct_sum(&built.iter().collect::<Vec<_>>())
                    .map_err(|e| invalid(span, e))?
            };
            Ok(CoalgebraValue::Path(PathValue { coalgebra, parts }))
        }
    }
}

fn sign_character(i: &Int) -> Result<RootOfUnity, Diagnostic> {
    match i.value {
        1 => Ok(RootOfUnity::one()),
        -1 => Ok(RootOfUnity::new(2, 1).unwrap()),
        _ => Err(Diagnostic::validation(
            i.span,
            "character value must be 1 or -1",
        )),
    }
}

fn hopf(h: &HopfDecl, base: &FsPath) -> Result<HopfValue, Diagnostic> {
    let s = natural(&h.s, "s", 1)?;
    let q = RootOfUnity::new(s as u32 + 1, h.q.value).map_err(|e| invalid(h.q.span, e))?;
    let alpha: Scalar = h.alpha.parse().map_err(|e| invalid(h.name.span, e))?;
    let group = match &h.group {
        GroupSpec::Cyclic { n } => {
            FiniteGroupData::cyclic(natural(n, "n", 1)?, q).map_err(|e| invalid(n.span, e))?
        }
        GroupSpec::Product { n, d } => {
            FiniteGroupData::cyclic_times_c2(natural(n, "n", 1)?, q, sign_character(d)?)
                .map_err(|e| invalid(n.span, e))?
        }
        GroupSpec::Dihedral { m, t } => {
            FiniteGroupData::dihedral(natural(m, "m", 2)?, sign_character(t)?)
                .map_err(|e| invalid(m.span, e))?
        }
        GroupSpec::Table {
            path,
            path_span,
            g,
            chi,
        } => {
            let (names, table) = groupcsv::read(&base.join(path))
                .map_err(|e| Diagnostic::validation(*path_span, format!("{path}: {e}")))?;
            let find = |id: &Ident| {
                names.iter().position(|x| *x == id.name).ok_or_else(|| {
                    Diagnostic::reference(id.span, format!("'{}' is not a group element", id.name))
                })
            };
            let gi = find(g)?;
            let mut values = vec![None; names.len()];
            for (a, v) in chi {
                let i = find(a)?;
                let root: RootOfUnity = v.parse().map_err(|e| invalid(a.span, e))?;
                if values[i].replace(root).is_some() {
                    return Err(Diagnostic::validation(
                        a.span,
                        format!("χ({}) given twice", a.name),
                    ));
                }
            }
            if let Some(i) = values.iter().position(Option::is_none) {
                return Err(Diagnostic::validation(
                    g.span,
                    format!("χ({}) is missing", names[i]),
                ));
            }
            FiniteGroupData::from_table(names, table, gi, values.into_iter().flatten().collect())
                .map_err(|e| invalid(*path_span, e))?
        }
    };
    let table = build_hn(s, q, &group, alpha.clone()).map_err(|e| invalid(h.name.span, e))?;
    Ok(HopfValue {
        s,
        q,
        group,
        alpha,
        table,
    })
}
