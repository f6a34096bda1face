use std::fmt::Write;

use super::ast::*;

fn names(ids: &[Ident]) -> String {
    ids.iter()
        .map(|i| i.name.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical text of a document: one declaration per block, fixed
/// indentation and separators, comments dropped.
pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    for (k, item) in doc.items.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        match item {
            Item::Quiver(q) => {
                writeln!(out, "quiver {} {{", q.name.name).unwrap();
                writeln!(out, "  vertices: {};", names(&q.vertices)).unwrap();
                if !q.arrows.is_empty() {
                    out.push_str("  arrows:\n");
                    for a in &q.arrows {
                        writeln!(
                            out,
                            "    {}: {} -> {};",
                            a.id.name, a.source.name, a.target.name
                        )
                        .unwrap();
                    }
                }
                out.push_str("}\n");
            }
            Item::Poset(p) => {
                writeln!(out, "poset {} {{", p.name.name).unwrap();
                writeln!(out, "  elements: {};", names(&p.elements)).unwrap();
                if !p.relations.is_empty() {
                    out.push_str("  covers:\n");
                    for (a, b) in &p.relations {
                        writeln!(out, "    {} < {};", a.name, b.name).unwrap();
                    }
                }
                out.push_str("}\n");
            }
            Item::Coalgebra(c) => {
                writeln!(out, "coalgebra {} = {}", c.name.name, expr(&c.expr)).unwrap();
            }
            Item::Hopf(h) => {
                writeln!(out, "hopf {} {{", h.name.name).unwrap();
                writeln!(out, "  s: {};", h.s.value).unwrap();
                writeln!(out, "  q: {};", h.q.value).unwrap();
                writeln!(out, "  group: {};", group(&h.group)).unwrap();
                writeln!(out, "  alpha: {};", h.alpha).unwrap();
                out.push_str("}\n");
            }
        }
    }
    out
}

fn interior(i: &Option<Vec<Ident>>) -> String {
    match i {
        Some(ids) => format!(", interior={{{}}}", names(ids)),
        None => String::new(),
    }
}

fn expr(e: &CoalgebraExpr) -> String {
    match e {
        CoalgebraExpr::Paths { quiver, max_len } => match max_len {
            Some(m) => format!("paths({}, maxlen={})", quiver.name, m.value),
            None => format!("paths({})", quiver.name),
        },
        CoalgebraExpr::Basis { quiver, paths } => {
            let body: Vec<String> = paths.iter().map(|p| format!("  {};\n", names(p))).collect();
            format!("basis({}) {{\n{}}}", quiver.name, body.concat())
        }
        CoalgebraExpr::Segments {
            poset,
            interior: i,
            segments,
        } => {
            let body: Vec<String> = segments
                .iter()
                .map(|(a, b)| format!("[{},{}]", a.name, b.name))
                .collect();
            format!(
                "segments({}{}) {{ {} }}",
                poset.name,
                interior(i),
                body.join("; ")
            )
        }
        CoalgebraExpr::Full { poset, interior: i } => {
            format!("full({}{})", poset.name, interior(i))
        }
        CoalgebraExpr::Line { kind, window, r } => {
            let kind = match kind {
                LineKindAst::AInf => "Ainf",
                LineKindAst::A0Inf => "A0inf",
            };
            let r = match r {
                RSpec::Offset(s) => format!("s={}", s.value),
                RSpec::Values(v) => {
                    let v: Vec<String> = v
                        .iter()
                        .map(|(k, r)| format!("{}:{}", k.value, r.value))
                        .collect();
                    format!("r={{{}}}", v.join(", "))
                }
            };
            format!(
                "family({kind}, window=[{},{}], {r})",
                window.0.value, window.1.value
            )
        }
        CoalgebraExpr::Cycle { n, s } => format!("family(Cn, n={}, s={})", n.value, s.value),
        CoalgebraExpr::Sum(parts) => {
            let p: Vec<&str> = parts.iter().map(|i| i.name.as_str()).collect();
            format!("sum({})", p.join(", "))
        }
    }
}

fn group(g: &GroupSpec) -> String {
    match g {
        GroupSpec::Cyclic { n } => format!("cyclic({})", n.value),
        GroupSpec::Product { n, d } => format!("product({}, d={})", n.value, d.value),
        GroupSpec::Dihedral { m, t } => format!("dihedral({}, t={})", m.value, t.value),
        GroupSpec::Table { path, g, chi, .. } => {
            let chi: Vec<String> = chi
                .iter()
                .map(|(a, v)| format!("{}: {v}", a.name))
                .collect();
            format!(
                "table(\"{path}\", g={}, chi={{{}}})",
                g.name,
                chi.join(", ")
            )
        }
    }
}
