use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Multiple arrows and loops are allowed; vertex and arrow
/// ids share one namespace so that a single id names either a vertex or an
/// arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

/// A path, stored by vertex and arrow indices of its quiver.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    Vertex(usize),
    Arrows(Vec<usize>),
}

#[allow(clippy::len_without_is_empty)]
impl Path {
    pub fn len(&self) -> usize {
        match self {
            Path::Vertex(_) => 0,
            Path::Arrows(a) => a.len(),
        }
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, Path::Vertex(_))
    }

    pub fn arrows(&self) -> &[usize] {
        match self {
            Path::Vertex(_) => &[],
            Path::Arrows(a) => a,
        }
    }

    pub fn first_arrow(&self) -> Option<usize> {
        self.arrows().first().copied()
    }

    pub fn last_arrow(&self) -> Option<usize> {
        self.arrows().last().copied()
    }
}

impl Quiver {
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex '{v}'")));
            }
        }
        let mut arrow_list = Vec::new();
        let mut arrow_index = HashMap::new();
        for (id, s, t) in arrows {
            if vertex_index.contains_key(&id) {
                return Err(Error::InvalidQuiver(format!(
                    "arrow id '{id}' is already a vertex id"
                )));
            }
            let source = *vertex_index.get(&s).ok_or_else(|| {
                Error::InvalidQuiver(format!("arrow '{id}' has undeclared source '{s}'"))
            })?;
            let target = *vertex_index.get(&t).ok_or_else(|| {
                Error::InvalidQuiver(format!("arrow '{id}' has undeclared target '{t}'"))
            })?;
            if arrow_index.insert(id.clone(), arrow_list.len()).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow '{id}'")));
            }
            arrow_list.push(Arrow { id, source, target });
        }
        Ok(Quiver {
            vertices,
            arrows: arrow_list,
            vertex_index,
            arrow_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Whether the arrows compose and all indices are in range.
    pub fn check_path(&self, p: &Path) -> bool {
        match p {
            Path::Vertex(v) => *v < self.vertices.len(),
            Path::Arrows(a) => {
                !a.is_empty()
                    && a.iter().all(|&x| x < self.arrows.len())
                    && a.windows(2)
                        .all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source)
            }
        }
    }

    pub fn source(&self, p: &Path) -> usize {
        match p {
            Path::Vertex(v) => *v,
            Path::Arrows(a) => self.arrows[a[0]].source,
        }
    }

    pub fn target(&self, p: &Path) -> usize {
        match p {
            Path::Vertex(v) => *v,
            Path::Arrows(a) => self.arrows[a[a.len() - 1]].target,
        }
    }

    /// `qp`: first `q`, then `p`. `None` unless `t(q) = s(p)`.
    pub fn concat(&self, q: &Path, p: &Path) -> Option<Path> {
        if self.target(q) != self.source(p) {
            return None;
        }
        Some(match (q, p) {
            (Path::Vertex(_), _) => p.clone(),
            (_, Path::Vertex(_)) => q.clone(),
            (Path::Arrows(a), Path::Arrows(b)) => {
                let mut v = a.clone();
                v.extend_from_slice(b);
                Path::Arrows(v)
            }
        })
    }

    /// The subpath consisting of arrows `i..j` (`i == j` gives the vertex
    /// reached after `i` arrows).
    pub fn subpath(&self, p: &Path, i: usize, j: usize) -> Path {
        debug_assert!(i <= j && j <= p.len());
        match p {
            Path::Vertex(v) => Path::Vertex(*v),
            Path::Arrows(a) => {
                if i == j {
                    if i == a.len() {
                        Path::Vertex(self.arrows[a[i - 1]].target)
                    } else {
                        Path::Vertex(self.arrows[a[i]].source)
                    }
                } else {
                    Path::Arrows(a[i..j].to_vec())
                }
            }
        }
    }

    /// All decompositions `p = p₁p₂` as `(p₁, p₂)`, by increasing `|p₁|`.
    pub fn path_splits(&self, p: &Path) -> Vec<(Path, Path)> {
        let n = p.len();
        (0..=n)
            .map(|k| (self.subpath(p, 0, k), self.subpath(p, k, n)))
            .collect()
    }

    /// Every contiguous subpath of `p`, vertices included, without repeats.
    pub fn subpaths(&self, p: &Path) -> Vec<Path> {
        let n = p.len();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for i in 0..=n {
            for j in i..=n {
                let s = self.subpath(p, i, j);
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Resolves a sequence of ids: a single vertex id, or a composable
    /// sequence of arrow ids.
    pub fn path_from_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<Path> {
        if ids.len() == 1 {
            if let Some(v) = self.vertex_index(ids[0].as_ref()) {
                return Ok(Path::Vertex(v));
            }
        }
        if ids.is_empty() {
            return Err(Error::InvalidArgument("empty path".into()));
        }
        let arrows = ids
            .iter()
            .map(|s| {
                let s = s.as_ref();
                self.arrow_index(s).ok_or_else(|| {
                    if self.vertex_index(s).is_some() {
                        Error::InvalidArgument(format!(
                            "vertex '{s}' cannot appear inside an arrow sequence"
                        ))
                    } else {
                        Error::InvalidArgument(format!("unknown id '{s}'"))
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let p = Path::Arrows(arrows);
        if !self.check_path(&p) {
            return Err(Error::InvalidArgument(format!(
                "arrows {} do not compose",
                ids.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(".")
            )));
        }
        Ok(p)
    }

    pub fn path_ids(&self, p: &Path) -> Vec<String> {
        match p {
            Path::Vertex(v) => vec![self.vertices[*v].clone()],
            Path::Arrows(a) => a.iter().map(|&x| self.arrows[x].id.clone()).collect(),
        }
    }

    pub fn path_name(&self, p: &Path) -> String {
        self.path_ids(p).join(".")
    }

    pub fn has_cycle(&self) -> bool {
        // Kahn's algorithm
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.out_arrows(v).collect::<Vec<_>>() {
                let t = self.arrows[a].target;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen < n
    }

    /// Same ids with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let mut q = self.clone();
        for a in &mut q.arrows {
            std::mem::swap(&mut a.source, &mut a.target);
        }
        q
    }

    /// Reverses a path of `self` into the corresponding path of
    /// `self.opposite()`.
    pub fn reverse_path(&self, p: &Path) -> Path {
        match p {
            Path::Vertex(v) => Path::Vertex(*v),
            Path::Arrows(a) => Path::Arrows(a.iter().rev().copied().collect()),
        }
    }

    /// Disjoint union; ids of part `i` are prefixed with `prefixes[i]`.
    /// Vertex and arrow indices of part `i` are shifted by the returned
    /// offsets.
    pub fn disjoint_union(parts: &[(&str, &Quiver)]) -> Result<(Quiver, Vec<(usize, usize)>)> {
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        let mut offsets = Vec::new();
        for (prefix, q) in parts {
            offsets.push((vertices.len(), arrows.len()));
            vertices.extend(q.vertices.iter().map(|v| format!("{prefix}{v}")));
            arrows.extend(q.arrows.iter().map(|a| {
                (
                    format!("{prefix}{}", a.id),
                    format!("{prefix}{}", q.vertices[a.source]),
                    format!("{prefix}{}", q.vertices[a.target]),
                )
            }));
        }
        Ok((Quiver::new(vertices, arrows)?, offsets))
    }

    pub fn shift_path(p: &Path, vertex_offset: usize, arrow_offset: usize) -> Path {
        match p {
            Path::Vertex(v) => Path::Vertex(v + vertex_offset),
            Path::Arrows(a) => Path::Arrows(a.iter().map(|x| x + arrow_offset).collect()),
        }
    }

    /// All paths of length at most `max_len`, ordered by length, then by
    /// source vertex, then by arrow indices.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len()).map(Path::Vertex).collect();
        let mut frontier: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        let mut len = 1;
        while len <= max_len && !frontier.is_empty() {
            frontier.sort_by_key(|p| (self.arrows[p[0]].source, p.clone()));
            let mut next = Vec::new();
            for p in &frontier {
                let t = self.arrows[*p.last().unwrap()].target;
                for a in self.out_arrows(t) {
                    let mut q = p.clone();
                    q.push(a);
                    next.push(q);
                }
            }
            out.extend(frontier.drain(..).map(Path::Arrows));
            frontier = next;
            len += 1;
        }
        out
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices: {}", self.vertices.join(" "))?;
        for a in &self.arrows {
            write!(
                f,
                "; {}: {} -> {}",
                a.id, self.vertices[a.source], self.vertices[a.target]
            )?;
        }
        Ok(())
    }
}
