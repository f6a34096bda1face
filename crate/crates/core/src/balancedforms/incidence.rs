use super::BilinearForm;
use crate::coalgebra::BasisCoalgebra;
use crate::error::{Error, Result};
use crate::exactfield::Scalar;
use crate::incidencecoalg::{IncidenceSubcoalgebra, Segment};

/// Data attached to one pair `(x, y) ∈ D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairParams {
    pub x: usize,
    pub y: usize,
    /// `U_{x,y} = {u : x ≤ u ≤ y, e_{x,u}, e_{u,y} ∈ B}`, ascending.
    pub u: Vec<usize>,
    /// The `∼`-classes of `U_{x,y}`, each ascending, ordered by first member.
    pub classes: Vec<Vec<usize>>,
    pub marked: Vec<bool>,
}

impl PairParams {
    pub fn class_of(&self, u: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&u))
    }
}

/// All pairs of `D` with their classes; marked classes index the balanced
/// forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceFormParam {
    pub pairs: Vec<PairParams>,
}

impl IncidenceFormParam {
    pub fn marked_count(&self) -> usize {
        self.pairs
            .iter()
            .map(|p| p.marked.iter().filter(|&&m| m).count())
            .sum()
    }

    pub fn pair(&self, x: usize, y: usize) -> Option<&PairParams> {
        self.pairs.iter().find(|p| p.x == x && p.y == y)
    }

    /// Marked classes in parameter order, as `(pair index, class index)`.
    pub fn marked_classes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, p) in self.pairs.iter().enumerate() {
            for (j, &m) in p.marked.iter().enumerate() {
                if m {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut i = i;
    while parent[i] != r {
        let next = parent[i];
        parent[i] = r;
        i = next;
    }
    r
}

pub fn compute_incidence_params(c: &IncidenceSubcoalgebra) -> IncidenceFormParam {
    let poset = c.poset();
    let n = poset.len();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if !poset.leq(x, y) {
                continue;
            }
            let u: Vec<usize> = poset
                .interval(x, y)
                .into_iter()
                .filter(|&u| c.contains(x, u) && c.contains(u, y))
                .collect();
            if u.is_empty() {
                continue;
            }
            // u ∼ v when some z ∈ U lies below both; take the transitive closure.
            let m = u.len();
            let mut parent: Vec<usize> = (0..m).collect();
            for zi in 0..m {
                let below: Vec<usize> = (0..m).filter(|&i| poset.leq(u[zi], u[i])).collect();
                for w in below.windows(2) {
                    let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
            let mut classes: Vec<Vec<usize>> = Vec::new();
            let mut root_class = vec![usize::MAX; m];
            for i in 0..m {
                let r = find(&mut parent, i);
                if root_class[r] == usize::MAX {
                    root_class[r] = classes.len();
                    classes.push(Vec::new());
                }
                classes[root_class[r]].push(u[i]);
            }
            let marked = classes
                .iter()
                .map(|class| {
                    class.iter().all(|&uu| {
                        (0..n).all(|v| {
                            let below_ok =
                                !(poset.leq(v, uu) && c.contains(v, y)) || poset.leq(x, v);
                            let above_ok =
                                !(poset.leq(uu, v) && c.contains(x, v)) || poset.leq(v, y);
                            below_ok && above_ok
                        })
                    })
                })
                .collect();
            pairs.push(PairParams {
                x,
                y,
                u,
                classes,
                marked,
            });
        }
    }
    IncidenceFormParam { pairs }
}

/// `β(e_{u,y}, e_{x,u}) = α_C` for `u` in a marked class `C` of `U_{x,y}`;
/// all other entries 0. `alpha` follows [`IncidenceFormParam::marked_classes`].
pub fn form_from_params<'a>(
    c: &'a IncidenceSubcoalgebra,
    params: &IncidenceFormParam,
    alpha: &[Scalar],
) -> Result<BilinearForm<'a, IncidenceSubcoalgebra>> {
    let marked = params.marked_classes();
    if alpha.len() != marked.len() {
        return Err(Error::InvalidArgument(format!(
            "{} parameters for {} marked classes",
            alpha.len(),
            marked.len()
        )));
    }
    let mut form = BilinearForm::zero(c);
    for (&(pi, ci), a) in marked.iter().zip(alpha) {
        let pair = &params.pairs[pi];
        for &u in &pair.classes[ci] {
            let p = c.index_of(&Segment::new(u, pair.y)).expect("u ∈ U_{x,y}");
            let q = c.index_of(&Segment::new(pair.x, u)).expect("u ∈ U_{x,y}");
            form.set(p, q, a.clone());
        }
    }
    Ok(form)
}
