use std::collections::HashSet;

use super::analyze::Witness;
use crate::balancedforms::{FSet, IncidenceFormParam};
use crate::incidencecoalg::{segment_name, IncidenceSubcoalgebra, Segment};
use crate::quivercoalg::{Path, PathSubcoalgebra};

/// For every `q ∈ B` looks for `p ∈ B` with `t(q) = s(p)` and `qp ∈ F`.
/// Returns the first `q` (basis order) with no such `p`.
pub fn check_condition_d(c: &PathSubcoalgebra, f: &FSet) -> Result<(), Witness> {
    let quiver = c.quiver();
    let in_f: HashSet<&Path> = f.paths.iter().collect();
    for q in c.paths() {
        let ok = c
            .paths()
            .iter()
            .filter_map(|p| quiver.concat(q, p))
            .any(|d| in_f.contains(&d));
        if !ok {
            return Err(Witness {
                at: quiver.path_name(q),
                reason: "no basis path p with qp in F".into(),
            });
        }
    }
    Ok(())
}

/// Segment order used for the search: longest first, then by endpoints.
/// Nontrivial segments come before points, so a failure is reported where
/// the order relation is involved whenever one exists.
fn search_order(c: &IncidenceSubcoalgebra) -> Vec<Segment> {
    let poset = c.poset();
    let height = |e: &Segment| poset.interval(e.lo, e.hi).len();
    let mut segs = c.segments().to_vec();
    segs.sort_by_key(|e| (std::cmp::Reverse(height(e)), e.lo, e.hi));
    segs
}

fn segment_ok(c: &IncidenceSubcoalgebra, params: &IncidenceFormParam, e: Segment) -> bool {
    let (x, z) = (e.lo, e.hi);
    let poset = c.poset();
    (0..poset.len())
        .filter(|&y| poset.leq(z, y) && c.contains(z, y))
        .any(|y| {
            params
                .pair(x, y)
                .and_then(|pp| pp.class_of(z).map(|k| pp.marked[k]))
                .unwrap_or(false)
        })
}

/// For every `e_{x,z} ∈ B` looks for `y ≥ z` with `e_{z,y} ∈ B` and the class
/// of `z` in `U_{x,y}` marked.
pub fn check_condition_d_incidence(
    c: &IncidenceSubcoalgebra,
    params: &IncidenceFormParam,
) -> Result<(), Witness> {
    check_condition_d_incidence_on(c, params, None)
}

/// As [`check_condition_d_incidence`], restricted to segments with both
/// endpoints in `within` when given.
pub fn check_condition_d_incidence_on(
    c: &IncidenceSubcoalgebra,
    params: &IncidenceFormParam,
    within: Option<&[usize]>,
) -> Result<(), Witness> {
    for e in search_order(c) {
        if let Some(w) = within {
            if !(w.contains(&e.lo) && w.contains(&e.hi)) {
                continue;
            }
        }
        if !segment_ok(c, params, e) {
            return Err(Witness {
                at: segment_name(c.poset(), e),
                reason: "no y with e_{z,y} in B and z in a marked class of U_{x,y}".into(),
            });
        }
    }
    Ok(())
}
