//! Seeded random generators shared by the integration tests.
#![allow(dead_code)]

use pathcoalg::incidencecoalg::{IncidenceSubcoalgebra, Poset, Segment};
use pathcoalg::quivercoalg::{LineKind, Path, PathSubcoalgebra, Quiver, WindowedFamily};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vertices `v0..`, arrows `a0..` with arbitrary endpoints (loops and
/// parallel arrows allowed).
pub fn random_quiver(rng: &mut impl Rng, max_vertices: usize, max_arrows: usize) -> Quiver {
    let nv = rng.gen_range(1..=max_vertices);
    let na = rng.gen_range(0..=max_arrows);
    let arrows = (0..na).map(|k| {
        (
            format!("a{k}"),
            format!("v{}", rng.gen_range(0..nv)),
            format!("v{}", rng.gen_range(0..nv)),
        )
    });
    let arrows: Vec<_> = arrows.collect();
    Quiver::new((0..nv).map(|i| format!("v{i}")), arrows).unwrap()
}

/// Arrows only go from lower to higher vertex index, so the quiver is
/// acyclic and its full path coalgebra is finite.
pub fn random_acyclic_quiver(rng: &mut impl Rng, max_vertices: usize, max_arrows: usize) -> Quiver {
    let nv = rng.gen_range(1..=max_vertices);
    let na = if nv == 1 || rng.gen_bool(0.25) {
        0
    } else {
        rng.gen_range(1..=max_arrows)
    };
    let mut arrows = Vec::new();
    for k in 0..na {
        let i = rng.gen_range(0..nv - 1);
        let j = rng.gen_range(i + 1..nv);
        arrows.push((format!("a{k}"), format!("v{i}"), format!("v{j}")));
    }
    Quiver::new((0..nv).map(|i| format!("v{i}")), arrows).unwrap()
}

fn random_walk(rng: &mut impl Rng, q: &Quiver, max_len: usize) -> Path {
    let mut v = rng.gen_range(0..q.vertex_count());
    let len = rng.gen_range(0..=max_len);
    let mut arrows = Vec::new();
    for _ in 0..len {
        let out: Vec<usize> = q.out_arrows(v).collect();
        let Some(&a) = out.choose(rng) else { break };
        arrows.push(a);
        v = q.arrow(a).target;
    }
    if arrows.is_empty() {
        Path::Vertex(v)
    } else {
        Path::Arrows(arrows)
    }
}

/// Subpath closure of random walks, stopping before `|B|` exceeds `max_size`.
fn random_closed_basis(rng: &mut impl Rng, q: &Quiver, max_size: usize) -> Vec<Path> {
    let mut basis: Vec<Path> = Vec::new();
    for _ in 0..rng.gen_range(1..=12) {
        let p = random_walk(rng, q, 4);
        let mut grown = basis.clone();
        for s in q.subpaths(&p) {
            if !grown.contains(&s) {
                grown.push(s);
            }
        }
        if grown.len() <= max_size {
            basis = grown;
        }
    }
    basis
}

fn cycles_and_points(rng: &mut impl Rng, max_size: usize) -> PathSubcoalgebra {
    let mut parts = Vec::new();
    let mut size = 0;
    for _ in 0..rng.gen_range(1..=3) {
        let (n, s) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        if rng.gen_bool(0.3) {
            if size < max_size {
                parts.push(point());
                size += 1;
            }
        } else if size + n * (s + 1) <= max_size {
            parts.push(WindowedFamily::cycle(n, s).unwrap().build().unwrap());
            size += n * (s + 1);
        }
    }
    if parts.is_empty() {
        parts.push(point());
    }
    PathSubcoalgebra::direct_sum(&parts.iter().collect::<Vec<_>>()).unwrap()
}

pub fn point() -> PathSubcoalgebra {
    PathSubcoalgebra::full(Quiver::new(["p"], []).unwrap()).unwrap()
}

/// Mixes arbitrary closed bases with sums of cycles (co-Frobenius) and sums
/// of cycles with one longest path removed (not co-Frobenius).
pub fn random_path_subcoalgebra(rng: &mut impl Rng) -> PathSubcoalgebra {
    match rng.gen_range(0..4) {
        0 | 1 => {
            let q = random_quiver(rng, 6, 8);
            let basis = random_closed_basis(rng, &q, 25);
            PathSubcoalgebra::new(q, basis).unwrap()
        }
        2 => cycles_and_points(rng, 25),
        _ => {
            let c = cycles_and_points(rng, 25);
            let max = c.paths().iter().map(Path::len).max().unwrap();
            if max == 0 {
                return c;
            }
            let longest: Vec<&Path> = c.paths().iter().filter(|p| p.len() == max).collect();
            let drop = (*longest.choose(rng).unwrap()).clone();
            let rest = c.paths().iter().filter(|p| **p != drop).cloned().collect();
            PathSubcoalgebra::new(c.quiver().clone(), rest).unwrap()
        }
    }
}

/// Elements `x0..`; each pair `i < j` is related with probability `density`.
pub fn random_poset(rng: &mut impl Rng, max_elements: usize) -> Poset {
    let n = rng.gen_range(1..=max_elements);
    let density = rng.gen_range(0.1..0.5);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel.push((format!("x{i}"), format!("x{j}")));
            }
        }
    }
    Poset::from_covers((0..n).map(|i| format!("x{i}")), rel).unwrap()
}

fn interval_closure(poset: &Poset, chosen: &[Segment]) -> Vec<Segment> {
    let mut out = std::collections::BTreeSet::new();
    for e in chosen {
        let iv = poset.interval(e.lo, e.hi);
        for &u in &iv {
            for &v in &iv {
                if poset.leq(u, v) {
                    out.insert((u, v));
                }
            }
        }
    }
    out.into_iter().map(|(u, v)| Segment::new(u, v)).collect()
}

/// Random interval-closed bases: random segment closures, points only,
/// short segments, or everything.
pub fn random_incidence_subcoalgebra(
    rng: &mut impl Rng,
    max_elements: usize,
) -> IncidenceSubcoalgebra {
    let poset = random_poset(rng, max_elements);
    let n = poset.len();
    let all: Vec<Segment> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| poset.leq(x, y))
        .map(|(x, y)| Segment::new(x, y))
        .collect();
    let chosen: Vec<Segment> = match rng.gen_range(0..4) {
        0 => {
            let k = rng.gen_range(1..=all.len().min(6));
            all.choose_multiple(rng, k).copied().collect()
        }
        1 => all
            .iter()
            .filter(|e| e.is_trivial())
            .filter(|_| rng.gen_bool(0.7))
            .copied()
            .collect(),
        2 => {
            let h = rng.gen_range(1..=2);
            all.iter()
                .filter(|e| poset.interval(e.lo, e.hi).len() <= h + 1)
                .copied()
                .collect()
        }
        _ => all.clone(),
    };
    let mut basis = interval_closure(&poset, &chosen);
    if basis.is_empty() {
        basis.push(Segment::new(0, 0));
    }
    IncidenceSubcoalgebra::new(poset, basis).unwrap()
}

/// A strictly increasing `r` with `r(k) > k` on the window, offsets in
/// `1..=max_offset`.
pub fn random_r(rng: &mut impl Rng, window: (i64, i64), max_offset: i64) -> Vec<i64> {
    let mut r: Vec<i64> = Vec::new();
    for k in window.0..=window.1 {
        let lo = r.last().map_or(k + 1, |&p| (p + 1).max(k + 1));
        let hi = (k + max_offset).max(lo);
        r.push(rng.gen_range(lo..=hi));
    }
    r
}

/// A random canonical summand descriptor; `None` stands for a point.
pub fn random_descriptor(rng: &mut impl Rng) -> Option<WindowedFamily> {
    match rng.gen_range(0..4) {
        0 => None,
        1 => Some(WindowedFamily::cycle(rng.gen_range(1..=6), rng.gen_range(1..=3)).unwrap()),
        k => {
            let kind = if k == 2 {
                LineKind::AInf
            } else {
                LineKind::A0Inf
            };
            let len = rng.gen_range(1..=8);
            let a = if kind == LineKind::AInf {
                rng.gen_range(-5..=5)
            } else {
                0
            };
            let window = (a, a + len - 1);
            let r = if rng.gen_bool(0.5) {
                let s = rng.gen_range(1..=3);
                (window.0..=window.1).map(|k| k + s).collect()
            } else {
                random_r(rng, window, 3)
            };
            Some(match kind {
                LineKind::AInf => WindowedFamily::a_inf(window, r).unwrap(),
                LineKind::A0Inf => WindowedFamily::a0_inf(window.1, r).unwrap(),
            })
        }
    }
}
