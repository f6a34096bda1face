use super::quiver::{Path, Quiver};
use super::subcoalgebra::PathSubcoalgebra;
use crate::error::{Error, Result};

/// Which line quiver a windowed family lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineKind {
    /// The quiver `A∞` with vertex set ℤ.
    AInf,
    /// The half-line `A₀,∞` with vertex set ℕ.
    A0Inf,
}

/// One of the canonical co-Frobenius path subcoalgebras. The line types are
/// infinite, so they are held as a finite window `[a, b]` of vertices with
/// the values `r(a), …, r(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WindowedFamily {
    Line {
        kind: LineKind,
        window: (i64, i64),
        r: Vec<i64>,
    },
    /// `K[Cₙ, s]`: all paths of length at most `s` on the `n`-cycle.
    Cycle { n: usize, s: usize },
}

impl WindowedFamily {
    pub fn a_inf(window: (i64, i64), r: Vec<i64>) -> Result<Self> {
        let f = WindowedFamily::Line {
            kind: LineKind::AInf,
            window,
            r,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn a0_inf(end: i64, r: Vec<i64>) -> Result<Self> {
        let f = WindowedFamily::Line {
            kind: LineKind::A0Inf,
            window: (0, end),
            r,
        };
        f.validate()?;
        Ok(f)
    }

    /// `K[A∞|s]` on the window `[a, b]`.
    pub fn a_inf_constant(window: (i64, i64), s: i64) -> Result<Self> {
        Self::a_inf(window, (window.0..=window.1).map(|k| k + s).collect())
    }

    pub fn cycle(n: usize, s: usize) -> Result<Self> {
        let f = WindowedFamily::Cycle { n, s };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            WindowedFamily::Line { kind, window, r } => {
                let (a, b) = *window;
                if a > b {
                    return Err(Error::InvalidArgument(format!("empty window [{a},{b}]")));
                }
                if *kind == LineKind::A0Inf && a != 0 {
                    return Err(Error::InvalidArgument(
                        "a half-line window must start at 0".into(),
                    ));
                }
                if r.len() as i64 != b - a + 1 {
                    return Err(Error::InvalidArgument(format!(
                        "r has {} values for a window of {} vertices",
                        r.len(),
                        b - a + 1
                    )));
                }
                for (k, &rk) in (a..=b).zip(r) {
                    if rk <= k {
                        return Err(Error::InvalidArgument(format!(
                            "r({k}) = {rk} is not > {k}"
                        )));
                    }
                }
                if let Some(w) = r.windows(2).position(|w| w[1] <= w[0]) {
                    return Err(Error::InvalidArgument(format!(
                        "r is not strictly increasing at {}",
                        a + w as i64
                    )));
                }
                Ok(())
            }
            WindowedFamily::Cycle { n, s } => {
                if *n == 0 {
                    return Err(Error::InvalidArgument("cycle length must be ≥ 1".into()));
                }
                if *s == 0 {
                    return Err(Error::InvalidArgument("s must be ≥ 1".into()));
                }
                Ok(())
            }
        }
    }

    /// `r(k)` for a window vertex of a line family.
    pub fn r_at(&self, k: i64) -> Option<i64> {
        match self {
            WindowedFamily::Line { window, r, .. } if (window.0..=window.1).contains(&k) => {
                Some(r[(k - window.0) as usize])
            }
            _ => None,
        }
    }

    /// `max(r(n) − n)` over the window; `s` for a cycle.
    pub fn margin(&self) -> i64 {
        match self {
            WindowedFamily::Line { window, r, .. } => (window.0..=window.1)
                .zip(r)
                .map(|(k, &rk)| rk - k)
                .max()
                .unwrap_or(0),
            WindowedFamily::Cycle { s, .. } => *s as i64,
        }
    }

    /// Materializes the family. Line vertices are named by their integer,
    /// the arrow `k → k+1` is `x{k}`; cycle vertices are `0..n`, the arrow
    /// `k → k+1 mod n` is `a{k}`.
    pub fn build(&self) -> Result<PathSubcoalgebra> {
        self.validate()?;
        match self {
            WindowedFamily::Line { window, r, .. } => {
                let (a, b) = *window;
                let vertices: Vec<String> = (a..=b).map(|k| k.to_string()).collect();
                let arrows = (a..b).map(|k| (format!("x{k}"), k.to_string(), (k + 1).to_string()));
                let quiver = Quiver::new(vertices, arrows)?;
                let mut basis = Vec::new();
                for (k, &rk) in (a..=b).zip(r) {
                    let i = (k - a) as usize;
                    basis.push(Path::Vertex(i));
                    for l in k + 1..=rk.min(b) {
                        basis.push(Path::Arrows((i..(l - a) as usize).collect()));
                    }
                }
                PathSubcoalgebra::new(quiver, basis)
            }
            WindowedFamily::Cycle { n, s } => {
                let n = *n;
                let vertices: Vec<String> = (0..n).map(|k| k.to_string()).collect();
                let arrows =
                    (0..n).map(|k| (format!("a{k}"), k.to_string(), ((k + 1) % n).to_string()));
                let quiver = Quiver::new(vertices, arrows)?;
                let mut basis = Vec::new();
                for k in 0..n {
                    basis.push(Path::Vertex(k));
                    for l in 1..=*s {
                        basis.push(Path::Arrows((0..l).map(|i| (k + i) % n).collect()));
                    }
                }
                PathSubcoalgebra::new(quiver, basis)
            }
        }
    }
}

/// The cycle path `q_{k|l}`: length `l` starting at vertex `k` of a built
/// `K[Cₙ, s]`.
pub fn cycle_path(n: usize, k: usize, l: usize) -> Path {
    if l == 0 {
        Path::Vertex(k % n)
    } else {
        Path::Arrows((0..l).map(|i| (k + i) % n).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{coassociativity_failure, counit_failure, BasisCoalgebra};
    use crate::element::Element;

    #[test]
    fn cycle_dimensions() {
        let c = WindowedFamily::cycle(2, 1).unwrap().build().unwrap();
        assert_eq!(c.dim(), 4);
        for n in 1..=5 {
            for s in 1..=4 {
                let c = WindowedFamily::cycle(n, s).unwrap().build().unwrap();
                assert_eq!(c.dim(), n * (s + 1));
            }
        }
    }

    #[test]
    fn c2_grouplikes_and_skew_primitives() {
        let c = WindowedFamily::cycle(2, 1).unwrap().build().unwrap();
        assert_eq!(c.grouplikes(), vec![0, 1]);
        assert_eq!(c.skew_primitive_count(0, 1), 1);
        assert_eq!(c.skew_primitive_count(0, 0), 0);
        let env = c
            .injective_envelope(0, crate::coalgebra::Side::Right)
            .unwrap();
        assert_eq!(env, vec![Path::Vertex(0), cycle_path(2, 0, 1)]);
    }

    #[test]
    fn line_window_basis() {
        let f = WindowedFamily::a_inf_constant((0, 4), 2).unwrap();
        let c = f.build().unwrap();
        assert_eq!(c.dim(), 12);
        assert_eq!(coassociativity_failure(&c), None);
        assert_eq!(counit_failure(&c), None);
    }

    #[test]
    fn line_comul_matches_interval_sum() {
        let c = WindowedFamily::a_inf_constant((0, 6), 3)
            .unwrap()
            .build()
            .unwrap();
        let q = c.quiver();
        let p = |k: usize, l: usize| q.subpath(&Path::Arrows((0..6).collect()), k, l);
        let lhs = c.comul(&p(1, 4)).unwrap();
        let rhs: Element<(Path, Path)> = (1..=4)
            .map(|i| (p(1, i), p(i, 4)))
            .map(|t| (t, crate::exactfield::Scalar::one()))
            .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn invalid_families_are_rejected() {
        assert!(WindowedFamily::a_inf((0, 2), vec![1, 1, 3]).is_err());
        assert!(WindowedFamily::a_inf((0, 2), vec![1, 2, 2]).is_err());
        assert!(WindowedFamily::a0_inf(2, vec![1, 3]).is_err());
        assert!(WindowedFamily::cycle(3, 0).is_err());
        assert!(matches!(
            WindowedFamily::Line {
                kind: LineKind::A0Inf,
                window: (1, 3),
                r: vec![2, 3, 4]
            }
            .validate(),
            Err(Error::InvalidArgument(_))
        ));
    }
}
