//! Quivers, paths and path subcoalgebras, including the canonical families
//! `K[A∞, r]`, `K[A₀,∞, r]` and `K[Cₙ, s]`.

mod family;
mod quiver;
mod subcoalgebra;

pub use family::{cycle_path, LineKind, WindowedFamily};
pub use quiver::{Arrow, Path, Quiver};
pub use subcoalgebra::{validate, PathSubcoalgebra, Violation};
