//! Finite posets, incidence subcoalgebras, the Hasse-quiver embedding into
//! path coalgebras and the tensor decomposition of product posets.

mod embed;
mod poset;
mod subcoalgebra;

pub use embed::{
    embed, hasse_paths, hasse_quiver, tensor_iso_check, Embedding, EmbeddingReport, TensorIsoReport,
};
pub use poset::Poset;
pub use subcoalgebra::{
    diamond_ladder, segment_name, validate, DiamondLadder, IncidenceSubcoalgebra, Segment,
    Violation,
};
