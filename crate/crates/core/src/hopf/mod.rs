//! Hopf algebra structures on the co-Frobenius path coalgebras that admit
//! one: the quantum-line products on `K[A∞|s]` and `K[Cₙ,s]`, the tables
//! `Hₙ(s, q, G, g, χ, α)`, antipodes and exhaustive axiom checks.

mod group;
mod quantum;
mod table;

pub use group::FiniteGroupData;
pub use quantum::{
    build_hn, comul_ainf, hn_index, product_ainf, product_cn, verify_coalgebra_iso_cn, AInfLabel,
    CnIsoReport, CnLabel, QuantumLineProduct,
};
pub use table::{compute_antipode, verify_hopf, HopfReport, HopfTable};
