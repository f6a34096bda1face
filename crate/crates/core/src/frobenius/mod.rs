//! Co-Frobenius decisions for path and incidence subcoalgebras, the
//! classification of co-Frobenius path subcoalgebras and the resulting
//! Hopf-admissibility test.

mod analyze;
mod classify;
mod condition_d;

pub use analyze::{
    analyze_family, analyze_family_with_margin, analyze_incidence, analyze_incidence_window,
    analyze_path, FrobeniusReport, Verdict, VertexReport, Witness,
};
pub use classify::{
    admits_hopf, classify, classify_families, finite_path_coalgebra_hopf, iso_check,
    iso_invariants, CanonicalKey, Classification, ClassifyOutcome, HopfAdmissibility, HopfFamily,
    IsoResult, Summand, SummandKey, WindowDeclaration,
};
pub use condition_d::{
    check_condition_d, check_condition_d_incidence, check_condition_d_incidence_on,
};
