#![allow(clippy::needless_range_loop)]

pub mod balancedforms;
pub mod coalgebra;
pub mod element;
pub mod error;
pub mod exactfield;
pub mod frobenius;
pub mod hopf;
pub mod incidencecoalg;
pub mod linalg;
pub mod quivercoalg;

pub use error::{Error, Result};
