//! Heisenberg doubles of dual pairs of graded connected Hopf algebras,
//! computed exactly.

pub mod combinatorics;
pub mod element;
pub mod error;
pub mod expr;
pub mod freeness;
pub mod hecke;
pub mod heisenberg;
pub mod hopf;
pub mod instances;
pub mod linalg;
pub mod lincomb;
pub mod report;
pub mod rootofunity;
pub mod scalar;

pub use error::{Error, Result};
