use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation was applied outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested scalar ring cannot represent the result.
    #[error("scalar-domain error: {0}")]
    ScalarDomain(String),
    /// Two algebras were combined that are not registered as a dual pair.
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A lattice quotient that should be free carries torsion.
    #[error("quotient at level {level}, degree {degree} has torsion invariants {invariants:?}")]
    Torsion {
        level: usize,
        degree: usize,
        invariants: Vec<BigInt>,
    },
    /// The freeness certifier could not assemble a unimodular basis.
    #[error("degree {degree}: change of basis is not unimodular (Smith invariants {invariants:?})")]
    NotUnimodular { degree: usize, invariants: Vec<BigInt> },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
