use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the polynomial is not homogeneous (first offending term at column {position})")]
    NotHomogeneous { position: usize },
    #[error("the polynomial is zero")]
    Zero,
    #[error("degree {0} is too small, curves of degree at least 3 are supported")]
    DegreeTooSmall(u32),
    #[error("degree {degree} exceeds the configured limit {limit}")]
    DegreeLimit { degree: u32, limit: u32 },
    #[error("the curve is not reduced: its singular locus has dimension {0} in P^2")]
    NotReduced(i32),
    #[error("the curve is free, this construction needs at least three syzygies")]
    FreeCurve,
    #[error("the curve is not a 3-syzygy curve")]
    NotThreeSyzygy,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
