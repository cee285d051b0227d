use thiserror::Error;

use crate::geom::{Axis, EndpointId};

pub type Result<T, E = StabError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabError {
    #[error("instance has no segments")]
    EmptyInstance,

    #[error("segment {0} has zero length")]
    ZeroLength(usize),

    #[error("degenerate input: endpoints {first} and {second} share a {axis} coordinate")]
    DegenerateInput {
        axis: Axis,
        first: EndpointId,
        second: EndpointId,
    },

    #[error("classification leaves segment {0} unassigned")]
    PartialClassification(usize),

    #[error("classification colors both endpoints of segment {0} alike")]
    InconsistentClassification(usize),

    #[error("malformed solution: {0}")]
    MalformedSolution(String),

    #[error("endpoint {0} seeded with both colors")]
    DoubleAssignmentConflict(EndpointId),

    #[error("checkpoint no longer matches the journal")]
    StaleCheckpoint,

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("duplicate value {0} in generator input")]
    DuplicateValues(String),

    #[error("bad size {n}: {reason}")]
    BadSize { n: usize, reason: &'static str },

    #[error("could not find a general-position instance after {0} attempts")]
    ExhaustedRetries(usize),

    #[error("instance has {n} segments, oracle cap is {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}
