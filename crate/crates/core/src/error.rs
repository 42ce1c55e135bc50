use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0:?} is not a weakly decreasing sequence of positive integers")]
    NotAPartition(Vec<u32>),

    #[error("malformed partition `{0}`; expected e.g. \"(3,1)\" or \"()\"")]
    MalformedPartition(String),

    #[error("partition {partition} has more than {max} parts")]
    TooManyParts { partition: Partition, max: usize },

    #[error("quotient rank d={d} must satisfy 1 <= d <= r={r}")]
    InvalidRank { d: usize, r: usize },

    #[error("shape has {cells} cells; brute-force enumeration is capped at {cap}")]
    EnumerationCap { cells: u32, cap: u32 },

    #[error("roots must be pairwise distinct")]
    RepeatedRoots,

    #[error("expected {expected} twists, got {got}")]
    TwistCount { expected: usize, got: usize },

    #[error("integration is only defined on the projective-space model")]
    NoIntegration,

    #[error("power N={n} is below the fiber dimension {fiber_dim}")]
    BelowFiberDimension { n: u32, fiber_dim: u32 },

    #[error("term k={k:?} has a zero denominator in the printed remark formula")]
    SingularRemarkTerm { k: Vec<u32> },
}
