use thiserror::Error;

use crate::rootsys::LieType;
use crate::sl2index::{ClassicalKind, Partition};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        family: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("malformed Cartan matrix: {0}")]
    BadCartan(String),
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightArity { expected: usize, got: usize },
    #[error("weight coordinate {0} is negative")]
    NegativeWeight(i64),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("partition {partition} violates the {kind} parity conditions")]
    Parity {
        kind: ClassicalKind,
        partition: Partition,
    },
    #[error("partition {0} is the zero nilpotent; no sl2-subalgebra is attached")]
    ZeroNilpotent(Partition),
    #[error("partition size {got} does not match dim V = {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("{kind}({dim}) is degenerate for this computation")]
    DegenerateClassical { kind: ClassicalKind, dim: usize },
    #[error("test module has zero Dynkin index")]
    TrivialModule,
    #[error("{0} is not an exceptional type")]
    NotExceptional(LieType),
    #[error("{0} has rank 1: there is no subregular orbit")]
    NoSubregular(LieType),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
