use thiserror::Error;

use crate::gf::FieldSpec;
use crate::hypergraph::{HyperedgeId, Vertex};
use crate::matroid::ElementId;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("field spec mismatch: {0} vs {1}")]
    SpecMismatch(FieldSpec, FieldSpec),
    #[error("expected {want} coordinates, got {got}")]
    BadCoordinates { want: usize, got: usize },
    #[error("element {0:?} is not in the matroid ground set")]
    ForeignElement(ElementId),
    #[error("vertex {0:?} is not in the hypergraph")]
    UnknownVertex(Vertex),
    #[error("hyperedge {0:?} is not in the hypergraph")]
    UnknownEdge(HyperedgeId),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("target sum is not reachable from the given labels")]
    UnreachableTarget,
    #[error("no zero-sum cycle found (largest m attempted: {m_attempted})")]
    NoCycleFound { m_attempted: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
