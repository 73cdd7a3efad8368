use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("genus mismatch: expected {expected}, found {found}")]
    GenusMismatch { expected: u32, found: u32 },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("marking {0} is out of range")]
    MarkingOutOfRange(u32),
    #[error("marking {0} occurs at more than one vertex")]
    MarkingRepeated(u32),
    #[error("marking {0} is not assigned to any vertex")]
    MarkingMissing(u32),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("edge {0} does not exist")]
    NoSuchEdge(EdgeId),
    #[error("graph has no vertices")]
    Empty,
    #[error("operation requires genus one, graph has genus {0}")]
    NotGenusOne(u32),
    #[error("level {level} outside 1..={length}")]
    LevelOutOfRange { level: usize, length: usize },
    #[error("invalid radial alignment: {0}")]
    InvalidAlignment(String),
    #[error("total degree is zero")]
    ZeroDegree,
    #[error("edge {0} is not a core edge")]
    NotCoreEdge(EdgeId),
    #[error("unsupported genus {0}; only genus 0 and 1 are enumerated")]
    UnsupportedGenus(u32),
    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("degenerate retract regime: {0}")]
    DegenerateRegime(String),
    #[error("point is not in Z: {0}")]
    NotInZ(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
