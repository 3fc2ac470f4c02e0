use thiserror::Error;

use crate::element::ElementSet;

/// Why a family of subsets fails to be a topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyDefect {
    MissingEmpty,
    MissingFull,
    OutOfRange(ElementSet),
    UnionEscapes(ElementSet, ElementSet),
    IntersectionEscapes(ElementSet, ElementSet),
}

/// Why a relation fails to be a bounded lattice order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeDefect {
    Empty,
    OutOfRange(usize, usize),
    NotReflexive(usize),
    NotAntisymmetric(usize, usize),
    NotTransitive(usize, usize, usize),
    NoMeet(usize, usize),
    NoJoin(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MtError {
    #[error("not a topology: {0:?}")]
    NotATopology(TopologyDefect),
    #[error("point count {n} exceeds the supported maximum {max}")]
    BoundExceeded { n: usize, max: usize },
    #[error("not a lattice: {0:?}")]
    NotALattice(LatticeDefect),
    #[error("not a partial order: {0:?}")]
    NotAPoset(LatticeDefect),
    #[error("not distributive: {a} ∧ ({b} ∨ {c}) differs from ({a} ∧ {b}) ∨ ({a} ∧ {c})")]
    NotDistributive { a: usize, b: usize, c: usize },
    #[error("element {0} is not open")]
    NotOpen(ElementSet),
    #[error("element {0} is not closed")]
    NotClosed(ElementSet),
    #[error("not continuous: preimage of open {0} is not open")]
    NotContinuous(ElementSet),
    #[error("point map is malformed: {0}")]
    BadPointMap(String),
    #[error("not a frame homomorphism: {0}")]
    NotAFrameHom(String),
    #[error("not an interior operator: {0}")]
    NotAnInteriorOperator(String),
    #[error("algebra is not normal")]
    NotNormal,
    #[error("{a} is not rather below {b}")]
    NotRatherBelow { a: ElementSet, b: ElementSet },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T, E = MtError> = std::result::Result<T, E>;
