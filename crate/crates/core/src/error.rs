use crate::graph::{ArcId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} has in-degree {indeg} and out-degree {outdeg}; expected (0,2), (2,0) or (2,2)")]
    DegreeViolation {
        vertex: VertexId,
        indeg: usize,
        outdeg: usize,
    },
    #[error("arc {0} has an endpoint that is not a listed vertex")]
    DanglingEndpoint(ArcId),
    #[error("arc id {0} appears more than once")]
    DuplicateArc(ArcId),
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(VertexId),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("alternating cycle index {0} is out of range")]
    UnknownAc(usize),
    #[error("vertex {0} is not saturated")]
    NotSaturated(VertexId),
    #[error("vertex {0} is not an entry vertex")]
    NotEntry(VertexId),
    #[error("vertex {0} is not an exit vertex")]
    NotExit(VertexId),
    #[error("selection of alternating cycles is empty")]
    EmptySelection,
    #[error("selection has {found} bits but the graph has {expected} alternating cycles")]
    LengthMismatch { expected: usize, found: usize },
    #[error("graph has {acs} alternating cycles, above the enumeration cap of {cap}")]
    TooManyAcs { acs: usize, cap: usize },
    #[error("graph is not closed")]
    NotClosed,
    #[error("graph is saturated; routes are undefined")]
    SaturatedGraph,
    #[error("routes of equal index parity have mixed permutation parity")]
    MixedParityFound,
    #[error("vertex set is not a split set")]
    NotASplitSet,
    #[error("not a minimal split pair: {0}")]
    NotMinimalPair(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is not even")]
    NotEven,
    #[error("route is not an open route of the selected subgraph")]
    RouteNotOpen,
    #[error("alternating-cycle subset must be a nonempty proper subset")]
    KNotProper,
    #[error("alternating cycle has {0} arcs, expected 6")]
    NotSixArcs(usize),
    #[error("graph is not a 2-dd whose alternating cycles all have six arcs")]
    NotFamilyF6,
    #[error("{what} has {size} alternating cycles, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("enumeration needs more than the budget of {budget} candidates")]
    BudgetExceeded { budget: u64 },
    #[error("unsaturated vertex counts do not match: {0}")]
    CountMismatch(String),
    #[error("graph has {0} open routes, expected exactly one")]
    RouteNotUnique(usize),
    #[error("graph is not known to be non-Hamiltonian")]
    NotNonHamiltonian,
    #[error("graph is not minimally closed, connected and clean with six-arc cycles: {0}")]
    NotInC6(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}
