use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("{{{0},{1}}} is not a non-edge")]
    NotANonEdge(usize, usize),

    #[error("kappa={kappa} < {required}")]
    ConnectivityTooLow { kappa: usize, required: usize },

    #[error("graph of order {order} is too small (need at least {min})")]
    TooSmall { order: usize, min: usize },

    #[error("no cuts exist: graph is complete")]
    Complete,

    #[error("no 3-fan from {apex} to the cut inside the given component")]
    NoFan { apex: usize },

    #[error("fan does not span the component together with the cut")]
    FanNotSpanning,

    #[error("vertex {0} lies inside the subgraph")]
    VertexInSubgraph(usize),

    #[error("fragments belong to different graphs")]
    ForeignFragment,

    #[error("order {n} outside supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },

    #[error("internal disagreement: {0}")]
    Disagreement(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
