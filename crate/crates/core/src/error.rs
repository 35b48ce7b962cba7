use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {0} vertices, at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {0} is out of range")]
    InvalidVertex(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("not a subgraph: {0}")]
    NotASubgraph(String),
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("graph must be connected")]
    Disconnected,
    #[error("embedding is not strong")]
    NotStrong,
    #[error("expected the sphere embedding, found Euler characteristic {0}")]
    NotSphere(i64),
    #[error("dual graph is not simple: {0}")]
    NonSimpleDual(String),
    #[error("expected an all-positive signature")]
    TwistedInput,
    #[error("expected a cubic graph")]
    NotCubic,
    #[error("expected a 3-connected graph")]
    NotThreeConnected,
    #[error("cycle space dimension {0} exceeds the cap of {1}")]
    CycleSpaceTooLarge(usize, usize),
    #[error("invalid cyclic edge cut: {0}")]
    InvalidCut(String),
    #[error("triangle {0:?} is not a facial triangle")]
    NotAFace([usize; 3]),
    #[error("vertex {0} does not have degree 3")]
    NotDegreeThree(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("planar code: {0}")]
    PlanarCode(String),
    #[error("database: {0}")]
    Database(String),
    #[error("consistency check failed: {0}")]
    Diagnostic(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
