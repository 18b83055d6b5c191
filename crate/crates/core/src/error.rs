use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0}-{1} in simple graph")]
    DuplicateEdge(u32, u32),
    #[error("vertex index {index} out of range (n = {n})")]
    VertexOutOfRange { index: u32, n: u32 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("empty or full vertex set where a proper cut side is required")]
    NotAProperCut,
    #[error("blocks do not form a partition of the vertex set")]
    NotAPartition,
    #[error("graph too large for the brute-force oracle (n = {n}, limit = {limit})")]
    OracleLimit { n: usize, limit: usize },
    #[error("graph must have at least {0} vertices")]
    TooFewVertices(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("inconsistent cut family: {0}")]
    InconsistentCuts(String),
    #[error("not a valid cactus: {0}")]
    InvalidCactus(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
