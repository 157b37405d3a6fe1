use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} is outside 1..=64")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(usize, usize),
    #[error("cannot identify a vertex with itself ({0})")]
    SameVertex(usize),
    #[error("malformed graph6 line: {0}")]
    Graph6(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("map has source order {source_order} / target order {target_order}, graphs have {g_order} / {h_order}")]
    DimensionMismatch {
        source_order: usize,
        target_order: usize,
        g_order: usize,
        h_order: usize,
    },
    #[error("invalid v-special colouring: {0}")]
    InvalidColouring(String),
    #[error("extension of the colouring breaks edge {0}-{1}")]
    ExtensionFailed(usize, usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("unknown prune rule {0:?}")]
    UnknownRule(String),
    #[error("graph is bipartite")]
    Bipartite,
    #[error("graph has no edges")]
    Edgeless,
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
