use thiserror::Error;

/// What went wrong while decoding a graph6 string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    /// Byte outside the printable graph6 range 63..=126.
    NonPrintable(u8),
    /// The vertex-count header is malformed or incomplete.
    MalformedHeader,
    /// The string ends before the adjacency bits do.
    Truncated,
    /// Bytes remain after the adjacency bits (or padding bits are nonzero).
    TrailingGarbage,
    /// Vertex count is beyond what this implementation materializes.
    TooLarge,
}

impl std::fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Graph6ErrorKind::NonPrintable(b) => write!(f, "non-printable byte 0x{b:02x}"),
            Graph6ErrorKind::MalformedHeader => write!(f, "malformed length header"),
            Graph6ErrorKind::Truncated => write!(f, "input truncated"),
            Graph6ErrorKind::TrailingGarbage => write!(f, "trailing garbage"),
            Graph6ErrorKind::TooLarge => write!(f, "vertex count too large"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph6 error at byte {offset}: {kind}")]
    Graph6 {
        offset: usize,
        kind: Graph6ErrorKind,
    },

    #[error("edge list error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("coloring error: {0}")]
    Coloring(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not {k}-edge-connected")]
    NotKEdgeConnected { k: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
