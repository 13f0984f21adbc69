use thiserror::Error;

/// Crate-wide error type. Every variant renders as a single line so the CLI
/// can forward it verbatim as a machine-parseable diagnostic.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop ({v}, {v}) is not allowed")]
    SelfLoop { v: usize },

    #[error("pair ({u}, {v}) is not a non-edge of the graph")]
    NotANonEdge { u: usize, v: usize },

    #[error("pair set {{{a}, {b}}} does not span an induced square")]
    NotASquare { a: String, b: String },

    #[error("graph has {n} vertices, exceeding the limit {limit} for {what}")]
    TooLarge { n: usize, limit: usize, what: &'static str },

    #[error("probability {p} outside [0, 1]")]
    BadProbability { p: f64 },

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("generator spec `{spec}` invalid: {reason}")]
    GenSpec { spec: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
