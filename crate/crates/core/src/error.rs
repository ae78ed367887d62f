use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex label outside `1..=order`.
    VertexOutOfRange {
        vertex: usize,
        order: usize,
    },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    /// The operation needs bitmask codes or the exact solver, both capped at 64 vertices.
    TooLarge {
        order: usize,
        limit: usize,
    },
    EmptyGraph,
    EmptyCode,
    NotLdCode,
    NotMinimal(usize),
    NotInCode(usize),
    SameVertex(usize),
    Disconnected,
    InsufficientEdges {
        colour: usize,
        found: usize,
    },
    InvalidParameter(String),
    MalformedCnf(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} is not in 1..={order}")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            Error::TooLarge { order, limit } => {
                write!(
                    f,
                    "graph of order {order} exceeds the limit of {limit} vertices"
                )
            }
            Error::EmptyGraph => f.write_str("graph has no vertices"),
            Error::EmptyCode => f.write_str("code is empty"),
            Error::NotLdCode => f.write_str("code is not locating-dominating"),
            Error::NotMinimal(v) => {
                write!(f, "code stays locating-dominating without codeword {v}")
            }
            Error::NotInCode(v) => write!(f, "vertex {v} is not a codeword"),
            Error::SameVertex(v) => write!(f, "expected two distinct vertices, got {v} twice"),
            Error::Disconnected => f.write_str("graph is not connected"),
            Error::InsufficientEdges { colour, found } => write!(
                f,
                "colour {colour} has {found} edges between non-codewords, need 2"
            ),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::MalformedCnf(msg) => write!(f, "malformed CNF: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
