use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{0} is not an edge")]
    NotAnEdge(Edge),

    #[error("{0} is already an edge")]
    EdgePresent(Edge),

    #[error("{0} is not a free cut edge")]
    NotFreeCutEdge(Edge),

    #[error("switch rejected: {0} is not a free cut edge of the switched graph")]
    SwitchRejected(Edge),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not closed")]
    NotClosed,

    #[error("labeling is not a closed labeling of the graph")]
    InvalidLabeling,

    #[error("shortest-path enumeration exceeded the cap of {0} paths")]
    PathCapExceeded(usize),

    #[error("Hochster sum over {vertices} vertices exceeds the subset cap of {cap}")]
    SubsetCapExceeded { vertices: usize, cap: usize },

    #[error("no closed-form available for this graph")]
    NoClosedForm,

    #[error("parse error: {0}")]
    Parse(String),
}
