use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 decode error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },

    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0}-{1} is not in the graph")]
    EdgeNotPresent(usize, usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not bicyclic: n = {n}, m = {m}, connected = {connected}")]
    NotBicyclic { n: usize, m: usize, connected: bool },

    #[error("edge {0}-{1} is a bridge and lies on no cycle")]
    Bridge(usize, usize),

    #[error("invalid shape: {0}")]
    InvalidShape(&'static str),

    #[error("order {n} is outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
}
