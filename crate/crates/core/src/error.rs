use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("relabeling is not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("clique size {m} is outside 1..={} for order {n}", n.saturating_sub(1))]
    CliqueSizeOutOfRange { m: usize, n: usize },

    #[error("order {n} is outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },

    #[error("pair {u}-{v} is already present in the mixed graph")]
    PairOccupied { u: usize, v: usize },

    #[error("pair {u}-{v} is not present in the mixed graph")]
    PairAbsent { u: usize, v: usize },

    #[error("no orientation given for edge {u}-{v}")]
    MissingOrientation { u: usize, v: usize },

    #[error("orientation given for {u}-{v}, which is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("move {mv} is not applicable: {reason}")]
    IllegalMove { mv: String, reason: &'static str },

    #[error("order 8 needs the explicit opt-in and at least two workers")]
    OrderEightLocked,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
