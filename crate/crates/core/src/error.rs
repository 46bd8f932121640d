use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} is outside 1..=64")]
    Order(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("terminal set needs at least 2 vertices, got {0}")]
    TooFewTerminals(usize),
    #[error("graph order {order} is below the minimum {min} for this operation")]
    TooSmall { order: usize, min: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),
    #[error("order {order} exceeds the cap {cap} for {what}")]
    Cap { what: &'static str, order: usize, cap: usize },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("parameters outside every supported regime: {0}")]
    UnsupportedRegime(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

impl Error {
    /// True for errors that stem from a search running out of budget rather
    /// than from bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExhausted(_))
    }
}
