use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed graph6 line: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
    #[error("color {color} at vertex {vertex} is outside the palette of {palette} colors")]
    ColorOutOfPalette { vertex: usize, color: usize, palette: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction produced an invalid coloring: {0}")]
    Construction(String),
    #[error("search budget exhausted before the value was settled")]
    BudgetExhausted,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
