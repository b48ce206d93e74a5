use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("point is not on the quadric")]
    NotOnQuadric,
    #[error("point lies on the curve")]
    OnCurve,
    #[error("degenerate result: {0}")]
    Degenerate(String),
    #[error("search exhausted: {0}")]
    Exhausted(String),
    #[error("parity check failed: writhe {writhe} for {nodes} nodes")]
    Parity { writhe: i64, nodes: usize },
    #[error("projection centers disagree: {0:?}")]
    CenterDisagreement(Vec<i64>),
    #[error("numerical certification failed: {0}")]
    Numeric(String),
}
