use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("cycle {0} is not two-standard consecutive")]
    NotTwoStandard(String),

    #[error("{i} and {j} are not adjacent in cycle {cycle}")]
    NotAdjacent { cycle: String, i: usize, j: usize },

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("polygon diagonals are not generic: {0}")]
    NonGeneric(String),

    #[error("invalid point arrangement: {0}")]
    InvalidArrangement(String),

    #[error("arrangement sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("arrangement size {n} exceeds the brute-force bound {bound}")]
    TooLarge { n: usize, bound: usize },

    #[error("retry budget of {0} attempts exhausted")]
    RetryBudgetExhausted(usize),

    #[error("realization of {0} failed verification")]
    RealizationFailed(String),

    #[error("classifier disagreement on {0}")]
    ClassifierDisagreement(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
