use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed simplicial set: {0}")]
    Structure(String),

    #[error("group action is not simplicial: {0}")]
    Action(String),

    #[error("relation identifies a {0}-cell with a {1}-cell")]
    DimensionMismatch(usize, usize),

    #[error("relation is not compatible with the face maps: {0}")]
    IncompatibleRelation(String),

    #[error("{construction}: cell budget of {budget} exceeded (census so far {census:?})")]
    BudgetExceeded {
        construction: String,
        budget: usize,
        census: Vec<usize>,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("missing series: {0}")]
    MissingSeries(String),

    #[error("invariant factor {0} does not fit in 64 bits")]
    TorsionOverflow(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
