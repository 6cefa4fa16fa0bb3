use thiserror::Error;

use crate::expr::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Core(#[from] barytop_core::Error),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn is_budget(&self) -> bool {
        matches!(self, CliError::Core(barytop_core::Error::BudgetExceeded { .. }))
    }
}
