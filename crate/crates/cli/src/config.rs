//! Options shared by the commands.

use barytop_core::constructions::ModelKind;
use barytop_core::homology::is_prime;
use barytop_core::sset::DEFAULT_CELL_BUDGET;

use crate::error::CliError;

pub const BUDGET_VAR: &str = "BARYTOP_CELL_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integral,
    Prime(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ModelChoice {
    Suspension,
    Direct,
    Both,
}

impl ModelChoice {
    pub fn kinds(self) -> Vec<ModelKind> {
        match self {
            ModelChoice::Suspension => vec![ModelKind::Suspension],
            ModelChoice::Direct => vec![ModelKind::Direct],
            ModelChoice::Both => vec![ModelKind::Suspension, ModelKind::Direct],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_degree: Option<usize>,
    pub coefficients: Coefficients,
    pub model: ModelChoice,
    pub budget: usize,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_degree: None,
            coefficients: Coefficients::Integral,
            model: ModelChoice::Suspension,
            budget: DEFAULT_CELL_BUDGET,
            format: Format::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.budget == 0 {
            return Err(CliError::Usage("the cell budget must be positive".into()));
        }
        if let Coefficients::Prime(p) = self.coefficients {
            if !is_prime(p) {
                return Err(CliError::Usage(format!("--mod expects a prime, got {p}")));
            }
        }
        Ok(())
    }
}

/// The budget from a command-line flag, else from `BARYTOP_CELL_BUDGET`,
/// else the default.
pub fn resolve_budget(flag: Option<usize>) -> Result<usize, CliError> {
    resolve_budget_from(flag, std::env::var(BUDGET_VAR).ok().as_deref())
}

pub fn resolve_budget_from(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    let budget = match (flag, env) {
        (Some(b), _) => b,
        (None, Some(text)) => text
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_VAR} must be a positive integer, got `{text}`")))?,
        (None, None) => DEFAULT_CELL_BUDGET,
    };
    if budget == 0 {
        return Err(CliError::Usage("the cell budget must be positive".into()));
    }
    Ok(budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_precedence() {
        assert_eq!(resolve_budget_from(None, None).unwrap(), DEFAULT_CELL_BUDGET);
        assert_eq!(resolve_budget_from(None, Some("1000")).unwrap(), 1000);
        assert_eq!(resolve_budget_from(Some(7), Some("1000")).unwrap(), 7);
        assert!(resolve_budget_from(None, Some("lots")).is_err());
        assert!(resolve_budget_from(Some(0), None).is_err());
    }

    #[test]
    fn composite_modulus_is_rejected() {
        let cfg = RunConfig {
            coefficients: Coefficients::Prime(4),
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
