use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use barytop_cli::commands::{cmd_admissible, cmd_euler, cmd_homology, cmd_poincare, Family, PoincareQuery, Report, Source};
use barytop_cli::config::{resolve_budget, Coefficients, Format, ModelChoice, RunConfig};
use barytop_cli::error::CliError;
use barytop_cli::expr::parse;
use barytop_cli::verify::cmd_verify;

/// Barycenter spaces, symmetric products and their homology.
#[derive(Parser, Debug)]
#[command(name = "barytop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Cell budget for any single construction (default: $BARYTOP_CELL_BUDGET or 5000000)
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Emit JSON instead of a text table
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integral or mod-p homology of a space expression
    Homology {
        expr: String,
        /// Work over F_p instead of the integers
        #[arg(long = "mod")]
        modulus: Option<u64>,
        /// Stop at this homological degree
        #[arg(long)]
        max_dim: Option<usize>,
        /// Model(s) used for a barycenter space
        #[arg(long, value_enum, default_value = "suspension")]
        model: ModelChoice,
        #[command(flatten)]
        common: Common,
    },
    /// Euler characteristic from closed forms, checked against a model
    Euler {
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Betti series of B_n(S^k) or of the reduced symmetric product of S^k
    Poincare {
        #[arg(long, conflicts_with = "rsp", required_unless_present = "rsp")]
        bary: Option<usize>,
        #[arg(long)]
        rsp: Option<usize>,
        #[arg(long)]
        sphere: u32,
        #[arg(long = "mod", default_value_t = 2)]
        modulus: u64,
        #[arg(long)]
        dmax: usize,
        #[arg(long, value_enum, default_value = "both")]
        source: Source,
        #[arg(long, value_enum, default_value = "direct")]
        model: ModelChoice,
        #[command(flatten)]
        common: Common,
    },
    /// Admissible words on the fundamental class of S^base
    Admissible {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        dmax: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run a cross-validation suite, or `all`
    Verify {
        suite: String,
        #[command(flatten)]
        common: Common,
    },
}

fn run(cli: Cli) -> Result<(Report, bool), CliError> {
    let format = |c: &Common| c.json;
    Ok(match cli.command {
        Command::Homology {
            expr,
            modulus,
            max_dim,
            model,
            common,
        } => {
            let e = parse(&expr).map_err(|err| CliError::Usage(err.render(&expr)))?;
            let cfg = RunConfig {
                max_degree: max_dim,
                coefficients: modulus.map_or(Coefficients::Integral, Coefficients::Prime),
                model,
                budget: resolve_budget(common.budget)?,
                format: if common.json { Format::Json } else { Format::Text },
            };
            (cmd_homology(&e, &cfg)?, format(&common))
        }
        Command::Euler { expr, common } => {
            let e = parse(&expr).map_err(|err| CliError::Usage(err.render(&expr)))?;
            (cmd_euler(&e, resolve_budget(common.budget)?)?, format(&common))
        }
        Command::Poincare {
            bary,
            rsp,
            sphere,
            modulus,
            dmax,
            source,
            model,
            common,
        } => {
            let family = match (bary, rsp) {
                (Some(n), _) => Family::Barycenter(n),
                (None, Some(n)) => Family::ReducedSymmetric(n),
                (None, None) => return Err(CliError::Usage("one of --bary or --rsp is required".into())),
            };
            let q = PoincareQuery {
                family,
                sphere,
                p: modulus,
                dmax,
                source,
                model,
                budget: resolve_budget(common.budget)?,
            };
            (cmd_poincare(&q)?, format(&common))
        }
        Command::Admissible { base, dmax, common } => (cmd_admissible(base, dmax)?, format(&common)),
        Command::Verify { suite, common } => (cmd_verify(&suite, resolve_budget(common.budget)?)?, format(&common)),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, json)) => {
            print!("{}", report.render(if json { Format::Json } else { Format::Text }));
            if report.budget_exceeded {
                ExitCode::from(2)
            } else if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("barytop: {e}");
            ExitCode::from(2)
        }
    }
}
