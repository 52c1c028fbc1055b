mod args;
mod cache;
mod commands;
mod table;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Exit status for bad input: configuration, labels, words, files.
const EXIT_VALIDATION: u8 = 2;
/// Exit status when a cap or search budget stops a computation.
const EXIT_BUDGET: u8 = 3;
/// Exit status for a violated internal invariant.
const EXIT_INVARIANT: u8 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] tetris_sgp::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use tetris_sgp::Error as E;
        match self {
            CliError::Core(E::EnumerationLimit { .. } | E::SearchBudget { .. } | E::Incomplete(_)) => EXIT_BUDGET,
            CliError::Core(E::NotAGroup(_) | E::Invariant(_) | E::LengthMismatch { .. }) => EXIT_INVARIANT,
            CliError::Core(_) | CliError::Io(_) | CliError::Usage(_) => EXIT_VALIDATION,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate(a) => commands::enumerate(&cli, a),
        Command::States(a) => commands::states(&cli, a),
        Command::Semigroup(a) => commands::semigroup(&cli, a),
        Command::Aperiodic(a) => commands::aperiodic(&cli, a),
        Command::Holonomy(a) => commands::holonomy(&cli, a),
        Command::EvalWord(a) => commands::eval_word(&cli, a),
        Command::Reproduce(a) => table::reproduce(&cli, a),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
