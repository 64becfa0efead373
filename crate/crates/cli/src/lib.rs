//! Command-line front end: fixture parsing, command dispatch and JSON
//! reports.

mod commands;
mod input;

pub use commands::{run, Cli, Command, Outcome, SCHEMA_VERSION};
pub use input::{InputSpec, Problem};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Core(#[from] jacsyz_core::Error),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{0} identity check(s) failed")]
    ChecksFailed(usize),
}

impl CliError {
    /// 2 non-reduced, 3 cone, 4 parse, 5 invalid subset, 6 failed checks,
    /// 1 anything else.
    pub fn exit_code(&self) -> i32 {
        use jacsyz_core::Error as E;
        match self {
            CliError::Parse(_) => 4,
            CliError::Io(_) => 1,
            CliError::ChecksFailed(_) => 6,
            CliError::Core(e) => match e {
                E::NotReduced => 2,
                E::Cone => 3,
                E::Syntax { .. }
                | E::UnknownVariable { .. }
                | E::DuplicateVariable(_)
                | E::BadVariableCount { .. }
                | E::BadDeclaredSyzygy { .. }
                | E::NotHomogeneous(_)
                | E::ZeroPolynomial => 4,
                E::InvalidSubset(_) => 5,
                _ => 1,
            },
        }
    }
}
