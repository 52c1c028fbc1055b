use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid piece `{label}`: {reason}")]
    InvalidPiece { label: String, reason: String },

    #[error("unknown piece label `{0}`")]
    UnknownLabel(String),

    #[error("piece `{label}` of width {width} cannot be placed at column {column} on a board of width {board_width}")]
    PlacementOutOfBounds {
        label: String,
        width: u32,
        column: u32,
        board_width: u32,
    },

    #[error("{what} limit of {cap} exceeded ({found} found so far)")]
    EnumerationLimit {
        what: &'static str,
        cap: usize,
        found: usize,
    },

    #[error("holonomy search budget of {budget} states exceeded; group order is at least {lower_bound}")]
    SearchBudget { budget: usize, lower_bound: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("incomplete input: {0}")]
    Incomplete(String),

    #[error("word syntax error at byte {offset}: {reason}")]
    WordSyntax { offset: usize, reason: String },

    #[error("word references generator {label}_{column}, which is not in the state space")]
    MissingGenerator { label: String, column: u32 },

    #[error("format error: {0}")]
    Format(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
