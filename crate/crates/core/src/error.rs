use thiserror::Error;

use crate::types::SolutionRecord;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("token does not encode a feasible solution: {0}")]
    InfeasibleToken(String),

    #[error("instance has no feasible solution")]
    NoFeasibleSolution,

    #[error("graph is not connected")]
    DisconnectedGraph,

    #[error("sink {sink_node} is unreachable from source {source_node}")]
    Unreachable { source_node: usize, sink_node: usize },

    /// No swept or searched record met the relaxed budget. The budget may be
    /// infeasible, or the bounds of the instance may be wrong.
    #[error("no record satisfied the relaxed budget ({} records inspected)", transcript.len())]
    NoCertificate { transcript: Vec<SolutionRecord> },

    #[error("an exact weighted-sum oracle is required (alpha = {alpha})")]
    ExactOracleRequired { alpha: String },

    #[error("problem kind `{0}` has no parametric weighted-sum algorithm")]
    NotParametricCapable(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation error at `{field}`: {message}")]
    Validation { field: String, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }
}
