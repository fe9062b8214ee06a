use thiserror::Error;

use crate::toric::GroebnerBasis;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("matrix has rank {rank} but {rows} rows; the operation needs full row rank")]
    RankDeficient { rank: usize, rows: usize },

    #[error("matrix is not a configuration: no hyperplane off the origin contains every column")]
    NotConfiguration,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("vertex {vertex} does not lie on every odd cycle")]
    ApexNotUniversalForOddCycles { vertex: usize },

    #[error("vector cannot be written as a sum of {degree} generators")]
    NotDecomposable { degree: usize },

    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        actual: u64,
        limit: u64,
    },

    #[error("resource limit exceeded: {what} reached {limit}")]
    ResourceLimit { what: &'static str, limit: u64 },

    #[error("S-pair budget of {budget} exhausted; partial basis has {} elements", partial.elements.len())]
    SPairBudget {
        budget: u64,
        partial: Box<GroebnerBasis>,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for budget and size failures, as opposed to bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::SizeLimit { .. } | Error::ResourceLimit { .. } | Error::SPairBudget { .. }
        )
    }
}
