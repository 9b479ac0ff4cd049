use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid operands: {0}")]
    InvalidOperands(String),

    #[error("{0} is not an element of the group")]
    NotInGroup(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("not in span: nonzero residual {0}")]
    NotInSpan(String),

    /// A theorem-level check failed. Never a recoverable state.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
