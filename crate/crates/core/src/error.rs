use thiserror::Error;

/// Errors raised by the arithmetic, matrix and forest operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("singular input: denominator cz + d vanishes")]
    Singular,

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{0} is not in D0")]
    NotInD0(String),

    #[error("trace exceeded {0} steps without reaching an orphan")]
    StepLimit(usize),

    #[error("orbit depth {depth} exceeds cap {cap}")]
    DepthCap { depth: usize, cap: usize },

    #[error("contraction bound violated: |L^n(z)|^2 = {0}")]
    BoundViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
