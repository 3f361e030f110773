use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Coincident parameters, or a parameter sitting on a pole of the
    /// closed-form expressions (e.g. `q = 1` inside a partial fraction).
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("alpha vanishes at level {level}")]
    AlphaVanishes { level: usize },

    #[error("operators live on different Fock windows")]
    WindowMismatch,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("division by zero at level {0}")]
    DivisionByZeroAtLevel(usize),

    #[error("singular linear system")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),
}
