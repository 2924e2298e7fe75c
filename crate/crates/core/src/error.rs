use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty periodic set")]
    EmptyPeriodicSet,

    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },

    #[error("window leaves l2(S): index {index} is not in S")]
    WindowOffSupport { index: i64 },

    #[error("grid below Nyquist for this support: need T >= {required}, got {got}")]
    GridBelowNyquist { required: usize, got: usize },

    #[error("empty system: no windows and no occupied residue class")]
    EmptySystem,

    #[error("inadmissible parameters (card K_{j} = {card} > qL = {limit})")]
    Inadmissible { j: i64, card: usize, limit: usize },

    #[error("truncation too small: n_max = {0} < 4")]
    TruncationTooSmall(usize),

    #[error("window count {got} does not match L = {expected}")]
    WindowCountMismatch { got: usize, expected: usize },

    #[error("malformed window: {0}")]
    MalformedWindow(String),

    #[error("parameters must be positive integers: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
