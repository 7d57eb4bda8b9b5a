use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field order {0} (supported: 2, 3, 4, 5, 7, 8, 9)")]
    UnsupportedOrder(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspaces live in different ambient spaces: {left:?} vs {right:?}")]
    AmbientMismatch { left: (usize, u32), right: (usize, u32) },

    #[error("matrix has rank {rank}, expected full rank {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("product of canonical matrices is not canonical")]
    NotCanonical,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("a code needs at least two members to have a minimum distance")]
    SingletonCode,

    #[error("duplicate codeword at position {0}")]
    DuplicateCodeword(usize),

    #[error("{0}")]
    Unsupported(String),

    #[error("search budget exhausted after {0} nodes")]
    BudgetExceeded(u64),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
