use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bitableau is not standard")]
    NotStandard,
    #[error("bitableau is empty")]
    Empty,
    #[error("two-row array is not in canonical order")]
    NotCanonical,
    #[error("zero polynomial has no initial monomial")]
    ZeroPolynomial,
    #[error("inconsistent basis: {0}")]
    InconsistentBasis(String),
    #[error("product of minors is already standard")]
    AlreadyStandard,
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("index ({0},{1}) lies outside the {2}x{3} grid")]
    OutOfGrid(usize, usize, usize, usize),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
