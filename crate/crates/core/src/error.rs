use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative argument {name} = {value}")]
    NegativeArgument { name: &'static str, value: i64 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid Schubert index {entries:?} of type ({r}, {d})")]
    InvalidSchubertIndex { entries: Vec<i64>, r: i64, d: i64 },

    #[error("invalid vanishing sequence {entries:?} of type ({r}, {d})")]
    InvalidVanishingSequence { entries: Vec<i64>, r: i64, d: i64 },

    #[error("context mismatch: expected type ({expected_r}, {expected_d}), got ({r}, {d})")]
    ContextMismatch {
        expected_r: i64,
        expected_d: i64,
        r: i64,
        d: i64,
    },

    #[error("collision: keeping index {stay} fixed breaks strict increase")]
    Collision { stay: usize },

    #[error("overflow: raising the top entry exceeds degree {d}")]
    Overflow { d: i64 },

    #[error("stationary index {stay} out of range 0..={r}")]
    StationaryOutOfRange { stay: usize, r: i64 },

    #[error(
        "not in the rigid regime: adjusted Brill-Noether number is {adjusted_rho}, expected 0"
    )]
    NotRhoZero { adjusted_rho: i64 },

    #[error("precondition failed: {0}")]
    PreconditionFail(String),

    #[error("non-integral result {0} (internal arithmetic error)")]
    NonIntegral(String),
}

impl Error {
    /// True for errors that indicate a bug in exact evaluation rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NonIntegral(_))
    }
}
