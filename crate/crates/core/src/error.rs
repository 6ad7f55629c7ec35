use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Riemann-Roch was asked for `h^0` where `h^1` may be nonzero.
    #[error("degree {degree} is outside the regime d >= 2g-1 for genus {genus}")]
    OutOfRegime { degree: i64, genus: u32 },

    /// No implemented invariant separates the two partitions. Never read
    /// this as "isomorphic".
    #[error("no implemented invariant distinguishes {a:?} and {b:?} in genus {genus}")]
    Indistinguishable { a: Vec<u32>, b: Vec<u32>, genus: u32 },

    #[error("certificate does not verify: {0}")]
    UnsoundCertificate(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
