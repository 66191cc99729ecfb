use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid bound {n}: must be at least {min}")]
    InvalidBound { n: u64, min: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("engine exhausted: k*k exceeds the bound")]
    Exhausted,

    #[error("removal log was not retained for this run")]
    LogNotRetained,

    #[error("cannot render {input} as {format}")]
    UnsupportedFormat {
        input: &'static str,
        format: &'static str,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_bound(n: u64, min: u64) -> Result<()> {
    if n < min {
        Err(Error::InvalidBound { n, min })
    } else {
        Ok(())
    }
}
