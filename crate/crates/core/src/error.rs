use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("set must be nonempty")]
    EmptySet,
    #[error("element {0} is not a member of the set")]
    NotAMember(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported degree {degree} for {what} (supported up to {max})")]
    UnsupportedDegree {
        what: &'static str,
        degree: usize,
        max: usize,
    },
    #[error("reducibility undecided for this input: {0}")]
    Undecided(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
