use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("catalog data error in {case}: {detail}")]
    Catalog { case: String, detail: String },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn catalog(case: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Catalog { case: case.into(), detail: detail.into() }
    }
}
