use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("missing operation `{0}`")]
    MissingOp(String),
    #[error("missing linear map `{0}`")]
    MissingMap(String),
    #[error("missing action `{0}`")]
    MissingAction(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition failed: {what}")]
    Precondition { what: String, report: Box<CheckReport> },
    #[error("construction output failed its check: {what}")]
    Postcondition { what: String, report: Box<CheckReport> },
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }

    pub fn precondition(what: impl Into<String>, report: CheckReport) -> Self {
        Error::Precondition { what: what.into(), report: Box::new(report) }
    }

    pub fn postcondition(what: impl Into<String>, report: CheckReport) -> Self {
        Error::Postcondition { what: what.into(), report: Box::new(report) }
    }

    /// The failing report attached to a gate error, if any.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::Precondition { report, .. } | Error::Postcondition { report, .. } => Some(report),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
