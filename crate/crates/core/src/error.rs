use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input: shapes, names, unknown identifiers.
    #[error("input error: {0}")]
    Input(String),

    /// A document could not be parsed; `location` is a JSON-pointer-like path.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A construction's hypothesis does not hold on the given inputs.
    #[error("precondition failed: {context}")]
    Precondition { context: String, report: Box<AxiomReport> },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn precondition(context: impl Into<String>, report: AxiomReport) -> Self {
        Error::Precondition {
            context: context.into(),
            report: Box::new(report),
        }
    }

    /// The witness report carried by a precondition failure.
    pub fn report(&self) -> Option<&AxiomReport> {
        match self {
            Error::Precondition { report, .. } => Some(report),
            _ => None,
        }
    }
}
