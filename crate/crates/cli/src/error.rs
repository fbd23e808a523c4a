use thiserror::Error;

/// Errors that stop a scenario before it runs.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("reference error: {0}")]
    Reference(String),
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Errors raised while executing one step.
#[derive(Debug, Error)]
pub enum StepError {
    #[error(transparent)]
    Core(#[from] fpp_core::Error),
    #[error("argument `{name}`: {message}")]
    Argument { name: String, message: String },
    #[error("unknown operation {0:?}")]
    UnknownOp(String),
    #[error("step `{0}` produced no value of the required kind")]
    WrongReference(String),
    #[error("step `{0}` failed, so its value is unavailable")]
    Upstream(String),
}

impl StepError {
    pub fn kind(&self) -> &'static str {
        match self {
            StepError::Core(e) => e.kind(),
            StepError::Argument { .. } => "ArgumentError",
            StepError::UnknownOp(_) => "UnknownOp",
            StepError::WrongReference(_) => "ReferenceError",
            StepError::Upstream(_) => "UpstreamError",
        }
    }

    pub(crate) fn arg(name: &str, message: impl Into<String>) -> Self {
        StepError::Argument {
            name: name.to_string(),
            message: message.into(),
        }
    }
}

macro_rules! core_from {
    ($($t:ty),*) => {
        $(impl From<$t> for StepError {
            fn from(e: $t) -> Self {
                StepError::Core(e.into())
            }
        })*
    };
}

core_from!(
    fpp_core::error::ParseError,
    fpp_core::error::SingularityError,
    fpp_core::error::LedgerError,
    fpp_core::error::CoverError,
    fpp_core::error::LefschetzError,
    fpp_core::error::FibrationError
);
