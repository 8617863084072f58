use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of the gamma function at {0}")]
    Pole(Complex64),
    #[error("result overflows the double range: {0}")]
    Overflow(String),
    #[error("series did not converge within {terms} terms")]
    Nonconvergence { terms: usize },
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error("parameters sit on a singular case: {0}")]
    SingularParams(String),
    #[error("parameters are not in the terminating case: {0}")]
    NotTerminating(String),
    #[error("continuation coefficient denominator vanishes: {0}")]
    Degenerate(String),
    #[error("forcing exponents violate the distinctness assumption: {0}")]
    Hypothesis(String),
}

impl Error {
    /// Short machine-readable name, used by the command line front end.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole(_) => "PoleError",
            Error::Overflow(_) => "OverflowError",
            Error::Nonconvergence { .. } => "NonconvergenceError",
            Error::Domain(_) => "DomainError",
            Error::SingularParams(_) => "SingularParamsError",
            Error::NotTerminating(_) => "NotTerminatingError",
            Error::Degenerate(_) => "DegenerateError",
            Error::Hypothesis(_) => "HypothesisError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
