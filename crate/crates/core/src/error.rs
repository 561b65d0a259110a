use thiserror::Error;

/// Errors raised by the numerical engines, the special functions and the
/// identity catalog.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value {value} at index/abscissa {at}")]
    NonFinite { at: f64, value: f64 },

    #[error("invalid options: {0}")]
    InvalidOptions(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("integer overflow while computing {0}")]
    Overflow(String),

    #[error("duplicate abscissa {0} in extrapolation samples")]
    DuplicateAbscissa(f64),

    #[error("extrapolation needs at least two samples, got {0}")]
    TooFewSamples(usize),

    #[error("{what} did not converge within {terms} terms")]
    NotConverged { what: String, terms: usize },

    #[error("parity mismatch: `{label}` is {actual}, operation requires {expected}")]
    ParityMismatch {
        label: String,
        expected: &'static str,
        actual: &'static str,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("identity `{id}` has no variant `{variant}`")]
    UnknownVariant { id: String, variant: String },

    #[error("parameter error: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
