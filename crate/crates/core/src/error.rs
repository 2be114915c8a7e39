use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("ideal is not zero-dimensional (dimension {dimension})")]
    NotZeroDimensional { dimension: i64 },

    #[error("unstable result: trials disagree ({})", observed.join(" / "))]
    Instability { observed: Vec<String> },

    #[error("quotient dimension {dimension} is not below the characteristic {prime}")]
    CharacteristicHazard { dimension: usize, prime: u32 },

    #[error("a denominator vanishes modulo {prime}")]
    DenominatorVanishes { prime: u32 },

    #[error("Groebner basis computation exceeded its budget of {budget_ms} ms")]
    BudgetExceeded { budget_ms: u64 },

    #[error("conormal ideal has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: i64, found: i64 },

    #[error("slice dropped the dimension to {found}, expected {expected}")]
    DegenerateSlice { expected: i64, found: i64 },

    #[error("variety is not a cone: generator {index} is not homogeneous")]
    NotACone { index: usize },

    #[error("invalid variety: {0}")]
    InvalidSpec(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Errors that a fresh seed may cure.
    pub fn is_retryable(&self) -> bool {
        matches!(
            self,
            Error::Instability { .. } | Error::DegenerateSlice { .. }
        )
    }
}
