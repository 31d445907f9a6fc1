use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("vanishing denominator for {0}")]
    VanishingDenominator(String),
    #[error("cell ({0},{1}) is not in the diagram")]
    OutOfDiagram(usize, usize),
    #[error("diagrams {0} and {1} differ by more than one cell")]
    NotAdjacent(String, String),
    #[error("partition {0} has more than {1} rows")]
    RowCount(String, usize),
    #[error("{0} is not modularizable")]
    NotModularizable(String),
    #[error("invalid transparent generator: {0}")]
    InvalidGenerator(String),
    #[error("invalid m choice: {0}")]
    InvalidMChoice(String),
    #[error("S-matrix only available for the C series, got {0}")]
    SMatrixUnavailable(String),
    #[error("value is not an integer: {0}")]
    NonIntegral(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}
