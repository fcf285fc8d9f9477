use thiserror::Error;

/// Errors raised by the braid, polynomial and recovery routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("index out of range for B_{n}: {detail}")]
    IndexOutOfRange { n: usize, detail: String },

    #[error("strand count must be at least 2, got {0}")]
    BadStrandCount(usize),

    #[error("strand count mismatch: expected {expected}, got {got}")]
    StrandMismatch { expected: usize, got: usize },

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("word is not a simple braid: strands starting at {0} and {1} cross twice")]
    NotSimple(usize, usize),

    #[error("word contains a negative or non-Artin letter; expected a positive Artin word")]
    NotPositive,

    #[error("{0} does not divide {1}")]
    NotDivisor(String, String),

    #[error("not a non-crossing partition: {0}")]
    NotNonCrossing(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matrix is not the Burau image of a simply-nested braid: {0}")]
    NotSimplyNestedEvidence(String),

    #[error("recovery search gave up after {0} nodes without a verdict")]
    SearchBudget(usize),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("malformed input: {0}")]
    Input(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::BadStrandCount(_) => "bad_strand_count",
            Error::StrandMismatch { .. } => "strand_mismatch",
            Error::DimensionMismatch(..) => "dimension_mismatch",
            Error::NotSimple(..) => "not_simple",
            Error::NotPositive => "not_positive",
            Error::NotDivisor(..) => "not_divisor",
            Error::NotNonCrossing(_) => "not_non_crossing",
            Error::Precondition(_) => "precondition",
            Error::NotSimplyNestedEvidence(_) => "not_simply_nested_evidence",
            Error::SearchBudget(_) => "search_budget",
            Error::Generation(_) => "generation",
            Error::Input(_) => "input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
