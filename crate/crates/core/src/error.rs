use thiserror::Error;

/// Everything that can go wrong while building or counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid sign string: {0}")]
    InvalidSigns(String),

    #[error("partition {partition} does not sum to {expected}")]
    PartitionSum { partition: String, expected: usize },

    #[error("degenerate branch data: {0}")]
    DegenerateBranchData(String),

    #[error("parity mismatch: l(lambda)={left} and l(mu)={right} differ mod 2")]
    ParityMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds the safety cap {cap} (set HNUM_MAX_D to raise it)")]
    DegreeTooLarge { degree: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("lemma violation: {0}")]
    LemmaViolation(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("cover is not universally enhanced: {0}")]
    NotUniversal(String),

    #[error("non-vanishing hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),

    #[error("malformed cover document: {0}")]
    MalformedCover(String),
}

pub type Result<T> = std::result::Result<T, HurwitzError>;

impl HurwitzError {
    /// Errors caused by malformed user input rather than by the math.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            HurwitzError::InvalidPermutation(_)
                | HurwitzError::InvalidPartition(_)
                | HurwitzError::InvalidSigns(_)
                | HurwitzError::PartitionSum { .. }
                | HurwitzError::UnknownFormat(_)
                | HurwitzError::MalformedCover(_)
                | HurwitzError::DegreeMismatch { .. }
                | HurwitzError::DegreeTooLarge { .. }
        )
    }

    /// Branch data that admits no covers at all.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            HurwitzError::DegenerateBranchData(_)
                | HurwitzError::ParityMismatch { .. }
                | HurwitzError::HypothesisNotMet(_)
        )
    }
}
