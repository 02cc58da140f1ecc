use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dimension {dim} out of range (complex has dimensions {min}..={max})")]
    DimensionOutOfRange { dim: isize, min: isize, max: isize },
    #[error("invalid selection: {0}")]
    InvalidSelection(String),
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("chain in dimension {dim} is not a cycle")]
    NotACycle { dim: usize },
    #[error("cochain in dimension {dim} is not a cocycle")]
    NotACocycle { dim: usize },
    #[error("{0}")]
    Condition(#[from] ConditionError),
    #[error("enumeration of {needed} subsets exceeds the cap of {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// A rank precondition on reduced homology that did not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{requirement} does not hold at dimension {dim}: {}", describe(.ranks))]
pub struct ConditionError {
    pub requirement: &'static str,
    pub dim: usize,
    /// `(homology dimension, required rank, actual rank)` for every rank involved.
    pub ranks: Vec<(isize, usize, usize)>,
}

fn describe(ranks: &[(isize, usize, usize)]) -> String {
    ranks
        .iter()
        .map(|(d, want, got)| {
            let rel = if want == got { "=" } else { "≠" };
            format!("rk H̃_{d} = {got} {rel} {want}")
        })
        .collect::<Vec<_>>()
        .join(", ")
}
