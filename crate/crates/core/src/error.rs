//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("basis vectors are linearly dependent (rank {rank} < {given} given)")]
    DependentBasis { rank: usize, given: usize },
    #[error("character is constant on the subspace")]
    DegenerateCharacter,
    #[error("subspaces do not share a linear part")]
    MismatchedLinearParts,
    #[error("element {element:#x} is not contained in the target subspace")]
    NotContained { element: u32 },
    #[error("dimension {dim} exceeds the configured cap {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("a normalizing density is zero")]
    ZeroDensity,
    #[error("the lattice is empty")]
    EmptyLattice,
    #[error("an index set is empty")]
    EmptySet,
    #[error("input out of range: {0}")]
    OutOfRange(String),
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error("no density increment found: {0}")]
    NoIncrementFound(String),
    #[error("set is already uniform (all nontrivial modes vanish)")]
    AlreadyUniform,
    #[error("partition exhausted available dimensions")]
    DimensionExhausted,
    #[error("no partition cell achieves the density bound: {0}")]
    NoGoodCell(String),
    #[error("instance too large for exhaustive search")]
    TooLarge,
    #[error("configuration space must be a linear subspace in standard form")]
    NonLinearHome,
    #[error("operands live over different spaces")]
    HomeMismatch,
    #[error("corner guarantee contradicted: {0}")]
    GvnContradiction(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that signal a violated guarantee rather than bad input.
    pub fn is_property_violation(&self) -> bool {
        matches!(
            self,
            Error::NoIncrementFound(_) | Error::NoGoodCell(_) | Error::GvnContradiction(_)
        )
    }
}
