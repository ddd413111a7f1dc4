use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {letter}{rank}: {allowed}")]
    InvalidType {
        letter: char,
        rank: usize,
        allowed: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i32>),

    #[error("{0:?} is not a simple root")]
    NotSimple(Vec<i32>),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i32>),

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("elements belong to different root systems ({0} vs {1})")]
    MixedSystems(String, String),

    /// Enumeration would exceed the configured element cap.
    #[error("enumeration of {what} exceeds the cap of {cap} elements")]
    TooLarge { what: String, cap: usize },

    /// A module handed to a B-module routine is not closed under the required lowering operators.
    #[error("not a B-submodule: {0}")]
    Structural(String),

    /// The requested description is not valid for this root system.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Two independent computations of the same quantity disagree.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
