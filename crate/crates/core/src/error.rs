use crate::QLin;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A circle coordinate landed exactly on a partition boundary, where the
    /// coding is two-valued.
    #[error("orbit point {point} lies on a partition boundary")]
    BoundaryHit { point: Box<QLin> },

    #[error("operation requires a plain (non-doubled) system")]
    NotPlain,

    #[error("operation requires a doubled system")]
    NotDoubled,

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid ceiling function: {0}")]
    InvalidCeiling(String),

    #[error("parameter violation: {0}")]
    ParameterViolation(String),

    #[error("block code is inconsistent with the target coding: {0}")]
    InconsistentCode(String),

    #[error("interior run of {run} split tiles labelled {label} cannot be regrouped")]
    MergeParity { label: u8, run: usize },

    #[error("unknown example {0}; expected 1 to 5")]
    UnknownExample(u8),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
