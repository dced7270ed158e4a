use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownRootType(String),

    #[error("rank {rank} is not valid for type {root_type}")]
    RankMismatch { root_type: String, rank: usize },

    #[error("missing multiplicity for the {0} root class")]
    MissingMultiplicity(String),

    #[error("invalid multiplicity {value} for the {class} root class")]
    InvalidMultiplicity { class: String, value: f64 },

    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("singular basis: the unmultipliable simple roots do not span the ambient space")]
    SingularBasis,

    #[error("index {index} out of range (rank {rank})")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight coefficient {0} is negative")]
    NegativeCoefficient(i64),

    #[error("log_gamma requires a positive argument, got {0}")]
    NonPositiveGammaArgument(f64),

    #[error("nonpositive pairing {0}: weight is not dominant")]
    NonDominant(f64),

    #[error("operation requires a group manifold (reduced, all multiplicities 2)")]
    NotGroupManifold,

    #[error("point lies outside the closed Weyl chamber")]
    OutsideChamber,

    #[error("shifted weight lies on a chamber wall or outside the open chamber")]
    NotInOpenChamber,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("rank {0} is not supported here")]
    UnsupportedRank(usize),

    #[error("quadrature did not converge after {refinements} refinements (last change {last_change:e})")]
    QuadratureNonConvergence { refinements: u32, last_change: f64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("catalog entry `{name}`: {message}")]
    InvalidEntry { name: String, message: String },

    #[error("unknown space `{0}`")]
    UnknownSpace(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
