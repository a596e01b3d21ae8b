use thiserror::Error;

/// Errors surfaced by the algebra pipeline.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field size: k = {0} (need 1 <= k <= 32)")]
    UnsupportedFieldSize(u32),

    #[error("extension too large: degree {0} exceeds the 32-bit element cap")]
    ExtensionTooLarge(u32),

    #[error("identically zero polynomial")]
    ZeroPolynomial,

    #[error("no such variable: {0}")]
    NoSuchVariable(String),

    #[error("not zero-dimensional at point (dimension did not stabilize by truncation {0})")]
    NotZeroDimensional(usize),

    #[error("vector field violates normal form condition ({0})")]
    NormalFormViolation(&'static str),

    #[error("no hypersurface generator found below degree bound {0}")]
    NoGeneratorBelowBound(usize),

    #[error("vector field is not p-closed")]
    NotPClosed,

    #[error("point outside chart")]
    PointOutsideChart,

    #[error("germ is not an isolated singularity")]
    NotIsolatedSingularity,

    #[error("germ is smooth at the origin")]
    SmoothGerm,

    #[error("resolution did not terminate within {0} blowups")]
    ResolutionDiverged(usize),

    #[error("exceptional configuration matches no ADE diagram")]
    NotRationalDoublePoint,

    #[error("unrecognized coindex: tjurina number {tau} has no table entry for {letter}{index}")]
    UnrecognizedCoindex { letter: char, index: usize, tau: usize },

    #[error("positive-dimensional singular locus during resolution")]
    PositiveDimensionalSingularLocus,

    #[error("components not coprime (non-isolated common zero)")]
    NotCoprime,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
