use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("block length must be odd, got {0}")]
    EvenLength(usize),

    #[error("block length {0} out of supported range 1..={1}")]
    LengthOutOfRange(usize, usize),

    #[error("polynomial {0} does not divide x^{1} - 1")]
    NotADivisor(String, usize),

    #[error("degree {degree} too large for block size {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("gcd(0, 0) is undefined")]
    GcdUndefined,

    #[error("residue {residue} out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: usize, modulus: usize },

    #[error("zero-dimensional code has no minimum distance")]
    ZeroDimension,

    #[error("dimension {dimension} exceeds the {cap} cap of {limit}; {hint}")]
    CapacityExceeded {
        dimension: usize,
        cap: &'static str,
        limit: usize,
        hint: &'static str,
    },

    #[error("constructed dual rows are not Hermitian-orthogonal to the code; the adjoint variant is wrong")]
    AdjointMismatch,

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("propagation rule {rule} not applicable: {reason}")]
    RuleInapplicable { rule: &'static str, reason: String },

    #[error("inconsistent weight enumerator: {0}")]
    InvalidEnumerator(String),

    #[error("records database: {0}")]
    Records(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
