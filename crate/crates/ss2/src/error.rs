use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree {0} outside the supported range 1..=64")]
    DegreeOutOfRange(u32),
    #[error("elements belong to different fields (F_2^{0} vs F_2^{1})")]
    FieldMismatch(u32, u32),
    #[error("F_2^{0} is not a subfield of F_2^{1}")]
    NoEmbedding(u32, u32),
    #[error("the zero polynomial has no 2-power root decomposition")]
    ZeroPolynomial,
    #[error("invalid support set: {0}")]
    InvalidSupport(String),
    #[error("no tiling sequence exists for target {0}")]
    NoTiling(u128),
    #[error("search caps exceeded: {0}")]
    CapsExceeded(String),
    #[error("invalid criterion instance: {0}")]
    InvalidInstance(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("invalid curve equation: {0}")]
    InvalidCurve(String),
    #[error("curve has symbolic coefficients; a concrete base field is required")]
    SymbolicCurve,
    #[error("field F_2^{0} exceeds the point-counting cap 2^{1}")]
    FieldTooLarge(u32, u32),
    #[error("point counts are inconsistent: {0}")]
    InconsistentCounts(String),
    #[error("no value assigned to variable c{0}")]
    MissingVariable(u32),
    #[error("constant term has trace 1 and cannot be removed over the base field")]
    ConstantNotRemovable,
    #[error("leading coefficient cannot be normalized to 1 over the base field")]
    NonMonicLeading,
    #[error("binomial coefficient condition fails for m={0} at degree {1}")]
    BinomialConditionFails(u32, u32),
    #[error("no substitution found within the extension-degree cap")]
    NormalizationInconclusive,
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
