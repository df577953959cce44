use thiserror::Error;

/// Errors raised by the algebra routines and the catalog layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("coefficient {0} is not representable modulo {1}")]
    CoefficientNotRepresentable(String, u32),
    #[error("invalid characteristic {0}: expected 0 or a prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("image of `{0}` is not a linear form")]
    NonLinearImage(String),
    #[error("substitution matrix is singular")]
    SingularSubstitution,
    #[error("resource guard tripped: {0}")]
    ResourceGuard(String),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("component mismatch: {0}")]
    ComponentMismatch(String),
    #[error("polynomial is not numerical: {0}")]
    NonNumerical(String),
    #[error("wrong degree: {0}")]
    WrongDegree(String),
    #[error("radical mismatch: {0}")]
    RadicalMismatch(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("map is not surjective: {0}")]
    NotSurjective(String),
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("schema error in entry {entry}: {message}")]
    Schema { entry: String, message: String },
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
