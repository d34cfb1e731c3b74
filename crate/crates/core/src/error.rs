use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    /// Shape or schema violation located by a JSON pointer.
    #[error("malformed input at {pointer}: {message}")]
    Malformed { pointer: String, message: String },

    #[error("entries ({i},{j}) and ({j},{i}) are not negatives of each other")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("bracket has nonzero {part} part; a purely quadratic bracket is required")]
    NotQuadratic { part: &'static str },

    #[error("bracket has nonzero {part} part; a purely linear bracket is required")]
    NotLinear { part: &'static str },

    #[error("requires unital algebra")]
    NoUnit,

    #[error("invalid slot tag {0:?}; expected 12, 13 or 23")]
    InvalidSlot(String),

    #[error("extension does not vanish on symmetric tensors")]
    ExtensionNotVanishing,

    #[error("coordinate x^{index} is not a Casimir: {{x^{index}, x^{other}}} = {residual}")]
    NotCasimir {
        index: usize,
        other: usize,
        residual: String,
    },

    #[error("certification needs at least three distinct parameter values, got {0}")]
    TooFewPencilValues(usize),

    #[error("product of symmetric tensors is not symmetric")]
    NonSymmetricProduct,

    #[error("invalid Lie structure constants: {0}")]
    InvalidLieConstants(String),

    #[error("Lie algebra is not two-step nilpotent: [[e{0},e{1}],e{2}] != 0")]
    NotTwoStep(usize, usize, usize),

    #[error("unknown catalog key {0:?}")]
    UnknownCatalogKey(String),

    #[error("bad parameters for {key}: {message}")]
    BadParams { key: String, message: String },
}
