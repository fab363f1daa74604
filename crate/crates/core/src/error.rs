use thiserror::Error;

/// Errors raised while building or evaluating representation data.
///
/// Relation violations are never errors: they are reported as content of a
/// [`crate::report::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative radicand {0} under a square root")]
    NegativeRadicand(String),

    #[error("cannot factor {value}: no divisor found below trial bound {bound}")]
    FactorizationBound { value: String, bound: u64 },

    #[error("radicand {0} does not fit in 64 bits")]
    RadicandOverflow(String),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("malformed pattern shape: {0}")]
    Shape(String),

    #[error("top row {top:?} violates the ordering/hook condition")]
    TopRow { top: Vec<i64> },

    #[error("singular isoscalar factor {formula} (k={k}, q={q:?}, row {row}): {detail}")]
    SingularCoefficient {
        formula: &'static str,
        k: usize,
        q: Option<usize>,
        row: usize,
        detail: String,
    },

    #[error("singular reduced matrix element G_{k}{top:?}: {detail}")]
    SingularReducedElement {
        k: usize,
        top: Vec<i64>,
        detail: String,
    },

    #[error("index {index} out of range 1..={max} for {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("signature mismatch between operators")]
    SignatureMismatch,

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("cannot parse generator `{0}` (expected e.g. f1+, b2-)")]
    GeneratorSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
