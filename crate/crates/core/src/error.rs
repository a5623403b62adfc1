use thiserror::Error;

/// Every failure the library can report.
///
/// Variants fall into three families that the CLI maps onto exit codes:
/// structural rejections of the input algebra, hypothesis/precondition
/// failures, and I/O or parse faults.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not invertible")]
    Singular,

    #[error("JNotLeftCentral: [L, J] != 0 (bracket of {left} into J is nonzero)")]
    JNotLeftCentral { left: String },

    #[error("NotAutomorphism: {0}")]
    NotAutomorphism(String),

    #[error("NotHomLeibniz: {0}")]
    NotHomLeibniz(String),

    #[error("NotRegular: {0}")]
    NotRegular(String),

    #[error("DependentHBasis: the supplied H vectors are linearly dependent")]
    DependentHBasis,

    #[error("NotAbelian: [{left}, {right}] != 0 inside H")]
    NotAbelian { left: usize, right: usize },

    #[error("NotPhiStable: phi(H) != H")]
    NotPhiStable,

    #[error("NotSplit: eigenspaces over Q miss a subspace of dimension {}", uncovered.len())]
    NotSplit { uncovered: Vec<Vec<String>> },

    #[error("HNotMaximal: L_0 = {l0} ⊋ H")]
    HNotMaximal { l0: String },

    #[error("RootNotInLambda: {0}")]
    RootNotInLambda(String),

    #[error("ClassMismatch: {0}")]
    ClassMismatch(String),

    #[error("NotAClass: {0}")]
    NotAClass(String),

    #[error("NotSeparable: {0}")]
    NotSeparable(String),

    #[error("NotAnIdeal: {0}")]
    NotAnIdeal(String),

    #[error("HypothesisMissing: {0}")]
    HypothesisMissing(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("ParseError at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("IndexOutOfRange: {field}: index {index} >= {bound}")]
    IndexOutOfRange { field: String, index: usize, bound: usize },

    #[error("NonRational: {field}: {value:?}")]
    NonRational { field: String, value: String },

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// True for faults in reading or parsing input, as opposed to findings
    /// about the algebra itself.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::IndexOutOfRange { .. }
                | Error::NonRational { .. }
                | Error::Io(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
