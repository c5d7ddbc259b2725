use alloc::string::String;

/// Errors raised by the algebra and graph routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("quaternion component is not finite")]
    NonFinite,

    #[error("division by a quaternion of norm {norm:e}")]
    ZeroDivisor { norm: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("matrix size {size} exceeds the configured cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Hermitian determinant has imaginary residue {residue:e}")]
    NotReal { residue: f64 },

    #[error("row and column determinants disagree by {spread:e}")]
    Disagreement { spread: f64 },

    #[error("determinantal ranks disagree: rank AA* = {left}, rank A*A = {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("Laplacian constructions disagree by {deviation:e}")]
    RouteMismatch { deviation: f64 },

    #[error("vertices {from} and {to} are not adjacent")]
    NotAWalk { from: usize, to: usize },

    #[error("Laplacian entry ({row}, {col}) is zero")]
    ZeroEntry { row: usize, col: usize },

    #[error("enumeration needs {needed} items, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("edge {edge} has gain outside {{±1, ±i, ±j, ±k}}")]
    GainsNotInLipschitzUnits { edge: usize },

    #[error("edge {edge} has non-unit gain (norm {norm})")]
    NonUnitGain { edge: usize, norm: f64 },

    #[error("edge {edge} is a self-loop")]
    SelfLoop { edge: usize },

    #[error("edge {edge} duplicates an existing edge between the same vertices")]
    MultiEdge { edge: usize },

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("edge {edge} has no endpoint among the selected vertices")]
    FreeLoop { edge: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
