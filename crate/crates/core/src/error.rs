use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("not a plane partition: cell ({row},{col}) = {value} exceeds {neighbor} = {bound}")]
    NotMonotone {
        row: usize,
        col: usize,
        value: u32,
        neighbor: &'static str,
        bound: u32,
    },

    #[error("parts are not weakly decreasing positive integers: {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("invalid box dimensions {a}x{b}x{c}")]
    InvalidBox { a: usize, b: usize, c: u32 },

    #[error("object does not fit in the {a}x{b}x{c} box")]
    DoesNotFit { a: usize, b: usize, c: u32 },

    #[error("cube set is not downward closed: ({0},{1},{2}) is missing a predecessor")]
    NotDownwardClosed(usize, usize, u32),

    #[error("symmetry class id {0} is not in 1..=10")]
    InvalidClass(u8),

    #[error("invalid dimensions for class {class}: {msg}")]
    InvalidDims { class: u8, msg: String },

    #[error("class {class} has no product formula for weight {weight}")]
    InvalidWeight { class: u8, weight: String },

    #[error("quotient is not a polynomial (nonzero remainder while dividing by {divisor})")]
    NonPolynomialQuotient { divisor: String },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid path family: {0}")]
    InvalidPathFamily(String),

    #[error("invalid tiling: {0}")]
    InvalidTiling(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("graph admits no Kasteleyn signing: {0}")]
    NotSignable(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid monotone triangle: {0}")]
    InvalidTriangle(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
