use thiserror::Error;

/// Errors raised by constructors and conversions.
///
/// Predicates never return these for mathematical failures; those are
/// reported through [`crate::report::CheckReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must be non-empty")]
    EmptyCarrier,

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("element {value} is out of range for a carrier of size {n}")]
    OutOfRange { value: usize, n: usize },

    #[error("map is not invertible: {x1} and {x2} both map to {image}")]
    NotInvertible { x1: usize, x2: usize, image: usize },

    #[error("row {row} is not a bijection: columns {y1} and {y2} both give {image}")]
    DegenerateRow {
        row: usize,
        y1: usize,
        y2: usize,
        image: usize,
    },

    #[error("alpha is not an endomorphism: alpha({x}*{y}) != alpha({x})*alpha({y})")]
    NotEndomorphism { x: usize, y: usize },

    #[error("alpha is not compatible with r at ({x}, {y})")]
    NotHomCompatible { x: usize, y: usize },

    #[error("structure is not involutive: r(r({x}, {y})) != ({x}, {y})")]
    NotInvolutive { x: usize, y: usize },

    #[error(
        "Delta is not injective: Delta({}, {}) = Delta({}, {})",
        first.0, first.1, second.0, second.1
    )]
    DeltaCollision {
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("{0}")]
    Domain(String),

    #[error("independent computations disagree: {0}")]
    RouteMismatch(String),

    #[error("invalid document: {0}")]
    Parse(String),

    #[error("order {n} exceeds the enumeration cap {cap} (roughly {estimate} candidate structures)")]
    OverCap { n: usize, cap: usize, estimate: String },
}

impl Error {
    /// The elements that exhibit a mathematical failure, if any.
    pub fn witness(&self) -> Option<Vec<usize>> {
        match *self {
            Error::NotInvertible { x1, x2, .. } => Some(vec![x1, x2]),
            Error::DegenerateRow { row, y1, y2, .. } => Some(vec![row, y1, y2]),
            Error::NotEndomorphism { x, y } | Error::NotHomCompatible { x, y } | Error::NotInvolutive { x, y } => {
                Some(vec![x, y])
            }
            Error::DeltaCollision { first, second } => Some(vec![first.0, first.1, second.0, second.1]),
            _ => None,
        }
    }

    /// Whether the error reports a property of the input structure rather
    /// than malformed input or a refused request.
    pub fn is_mathematical(&self) -> bool {
        !matches!(
            self,
            Error::EmptyCarrier
                | Error::SizeMismatch { .. }
                | Error::OutOfRange { .. }
                | Error::Parse(_)
                | Error::OverCap { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
