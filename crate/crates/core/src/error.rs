use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),

    #[error("carrier mismatch: {left} points vs {right} points")]
    CarrierMismatch { left: usize, right: usize },

    #[error("{what} needs size {size}, above the enumeration bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("space is not T0: points {0} and {1} are never separated")]
    NotT0(usize, usize),

    #[error("space is not intersection-closed: meet of two generators is missing from the stack")]
    NotIntersectionClosed,

    #[error("map is not uniformly continuous: preimage of generator `{generator}` is not in the domain stack")]
    NotUniformlyContinuous { generator: String },

    #[error("codomain is not complete")]
    Incomplete,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
