use alloc::string::String;

/// Errors raised by the algebra and rank-function layers.
///
/// Verification failures are never errors; they are reported through
/// [`crate::report::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },

    #[error("{op} is not supported over {ring}")]
    UnsupportedRing { op: &'static str, ring: String },

    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("map is not well defined: some relation of the domain is not sent into the relations of the codomain")]
    IllDefinedMap,

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("directed system is not compatible: {0}")]
    Incompatible(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("undefined arithmetic on +inf")]
    InfiniteArithmetic,
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn ring_mismatch(expected: &crate::Ring, found: &crate::Ring) -> Error {
    use alloc::string::ToString;
    Error::RingMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

pub(crate) fn shape(op: &'static str, detail: impl Into<String>) -> Error {
    Error::ShapeMismatch {
        op,
        detail: detail.into(),
    }
}
