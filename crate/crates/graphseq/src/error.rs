use thiserror::Error;

/// Errors surfaced by sequence construction, parsing, and the witness and
/// sweep drivers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A degree sequence must contain at least one entry.
    #[error("empty input: a degree sequence needs at least one entry")]
    EmptyInput,

    /// Entries must be positive integers.
    #[error("nonpositive entry {value}: all entries must be >= 1")]
    NonpositiveEntry { value: i64 },

    /// Entries above this size would make exhaustive checks meaningless and
    /// risk overflow in downstream arithmetic.
    #[error("entry {value} exceeds the supported maximum {max}")]
    EntryTooLarge { value: i64, max: u32 },

    /// Sequence length cap, for the same reason as the entry cap.
    #[error("sequence length {len} exceeds the supported maximum {max}")]
    TooLong { len: usize, max: usize },

    /// A token in the text form of a sequence could not be understood.
    #[error("cannot parse sequence token {token:?}")]
    Parse { token: String },

    /// Parameters fall outside the domain a routine is defined on.
    #[error("parameters out of domain: {detail}")]
    OutOfDomain { detail: String },

    /// Witness construction was asked for a triple that the sharp bound
    /// already certifies; no witness exists there.
    #[error("no witness: the sharp bound holds for a={a}, b={b}, n={n}")]
    BoundSatisfied { a: u32, b: u32, n: u32 },

    /// An internal consistency check failed. Seeing this is a bug.
    #[error("internal guard violated: {detail}")]
    InternalGuard { detail: String },

    /// Brute-force enumeration is only feasible for very small sizes.
    #[error("brute force over n={n} vertices is not supported (max {max})")]
    LimitExceeded { n: usize, max: usize },

    /// An edge list did not describe a simple graph on the declared vertices.
    #[error("invalid graph: {detail}")]
    InvalidGraph { detail: String },
}
