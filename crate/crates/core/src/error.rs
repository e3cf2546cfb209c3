use thiserror::Error;

/// Errors raised by the toolkit.
///
/// `NotPolynomial` is deliberately absent: a character that fails to expand
/// to a polynomial is an ordinary value (see [`crate::polyalg::Expansion`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the inputs of an operation failed.
    #[error("domain error in `{field}`: {reason}")]
    Domain { field: String, reason: String },

    /// Loaded data violated one of its structural invariants.
    #[error("invalid input: invariant `{invariant}` violated ({detail})")]
    Invariant {
        invariant: &'static str,
        detail: String,
    },

    /// A Hecke addition produced data that is no longer stable.
    #[error("hecke addition at `{point}` (k = {k}) yields an unstable chain")]
    UnstableResult { point: String, k: usize },

    /// The requested computation exceeds a configured size cap.
    #[error("resource limit: {what} has size {size}, cap is {cap}")]
    Resource {
        what: &'static str,
        size: String,
        cap: u64,
    },

    /// The fixed-point type has no implemented multiplicity formula.
    #[error("unsupported fixed-point type `{0}`")]
    Unsupported(String),

    /// A mathematical guarantee failed; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn domain(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Domain {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub fn invariant(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            invariant,
            detail: detail.into(),
        }
    }

    /// Short stable name used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "DomainError",
            Error::Invariant { .. } => "InvariantError",
            Error::UnstableResult { .. } => "UnstableResult",
            Error::Resource { .. } => "ResourceError",
            Error::Unsupported(_) => "UnsupportedType",
            Error::Internal(_) => "InternalError",
        }
    }

    /// The offending field or invariant, when one is known.
    pub fn field(&self) -> Option<&str> {
        match self {
            Error::Domain { field, .. } => Some(field),
            Error::Invariant { invariant, .. } => Some(invariant),
            Error::UnstableResult { point, .. } => Some(point),
            Error::Resource { what, .. } => Some(what),
            Error::Unsupported(t) => Some(t),
            Error::Internal(_) => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
