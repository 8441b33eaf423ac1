use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An element or certificate does not belong to the group it was paired with.
    #[error("domain error: {0}")]
    Domain(String),

    /// A constructor hypothesis does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A configured enumeration or search bound would be exceeded.
    #[error("{what} of {requested} exceeds the bound of {bound}")]
    Resource {
        what: &'static str,
        requested: u64,
        bound: u64,
    },

    #[error("cannot parse group descriptor {input:?}: {reason} (expected Z<n>, D<2n>, Q<4m> or factors joined by 'x' such as Z3xZ6)")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn check_bound(what: &'static str, requested: u64, bound: u64) -> Result<()> {
        if requested > bound {
            Err(Error::Resource { what, requested, bound })
        } else {
            Ok(())
        }
    }
}
