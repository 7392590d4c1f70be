use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("complex is not pure of dimension {expected}: facet of dimension {found}")]
    Purity { expected: usize, found: isize },

    #[error("shape mismatch: expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("cap exceeded: {what} needs {needed}, limit is {limit}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("precondition failed: {0}")]
    Precondition(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
