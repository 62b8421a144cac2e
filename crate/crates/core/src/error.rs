use thiserror::Error;

use crate::poset::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a poset needs at least one element")]
    EmptyPoset,

    #[error("element label {label} is outside 1..={size}")]
    Label { label: Element, size: usize },

    #[error("cover relation has a directed cycle through element {0}")]
    Cycle(Element),

    #[error("{0} is not a maximal chain of the poset")]
    NotMaximalChain(String),

    #[error("the chain family is empty")]
    EmptyFamily,

    #[error("the two chains are equal")]
    EqualChains,

    #[error("invalid witness: {0}")]
    Witness(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("{count} maximal chains exceed the cap of {cap}")]
    CapExceeded { count: usize, cap: usize },

    #[error("family {0} is not closed")]
    NotClosed(String),

    #[error("{0} is not a proper subfamily of {1}")]
    NotNested(String, String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("no weight given for element {0}")]
    MissingWeight(Element),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
