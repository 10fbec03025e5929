use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRangeVertex { vertex: usize, n: usize },
    #[error("graph is disconnected ({components} components); distances are undefined")]
    Disconnected { components: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("malformed input at line {line}: {message}")]
    MalformedInput { line: usize, message: String },

    #[error("integer overflow in polynomial arithmetic")]
    IntegerOverflow,

    #[error("colouring covers {found} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid colouring: {0}")]
    InvalidColouring(String),
    #[error("colouring is not proper: edge ({0}, {1}) is monochromatic")]
    ImproperColouring(usize, usize),
    #[error("graph has {n} vertices, exact search limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("theorem {theorem} applies to {expected} graphs, not {found}")]
    WrongFamily {
        theorem: &'static str,
        expected: &'static str,
        found: &'static str,
    },
    #[error("theorem {theorem} yields the non-integer coefficient {numerator}/{denominator} at n = {n}")]
    NonIntegerCoefficient {
        theorem: &'static str,
        n: usize,
        numerator: i64,
        denominator: i64,
    },
}
