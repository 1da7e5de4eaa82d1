use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("vertex set {0:?} is not independent")]
    NotIndependent(Vec<String>),
    #[error("graph has an isolated vertex `{0}`")]
    IsolatedVertex(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ambient variable sets differ")]
    AmbientMismatch,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("zero ideal not allowed here")]
    ZeroIdeal,
    #[error("unit ideal not allowed here")]
    UnitIdeal,
    #[error("ideal is not generated in a single degree")]
    NotSingleDegree,
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<String>),
    #[error("void complex not allowed here")]
    VoidComplex,
    #[error("empty Betti table")]
    EmptyTable,
    #[error("exponent overflow")]
    Overflow,
    #[error("{what} exceeds the size cap ({limit})")]
    SizeCap { what: &'static str, limit: usize },
    #[error("`{0}` is not a prime")]
    NotPrime(u64),
    #[error("{0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
