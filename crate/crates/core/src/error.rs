use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("not a latin square: {0}")]
    NotLatinSquare(String),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("bound exceeded: {what} ({value} > {limit})")]
    BoundExceeded { what: String, value: usize, limit: usize },
    #[error("subgroup is not normal: {g}*{k}*{g}^-1 leaves it")]
    NotNormal { g: usize, k: usize },
    #[error("not abelian: {a}*{b} != {b}*{a}")]
    NotAbelian { a: usize, b: usize },
    #[error("cochain degree {0} is not supported")]
    DegreeUnsupported(usize),
    #[error("delta_S({g},{h}) is not conjugation by omega({g},{h})")]
    CompatibilityViolated { g: usize, h: usize },
    #[error("d_S omega is nontrivial at ({0},{1},{2})")]
    NotACocycle(usize, usize, usize),
    #[error("not a homomorphism at ({a},{b})")]
    NotAHomomorphism { a: usize, b: usize },
    #[error("outer class assignment is not multiplicative at ({a},{b})")]
    NotAHomomorphismOnClasses { a: usize, b: usize },
    #[error("delta_S({g},{h}) is not inner")]
    NotInner { g: usize, h: usize },
    #[error("kernel mismatch: {0}")]
    KernelMismatch(String),
    #[error("module mismatch: {0}")]
    ModuleMismatch(String),
    #[error("pair is not compatible with the outer action")]
    NotCompatible,
    #[error("action of {0} does not stabilize the extension class")]
    NotStabilizing(usize),
    #[error("invalid action data: {0}")]
    InvalidActionData(String),
    #[error("schema mismatch: expected {expected}, found {found}")]
    SchemaMismatch { expected: String, found: String },
    #[error("line {line}: {msg}")]
    MalformedDocument { line: usize, msg: String },
    #[error("line {line}: cochain is not normalized")]
    NotNormalized { line: usize },
    #[error("unknown group {0}")]
    UnknownGroup(String),
    #[error("{0}")]
    Io(String),
}

impl Error {
    pub fn bound(what: impl Into<String>, value: usize, limit: usize) -> Self {
        Error::BoundExceeded { what: what.into(), value, limit }
    }

    pub fn doc(line: usize, msg: impl Into<String>) -> Self {
        Error::MalformedDocument { line, msg: msg.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
