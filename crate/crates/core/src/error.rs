use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("wrong deficiency: {relations} relation(s) for {generators} generator(s), expected {expected}")]
    WrongDeficiency {
        generators: usize,
        relations: usize,
        expected: usize,
    },

    #[error("relation {index} is unbalanced under the abelianization: {lhs} != {rhs}")]
    Unbalanced { index: usize, lhs: i64, rhs: i64 },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid number field: {0}")]
    InvalidField(String),

    #[error("embedding hint is ambiguous or far from every root: {0}")]
    BadEmbeddingHint(String),

    #[error("bad reference volume `{0}`")]
    BadReference(String),

    #[error("Newton refinement of the embedding root did not converge")]
    NewtonFailed,

    #[error("precision must be at least 64 bits, got {0}")]
    Precision(usize),

    #[error("matrix for generator `{generator}` has determinant {det}, expected 1")]
    NotSl2 { generator: char, det: String },

    #[error("representation does not satisfy relation(s) {0:?}")]
    RelationCheck(Vec<usize>),

    #[error("no admissible column: det Phi(x_j - 1) vanishes identically for every generator")]
    NoAdmissibleColumn,

    #[error("column `{0}` is not admissible: det Phi(x - 1) vanishes identically")]
    InadmissibleColumn(char),

    #[error("n = {n}: expected a simple zero at t = 1, found order {order}")]
    SimpleZeroViolation { n: usize, order: usize },

    #[error("n = {n}: reduced denominator vanishes at t = 1")]
    DenominatorVanishes { n: usize },

    #[error("base value for n = {n} is zero")]
    ZeroBase { n: usize },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Pipeline stage a failure belongs to, for CLI diagnostics.
    pub fn stage(&self) -> &'static str {
        match self {
            Error::Syntax { .. }
            | Error::WrongDeficiency { .. }
            | Error::Unbalanced { .. }
            | Error::UnknownGenerator(_)
            | Error::InvalidField(_)
            | Error::BadEmbeddingHint(_)
            | Error::BadReference(_)
            | Error::NewtonFailed
            | Error::Precision(_) => "parse",
            Error::NotSl2 { .. } | Error::RelationCheck(_) => "relation check",
            Error::NoAdmissibleColumn | Error::InadmissibleColumn(_) => "no admissible column",
            Error::SimpleZeroViolation { .. } => "simple-zero violation",
            Error::DenominatorVanishes { .. } | Error::ZeroBase { .. } => "evaluation at t = 1",
            Error::DivisionByZero | Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
