use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("group spec error at position {pos}: {msg}")]
    Group { pos: usize, msg: String },
    #[error("matrix spec error: {0}")]
    Matrix(String),
    #[error("element spec error: {0}")]
    Element(String),
    #[error("invalid sign `{0}`, expected + or -")]
    Sign(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("group order {order} exceeds budget {budget}")]
    BudgetExceeded { order: usize, budget: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("entry ({row},{col}) = {value} is not well defined on Z{m_row} x Z{m_col}")]
    IllDefined {
        row: usize,
        col: usize,
        value: String,
        m_row: u64,
        m_col: u64,
    },

    #[error("homomorphism column {col} is not killed by the generator order {order}")]
    IllDefinedHom { col: usize, order: u64 },

    #[error("element {0} does not lie in the group")]
    NotAnElement(String),

    #[error("set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup is not contained in the radical of the form")]
    NotInRadical,

    #[error("bicharacter is not symmetric: chi({a},{b}) != chi({b},{a})")]
    NotSymmetric { a: String, b: String },

    #[error("bicharacter is degenerate: {kernel} pairs trivially with everything")]
    Degenerate { kernel: String },

    #[error("coboundary precondition violated: {0}")]
    CoboundaryPrecondition(String),

    #[error("Gauss sum check failed: sum = {re} + {im}i over {n} values, expected magnitude {expected}")]
    GaussSign {
        re: f64,
        im: f64,
        n: usize,
        expected: f64,
    },

    #[error("sigma does not square to the identity on E ({0})")]
    SigmaNotInvolution(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Internal assertions (as opposed to bad input).
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::GaussSign { .. } | Error::SigmaNotInvolution(_) | Error::Inconsistency(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
