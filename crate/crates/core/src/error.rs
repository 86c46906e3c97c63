use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("group size {0} is outside the supported range 1..={max}", max = crate::polyring::MAX_N)]
    UnsupportedSize(usize),

    #[error("the zero polynomial has no lowest-degree form")]
    ZeroPolynomial,

    #[error("operation requires homogeneous generators")]
    NotHomogeneous,

    #[error("determinant of a non-square {rows}x{cols} matrix")]
    NonSquare { rows: usize, cols: usize },

    /// Buchberger exceeded its iteration cap. Only a kernel bug can cause this.
    #[error("Gröbner basis computation exceeded {0} iterations")]
    IterationCap(usize),

    /// The eliminated initial ideal contains 1. `J_w` is always proper, so this
    /// signals an algebra bug.
    #[error("initial ideal is the unit ideal for w={0}")]
    UnitIdeal(String),

    #[error("tangent cone of w={w} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        w: String,
        found: usize,
        expected: usize,
    },

    #[error("w={w} has multiplicity {multiplicity} but the pattern criterion says smooth={smooth}")]
    SmoothnessMismatch {
        w: String,
        multiplicity: u64,
        smooth: bool,
    },

    #[error("record set incomplete: {0}")]
    IncompleteRecords(String),

    #[error("malformed record: {0}")]
    MalformedRecord(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("malformed reference table: {0}")]
    MalformedTable(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
