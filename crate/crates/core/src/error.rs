use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be at least 1")]
    ZeroK,

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(usize),

    #[error("parts must be weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),

    #[error("cell ({row},{col}) lies outside the diagram")]
    CellOutside { row: usize, col: usize },

    #[error("({inner}) is not contained in ({outer})")]
    NotContained { inner: String, outer: String },

    #[error("residue {letter} is out of range for k = {k}")]
    ResidueOutOfRange { letter: usize, k: usize },

    #[error("({0}) is not {1}-bounded")]
    NotBounded(String, usize),

    #[error("({0}) is not a {1}-core")]
    NotCore(String, usize),

    #[error("support covers every residue in [0,{0}]; no cyclic interval exists")]
    FullSupport(usize),

    #[error("r = {r} is outside the admissible range {min}..={k}")]
    DegreeOutOfRange { r: usize, min: usize, k: usize },

    #[error("word {0} is not a weak hook word whose distinguished letter sits on one side only")]
    TauIneligible(String),

    #[error("word {0} is not an anti-weak hook word")]
    NotAntiHook(String),

    #[error("word {0} is not reduced")]
    NotReduced(String),

    #[error("parse error: {0}")]
    Parse(String),
}
