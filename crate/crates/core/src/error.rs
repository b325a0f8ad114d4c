use thiserror::Error;

/// Errors raised by the discretisation, codec, algebra and capacity routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid qubit: {0}")]
    InvalidQubit(String),

    #[error("granularity must be at least 1")]
    ZeroGranularity,

    #[error("coarsening can only decrease granularity (L = {from}, requested {to})")]
    CoarsenUp { from: u64, to: u64 },

    #[error("rational cosine {0} lies outside [-1, 1]")]
    CosineOutOfRange(String),

    #[error("direction is not a unit vector (|d|^2 = {0})")]
    NotUnit(f64),

    #[error("bit-string encoding needs an even length, got {0}")]
    OddLength(usize),

    #[error("entry {0} is not +1 or -1")]
    InvalidEntry(i64),

    #[error("bit string must be non-empty")]
    EmptyBitString,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("not a codeword: no cyclic shift of a contiguous +1 block reproduces the string")]
    NotCodeword,

    #[error("m = {m} out of range for L = {l}")]
    WeightOutOfRange { m: u64, l: u64 },

    #[error("not a permutation: {0}")]
    NotBijective(String),

    #[error("L = {l} must be divisible by {divisor}")]
    Divisibility { l: usize, divisor: usize },

    #[error("depth {0} is outside the supported range")]
    DepthOutOfRange(u32),

    #[error("angle tree has {got} nodes, expected {expected}")]
    TreeShape { expected: usize, got: usize },

    #[error("state vectors have different dimensions ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("bad experiment parameters: {0}")]
    Experiment(String),

    #[error("invalid number {0:?}")]
    Parse(String),

    #[error("physical quantity must be positive: {0}")]
    NonPositive(&'static str),

    #[error("constants file: {0}")]
    Constants(String),
}

pub type Result<T> = std::result::Result<T, Error>;
