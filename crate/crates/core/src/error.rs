use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{num}/{den} is not in lowest terms: gcd({num}, {den}) = {gcd}")]
    NotCoprime { num: u64, den: u64, gcd: u64 },

    #[error("{num}/{den} is not a proper fraction: need 0 < r < m")]
    OutOfRange { num: u64, den: u64 },

    #[error("malformed fraction {0:?}: expected R/M")]
    Malformed(String),

    #[error("continued fraction needs at least one partial quotient")]
    EmptyExpansion,

    #[error("partial quotient a_{index} is zero")]
    ZeroQuotient { index: usize },

    #[error("[0;1] equals 1 and has no expansion inside (0, 1)")]
    UnitExpansion,

    #[error("continuant range a_{lo}..a_{hi} is out of bounds for a sequence of length {len}")]
    RangeOutOfBounds { lo: i64, hi: i64, len: usize },

    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("value does not fit in a 64-bit fraction")]
    Overflow,

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("{x} has no inverse modulo {m}")]
    NotInvertible { x: u64, m: u64 },

    #[error("residue vector needs at least one coordinate")]
    EmptyVector,

    #[error("coordinate {coord} is not a unit modulo {m}")]
    NotAUnit { coord: u64, m: u64 },

    #[error("index k = {k} is outside the open interval (0, {n}/2)")]
    BoundIndex { k: usize, n: usize },

    #[error("expansion must end in a partial quotient >= 2")]
    NonCanonical,

    #[error("prefix must have odd length >= 1, got length {0}")]
    BadPrefix(usize),

    #[error("suffix must be nonempty and end in a partial quotient >= 2")]
    BadSuffix,

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("term count must be positive")]
    ZeroTermCount,

    #[error("progression for a={a}, b={b}, c={c} yields no admissible points")]
    NoAdmissiblePoints { a: u64, b: u64, c: u64 },

    #[error("epsilon {epsilon} must be positive and below {limit} for k_max = {k_max}")]
    EpsilonTooLarge {
        epsilon: Box<BigRational>,
        limit: Box<BigRational>,
        k_max: u64,
    },

    #[error("invalid scan config: {0}")]
    InvalidConfig(String),

    #[error("height mismatch at m={m}, r={r}: brute force {brute}, cf formula {cf}")]
    Mismatch {
        m: u64,
        r: u64,
        brute: Box<BigRational>,
        cf: Box<BigRational>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
