use thiserror::Error;

/// Everything that can go wrong while building an arrangement or counting
/// its complement.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty arrangement")]
    EmptyArrangement,
    #[error("zero column at index {0}")]
    ZeroColumn(usize),
    #[error("matrix shape mismatch: expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("divisibility chain broken: s_{} = {} does not divide s_{} = {}", .at + 1, .lower, .at, .upper)]
    InvalidChain { at: usize, lower: u64, upper: u64 },
    #[error("parity prefix broken at s_{}: expected {}", .at, if *.want_even { "even" } else { "odd" })]
    InvalidParity { at: usize, want_even: bool },
    #[error("invalid deformation: {0}")]
    InvalidSpec(&'static str),
    #[error("column index {index} out of range for {cols} columns")]
    IndexOutOfRange { index: usize, cols: usize },
    #[error("too many columns: {cols} > {limit} without a subset cap")]
    TooManyColumns { cols: usize, limit: usize },
    #[error("enumeration budget exceeded: {needed} points > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("residue index {0} is not a positive integer")]
    InvalidResidue(u64),
    #[error("specialization requires t = m (t = {t}, m = {m})")]
    SpecMismatch { t: usize, m: usize },
    #[error("interpolated constituent k={0} has non-integral coefficients")]
    NotIntegral(u64),
    #[error("interpolated constituent k={0} is not monic of degree {1}")]
    NotMonic(u64, usize),
    #[error("modulus q must be positive")]
    ZeroModulus,
}

pub type Result<T> = core::result::Result<T, Error>;
