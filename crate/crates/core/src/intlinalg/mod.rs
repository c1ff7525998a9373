//! Exact integer linear algebra: elementary divisors, column submatrices and
//! the lcm period `rho_S`.

mod smith;
pub mod subsets;

use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::arrangements::{DeformSpec, Deformation, IntMatrix};
use crate::error::{Error, Result};

pub use smith::{smith_divisors, smith_divisors_bigint, ElementaryDivisors};

/// Largest column count for which all `2^n - 1` subsets are enumerated
/// without an explicit cap.
pub const FULL_ENUMERATION_LIMIT: usize = 24;

/// Columns of `matrix` indexed by `indices` (0-based), in increasing index
/// order. Duplicate indices are collapsed.
pub fn column_submatrix(matrix: &IntMatrix, indices: &[usize]) -> Result<IntMatrix> {
    let mut idx = indices.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if let Some(&bad) = idx.iter().find(|&&j| j >= matrix.cols()) {
        return Err(Error::IndexOutOfRange { index: bad, cols: matrix.cols() });
    }
    let cols = idx.iter().map(|&j| matrix.column(j).to_vec()).collect();
    IntMatrix::from_columns(matrix.rows(), cols)
}

/// Computes elementary divisors of column subsets of one matrix, reusing a
/// machine-word copy of the entries when they fit.
pub struct SubsetSnf<'a> {
    matrix: &'a IntMatrix,
    small: Option<Vec<Vec<i64>>>,
}

impl<'a> SubsetSnf<'a> {
    pub fn new(matrix: &'a IntMatrix) -> Self {
        let small = matrix
            .columns()
            .map(|c| c.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<i64>>>())
            .collect::<Option<Vec<_>>>();
        Self { matrix, small }
    }

    pub fn matrix(&self) -> &IntMatrix {
        self.matrix
    }

    /// Elementary divisors of `S_J` for sorted 0-based `subset`.
    pub fn divisors(&self, subset: &[usize]) -> ElementaryDivisors {
        match &self.small {
            Some(cols) => {
                let picked: Vec<&[i64]> = subset.iter().map(|&j| cols[j].as_slice()).collect();
                smith::divisors_of_small_columns(self.matrix.rows(), &picked)
            }
            None => smith::divisors_of_columns(self.matrix.rows(), subset.iter().map(|&j| self.matrix.column(j))),
        }
    }
}

/// Result of [`lcm_period`]. When the enumeration was capped the value is
/// only known to divide the true lcm period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Period {
    pub rho: BigInt,
    pub exhaustive: bool,
}

impl Period {
    pub fn is_lower_bound(&self) -> bool {
        !self.exhaustive
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.rho.to_u64()
    }
}

/// `rho_S`: lcm of the last elementary divisor over nonempty column subsets.
///
/// Without a cap all subsets are visited, which needs
/// `n <= FULL_ENUMERATION_LIMIT`. With `max_subset_size = Some(c)` only
/// subsets of size `<= c` are visited and the result is flagged as a lower
/// bound unless `c >= n`.
pub fn lcm_period(matrix: &IntMatrix, max_subset_size: Option<usize>) -> Result<Period> {
    let n = matrix.cols();
    let cap = match max_subset_size {
        None if n > FULL_ENUMERATION_LIMIT => {
            return Err(Error::TooManyColumns { cols: n, limit: FULL_ENUMERATION_LIMIT })
        }
        None => n,
        Some(c) => c.min(n),
    };
    let snf = SubsetSnf::new(matrix);
    let mut rho = BigInt::one();
    subsets::for_each_subset(n, cap, |subset| {
        if let Some(last) = snf.divisors(subset).last() {
            rho = rho.lcm(last);
        }
    });
    Ok(Period { rho, exhaustive: cap == n })
}

/// Partial lcm over the subsets whose bitmasks lie in `masks` (bit `j` set
/// means column `j` is included). Combining partial results with `lcm`
/// over a partition of `1..2^n` gives `rho_S`.
pub fn lcm_over_masks(matrix: &IntMatrix, masks: Range<u64>) -> BigInt {
    let snf = SubsetSnf::new(matrix);
    let mut rho = BigInt::one();
    let mut idx = Vec::new();
    for mask in masks.filter(|&m| m != 0) {
        subsets::mask_indices(mask, &mut idx);
        if let Some(last) = snf.divisors(&idx).last() {
            rho = rho.lcm(last);
        }
    }
    rho
}

/// The lcm period of the deformation families in closed form:
/// `A_m(s)` has period `s_1` (1 when `t = 0`), `D_m(s)` has `lcm(s_1, 2)`
/// (2 when `t = 0`).
pub fn known_period(spec: &DeformSpec, family: Deformation) -> u64 {
    match (family, spec.s().first()) {
        (Deformation::A, None) => 1,
        (Deformation::A, Some(&s1)) => s1,
        (Deformation::D, None) => 2,
        (Deformation::D, Some(&s1)) => s1.lcm(&2),
    }
}
