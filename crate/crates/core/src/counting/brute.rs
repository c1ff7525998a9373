//! Direct enumeration of `Z_q^m`.
//!
//! Points are visited in mixed-radix order with `x_1` outermost. Every column
//! keeps a running residue `x . s_j mod q`; stepping a coordinate by one adds
//! that coordinate's row to every residue, and a wrap from `q - 1` to `0` is
//! the same step, so no subtraction is ever needed.

use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arrangements::IntMatrix;
use crate::error::{Error, Result};

/// Default cap on the number of enumerated points.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

fn add_mod(a: u64, b: u64, q: u64) -> u64 {
    if a >= q - b {
        a - (q - b)
    } else {
        a + b
    }
}

fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

/// The matrix reduced mod `q`, row-major (`rows[i][j]` is entry `(i, j)`).
struct Reduced {
    q: u64,
    rows: Vec<Vec<u64>>,
}

impl Reduced {
    fn new(matrix: &IntMatrix, q: u64) -> Self {
        let modulus = BigInt::from(q);
        let rows = (0..matrix.rows())
            .map(|i| {
                (0..matrix.cols())
                    .map(|j| matrix.entry(i, j).mod_floor(&modulus).to_u64().expect("residue below q"))
                    .collect()
            })
            .collect();
        Self { q, rows }
    }

    /// Points of the complement with `x_1` in `first`, all coordinates in `0..q`.
    fn count_slab(&self, first: Range<u64>) -> u64 {
        let q = self.q;
        let m = self.rows.len();
        let n = self.rows[0].len();
        let mut total = 0u64;
        let mut acc = alloc::vec![0u64; n];
        let mut x = alloc::vec![0u64; m];
        for x1 in first {
            for (a, &s) in acc.iter_mut().zip(&self.rows[0]) {
                *a = mul_mod(x1, s, q);
            }
            x[1..].iter_mut().for_each(|v| *v = 0);
            'points: loop {
                if acc.iter().all(|&a| a != 0) {
                    total += 1;
                }
                // odometer over x_2..x_m, last coordinate fastest
                let mut i = m - 1;
                loop {
                    if i == 0 {
                        break 'points;
                    }
                    for (a, &s) in acc.iter_mut().zip(&self.rows[i]) {
                        *a = add_mod(*a, s, q);
                    }
                    x[i] += 1;
                    if x[i] < q {
                        continue 'points;
                    }
                    x[i] = 0;
                    i -= 1;
                }
            }
        }
        total
    }
}

fn check_budget(matrix: &IntMatrix, q: u64, budget: u64) -> Result<()> {
    if q == 0 {
        return Err(Error::ZeroModulus);
    }
    let needed = (q as u128).checked_pow(matrix.rows() as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// `|M_S(q)|` by enumerating all `q^m` points, refusing when `q^m`
/// exceeds the default budget of `10^8` points.
pub fn brute_force_count(matrix: &IntMatrix, q: u64) -> Result<BigInt> {
    brute_force_count_with_budget(matrix, q, DEFAULT_BUDGET)
}

pub fn brute_force_count_with_budget(matrix: &IntMatrix, q: u64, budget: u64) -> Result<BigInt> {
    check_budget(matrix, q, budget)?;
    Ok(BigInt::from(Reduced::new(matrix, q).count_slab(0..q)))
}

/// Complement points whose first coordinate lies in `first` (clamped to
/// `0..q`). Summing over a partition of `0..q` gives the full count.
pub fn brute_force_count_slab(matrix: &IntMatrix, q: u64, first: Range<u64>, budget: u64) -> Result<u64> {
    check_budget(matrix, q, budget)?;
    let first = first.start.min(q)..first.end.min(q);
    Ok(Reduced::new(matrix, q).count_slab(first))
}
