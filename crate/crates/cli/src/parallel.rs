//! Rayon-partitioned versions of the enumeration-heavy operations. Results
//! are combined with associative operations (sum, lcm, table merge), so the
//! output does not depend on how the work is split.

use num_integer::Integer;
use num_traits::One;
use quasiarr_core::counting::{brute_force_count_slab, DivisorTable};
use quasiarr_core::intlinalg::{lcm_over_masks, lcm_period, Period, FULL_ENUMERATION_LIMIT};
use quasiarr_core::{BigInt, Error, IntMatrix};
use rayon::prelude::*;

const MASK_CHUNK: u64 = 1 << 12;

fn chunks(total: u64, size: u64) -> impl ParallelIterator<Item = std::ops::Range<u64>> {
    (0..total.div_ceil(size)).into_par_iter().map(move |c| c * size..((c + 1) * size).min(total))
}

/// Same contract as [`lcm_period`]; the uncapped case is split over
/// subset bitmasks.
pub fn par_lcm_period(matrix: &IntMatrix, max_subset_size: Option<usize>) -> Result<Period, Error> {
    let n = matrix.cols();
    if max_subset_size.is_some() || n > FULL_ENUMERATION_LIMIT {
        return lcm_period(matrix, max_subset_size);
    }
    let rho = chunks(1u64 << n, MASK_CHUNK)
        .map(|r| lcm_over_masks(matrix, r))
        .reduce(BigInt::one, |a, b| a.lcm(&b));
    Ok(Period { rho, exhaustive: true })
}

pub fn par_divisor_table(matrix: &IntMatrix) -> Result<DivisorTable, Error> {
    let n = matrix.cols();
    if n > FULL_ENUMERATION_LIMIT {
        return Err(Error::TooManyColumns { cols: n, limit: FULL_ENUMERATION_LIMIT });
    }
    let mut parts: Vec<DivisorTable> = chunks(1u64 << n, MASK_CHUNK)
        .map(|r| DivisorTable::from_masks(matrix, r))
        .collect();
    let mut table = parts.remove(0);
    for p in parts {
        table.merge(p);
    }
    Ok(table)
}

/// Brute-force count split along the first coordinate.
pub fn par_brute_force_count(matrix: &IntMatrix, q: u64, budget: u64) -> Result<BigInt, Error> {
    // validates q and the budget once before fanning out
    brute_force_count_slab(matrix, q, 0..0, budget)?;
    let per = q.div_ceil(rayon::current_num_threads() as u64 * 4).max(1);
    let total = chunks(q, per)
        .map(|r| brute_force_count_slab(matrix, q, r, budget).expect("validated above"))
        .sum::<u64>();
    Ok(BigInt::from(total))
}
