//! Inclusion-exclusion over column subsets using elementary divisors.
//!
//! For a subset `J` the solutions of `x S_J ≡ 0 (mod q)` number
//! `q^(m - l(J)) * prod_i gcd(e_{J,i}, q)`, so
//! `|M_S(q)| = sum_J (-1)^|J| q^(m - l(J)) prod_i gcd(e_{J,i}, q)`.
//! Subsets with the same divisor chain contribute the same term, so the
//! table stores one signed multiplicity per distinct chain and can be
//! evaluated at many `q` cheaply.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::arrangements::IntMatrix;
use crate::error::{Error, Result};
use crate::intlinalg::{subsets, SubsetSnf, FULL_ENUMERATION_LIMIT};

/// Signed multiplicities of the divisor chains of all column subsets
/// (the empty subset included, with the empty chain).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    rows: usize,
    terms: BTreeMap<Vec<BigInt>, i64>,
}

impl DivisorTable {
    /// Full table over all `2^n` subsets; `n <= 24`.
    pub fn build(matrix: &IntMatrix) -> Result<Self> {
        let n = matrix.cols();
        if n > FULL_ENUMERATION_LIMIT {
            return Err(Error::TooManyColumns { cols: n, limit: FULL_ENUMERATION_LIMIT });
        }
        Ok(Self::from_masks(matrix, 0..1u64 << n))
    }

    /// Partial table over the subsets with bitmask in `masks`; mask 0 is the
    /// empty subset. Tables for a partition of `0..2^n` merge into the full one.
    pub fn from_masks(matrix: &IntMatrix, masks: Range<u64>) -> Self {
        let snf = SubsetSnf::new(matrix);
        let mut table = Self { rows: matrix.rows(), terms: BTreeMap::new() };
        let mut idx = Vec::new();
        for mask in masks {
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            let chain = if mask == 0 {
                Vec::new()
            } else {
                subsets::mask_indices(mask, &mut idx);
                snf.divisors(&idx).into_divisors()
            };
            *table.terms.entry(chain).or_insert(0) += sign;
        }
        table.terms.retain(|_, v| *v != 0);
        table
    }

    pub fn merge(&mut self, other: Self) {
        debug_assert_eq!(self.rows, other.rows);
        for (chain, mult) in other.terms {
            *self.terms.entry(chain).or_insert(0) += mult;
        }
        self.terms.retain(|_, v| *v != 0);
    }

    /// Distinct divisor chains with their signed multiplicities.
    pub fn terms(&self) -> impl Iterator<Item = (&[BigInt], i64)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    /// `|M_S(q)|`.
    pub fn count(&self, q: u64) -> Result<BigInt> {
        if q == 0 {
            return Err(Error::ZeroModulus);
        }
        let qb = BigInt::from(q);
        let mut total = BigInt::zero();
        for (chain, &mult) in &self.terms {
            let free: BigInt = Pow::pow(&qb, (self.rows - chain.len()) as u32);
            let torsion = chain.iter().fold(BigInt::one(), |acc, e| acc * e.gcd(&qb));
            total += free * torsion * mult;
        }
        Ok(total)
    }
}

/// `|M_S(q)|` via elementary divisors of every column subset; `n <= 24`.
pub fn snf_count(matrix: &IntMatrix, q: u64) -> Result<BigInt> {
    if q == 0 {
        return Err(Error::ZeroModulus);
    }
    DivisorTable::build(matrix)?.count(q)
}
