//! Elementary divisors by Smith normal form elimination.
//!
//! The diagonal is computed with repeated gcd-driven row/column reduction,
//! pivoting on the smallest nonzero magnitude. Only the diagonal is kept.
//! A machine-word pass runs first; any overflow restarts the computation
//! over `BigInt`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arrangements::IntMatrix;

/// The chain `e_1 | e_2 | ... | e_l` of positive elementary divisors; its
/// length is the rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryDivisors {
    divisors: Vec<BigInt>,
}

impl ElementaryDivisors {
    pub fn from_chain(divisors: Vec<BigInt>) -> Self {
        debug_assert!(divisors.iter().all(Signed::is_positive));
        debug_assert!(divisors.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        Self { divisors }
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// `e_l`, the largest divisor; `None` for rank 0.
    pub fn last(&self) -> Option<&BigInt> {
        self.divisors.last()
    }

    pub fn into_divisors(self) -> Vec<BigInt> {
        self.divisors
    }
}

/// Operations the elimination needs; `None` signals overflow.
trait Entry: Clone + PartialEq + Sized {
    fn is_zero(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn quot(&self, d: &Self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn add(&self, b: &Self) -> Option<Self>;
    fn divides(&self, other: &Self) -> bool;
    fn into_abs_bigint(self) -> BigInt;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        q.checked_mul(*b).and_then(|p| self.checked_sub(p))
    }
    fn add(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b)
    }
    fn divides(&self, other: &Self) -> bool {
        other.checked_rem(*self).is_none_or(|r| r == 0)
    }
    fn into_abs_bigint(self) -> BigInt {
        BigInt::from(self.unsigned_abs())
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn divides(&self, other: &Self) -> bool {
        other.is_multiple_of(self)
    }
    fn into_abs_bigint(self) -> BigInt {
        self.abs()
    }
}

/// Dense row-major working copy.
struct Work<T> {
    rows: usize,
    cols: usize,
    a: Vec<T>,
}

impl<T: Entry> Work<T> {
    fn at(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.cols + j]
    }

    fn swap_rows(&mut self, x: usize, y: usize) {
        if x != y {
            for j in 0..self.cols {
                self.a.swap(x * self.cols + j, y * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        if x != y {
            for i in 0..self.rows {
                self.a.swap(i * self.cols + x, i * self.cols + y);
            }
        }
    }

    /// row[dst] -= q * row[src], from column `from` on.
    fn row_sub(&mut self, dst: usize, src: usize, q: &T, from: usize) -> Option<()> {
        for j in from..self.cols {
            let v = self.at(dst, j).sub_mul(q, self.at(src, j))?;
            self.a[dst * self.cols + j] = v;
        }
        Some(())
    }

    fn col_sub(&mut self, dst: usize, src: usize, q: &T, from: usize) -> Option<()> {
        for i in from..self.rows {
            let v = self.at(i, dst).sub_mul(q, self.at(i, src))?;
            self.a[i * self.cols + dst] = v;
        }
        Some(())
    }

    fn row_add(&mut self, dst: usize, src: usize, from: usize) -> Option<()> {
        for j in from..self.cols {
            let v = self.at(dst, j).add(self.at(src, j))?;
            self.a[dst * self.cols + j] = v;
        }
        Some(())
    }

    /// Position of the smallest nonzero magnitude in the trailing block.
    fn min_in_block(&self, p: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in p..self.rows {
            for j in p..self.cols {
                let v = self.at(i, j);
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs_lt(self.at(bi, bj))) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Smallest nonzero off-pivot entry in row `p` or column `p`.
    fn min_in_cross(&self, p: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let consider = |i: usize, j: usize, best: &mut Option<(usize, usize)>| {
            let v = self.at(i, j);
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs_lt(self.at(bi, bj))) {
                *best = Some((i, j));
            }
        };
        for i in p + 1..self.rows {
            consider(i, p, &mut best);
        }
        for j in p + 1..self.cols {
            consider(p, j, &mut best);
        }
        best
    }

    fn diagonalize(mut self) -> Option<Vec<BigInt>> {
        let mut out = Vec::new();
        let limit = self.rows.min(self.cols);
        for p in 0..limit {
            let Some((i, j)) = self.min_in_block(p) else { break };
            self.swap_rows(p, i);
            self.swap_cols(p, j);
            loop {
                let pivot = self.at(p, p).clone();
                for i in p + 1..self.rows {
                    if !self.at(i, p).is_zero() {
                        let q = self.at(i, p).quot(&pivot)?;
                        self.row_sub(i, p, &q, p)?;
                    }
                }
                for j in p + 1..self.cols {
                    if !self.at(p, j).is_zero() {
                        let q = self.at(p, j).quot(&pivot)?;
                        self.col_sub(j, p, &q, p)?;
                    }
                }
                if let Some((i, j)) = self.min_in_cross(p) {
                    // a remainder survived and is smaller than the pivot
                    if i != p {
                        self.swap_rows(p, i);
                    } else {
                        self.swap_cols(p, j);
                    }
                    continue;
                }
                // pivot must divide the whole trailing block
                let bad = (p + 1..self.rows)
                    .find(|&i| (p + 1..self.cols).any(|j| !pivot.divides(self.at(i, j))));
                match bad {
                    Some(i) => self.row_add(p, i, p)?,
                    None => break,
                }
            }
            out.push(self.at(p, p).clone().into_abs_bigint());
        }
        Some(out)
    }
}

/// Elementary divisors of the matrix whose columns are `columns`, each of
/// length `rows`.
pub(crate) fn divisors_of_columns<'a, I>(rows: usize, columns: I) -> ElementaryDivisors
where
    I: IntoIterator<Item = &'a [BigInt]>,
{
    let cols: Vec<&[BigInt]> = columns.into_iter().collect();
    let n = cols.len();
    let small: Option<Vec<i64>> = (0..rows * n).map(|idx| cols[idx % n][idx / n].to_i64()).collect();
    if let Some(a) = small {
        if let Some(d) = (Work { rows, cols: n, a }).diagonalize() {
            return ElementaryDivisors::from_chain(d);
        }
    }
    let a = (0..rows * n).map(|idx| cols[idx % n][idx / n].clone()).collect();
    let d = (Work { rows, cols: n, a })
        .diagonalize()
        .expect("BigInt elimination cannot overflow");
    ElementaryDivisors::from_chain(d)
}

/// Same as [`divisors_of_columns`] for matrices already known to fit in `i64`,
/// falling back to `BigInt` on overflow. `cols` are column slices of length `rows`.
pub(crate) fn divisors_of_small_columns(rows: usize, cols: &[&[i64]]) -> ElementaryDivisors {
    let n = cols.len();
    let a: Vec<i64> = (0..rows * n).map(|idx| cols[idx % n][idx / n]).collect();
    if let Some(d) = (Work { rows, cols: n, a: a.clone() }).diagonalize() {
        return ElementaryDivisors::from_chain(d);
    }
    let a = a.into_iter().map(BigInt::from).collect();
    let d = (Work { rows, cols: n, a })
        .diagonalize()
        .expect("BigInt elimination cannot overflow");
    ElementaryDivisors::from_chain(d)
}

/// Positive elementary divisors of `matrix` in chain order; the length of the
/// chain is the rank.
pub fn smith_divisors(matrix: &IntMatrix) -> ElementaryDivisors {
    divisors_of_columns(matrix.rows(), matrix.columns())
}

/// BigInt-only path, exposed for cross-checking the word-size fast path.
#[doc(hidden)]
pub fn smith_divisors_bigint(matrix: &IntMatrix) -> ElementaryDivisors {
    let rows = matrix.rows();
    let n = matrix.cols();
    let a = (0..rows * n).map(|idx| matrix.entry(idx / n, idx % n).clone()).collect();
    let d = (Work { rows, cols: n, a }).diagonalize().expect("no overflow");
    ElementaryDivisors::from_chain(d)
}
