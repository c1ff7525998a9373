//! Coefficient matrices of the arrangements: Coxeter types A/B/C/D in the
//! orthonormal basis and their diagonal deformations `A_m(s)`, `D_m(s)`.
//!
//! Columns are hyperplane normals. Generated matrices use one canonical
//! column order: diagonal columns first by index, then for each pair
//! `i < j` (lexicographic) the column `e_i - e_j` followed, for B/C/D, by
//! `e_i + e_j`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An `m x n` integer matrix whose columns are the (nonzero) normals of a
/// central arrangement in `Z^m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    /// Column-major.
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from its columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for col in columns {
            if col.len() != rows {
                return Err(Error::Shape { expected: rows, got: col.len() });
            }
            data.extend(col);
        }
        Self::from_col_major(rows, cols, data)
    }

    /// Builds a matrix from row-major entries.
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape { expected: rows * cols, got: entries.len() });
        }
        let mut data = Vec::with_capacity(entries.len());
        for j in 0..cols {
            for i in 0..rows {
                data.push(entries[i * cols + j].clone());
            }
        }
        Self::from_col_major(rows, cols, data)
    }

    /// Convenience constructor from small row-major rows.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(m * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::Shape { expected: n, got: row.len() });
            }
            entries.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        Self::from_row_major(m, n, entries)
    }

    fn from_col_major(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyArrangement);
        }
        debug_assert_eq!(data.len(), rows * cols);
        if let Some(j) = (0..cols).find(|&j| data[j * rows..(j + 1) * rows].iter().all(Zero::is_zero)) {
            return Err(Error::ZeroColumn(j));
        }
        Ok(Self { rows, cols, data })
    }

    /// Ambient dimension `m`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of hyperplanes `n`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.data[col * self.rows + row]
    }

    pub fn column(&self, col: usize) -> &[BigInt] {
        &self.data[col * self.rows..(col + 1) * self.rows]
    }

    pub fn columns(&self) -> impl ExactSizeIterator<Item = &[BigInt]> + '_ {
        self.data.chunks_exact(self.rows)
    }

    /// Row `i` as an owned vector (row-major view).
    pub fn row(&self, row: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.entry(row, j).clone()).collect()
    }

    /// Columns sorted lexicographically; equal for matrices that differ only
    /// by a column permutation.
    pub fn column_multiset(&self) -> Vec<Vec<BigInt>> {
        let mut cols: Vec<Vec<BigInt>> = self.columns().map(<[BigInt]>::to_vec).collect();
        cols.sort();
        cols
    }

    /// Largest absolute entry.
    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(Signed::abs).max().unwrap_or_default()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_struct("IntMatrix").field("rows", &rows).finish()
    }
}

/// The four Coxeter families in the orthonormal basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            _ => Err(Error::InvalidSpec("unknown Coxeter family")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(c)
    }
}

/// Which Coxeter matrix receives the added diagonal columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Deformation {
    A,
    D,
}

/// Parameters `s = (s_1, ..., s_t)` of a diagonal deformation in dimension
/// `m`, with `s_t | ... | s_1`. `r` is the even-prefix length and only
/// matters for type D, where `s_1..s_r` must be even and the rest odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeformSpec {
    m: usize,
    s: Vec<u64>,
    r: usize,
}

impl DeformSpec {
    /// Validates the shape constraints and the divisibility chain.
    /// Parity is checked separately by [`DeformSpec::check_parity`].
    pub fn new(m: usize, s: Vec<u64>, r: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSpec("dimension m must be positive"));
        }
        if s.len() > m {
            return Err(Error::InvalidSpec("t must not exceed m"));
        }
        if r > s.len() {
            return Err(Error::InvalidSpec("r must not exceed t"));
        }
        if s.contains(&0) {
            return Err(Error::InvalidSpec("entries of s must be positive"));
        }
        for (i, w) in s.windows(2).enumerate() {
            if w[0] % w[1] != 0 {
                return Err(Error::InvalidChain { at: i + 1, lower: w[1], upper: w[0] });
            }
        }
        Ok(Self { m, s, r })
    }

    /// Type-A deformation; `r` is irrelevant and set to 0.
    pub fn type_a(m: usize, s: Vec<u64>) -> Result<Self> {
        Self::new(m, s, 0)
    }

    /// Type-D deformation with chain and parity checked.
    pub fn type_d(m: usize, r: usize, s: Vec<u64>) -> Result<Self> {
        let spec = Self::new(m, s, r)?;
        spec.check_parity()?;
        Ok(spec)
    }

    /// `s_1..s_r` even, `s_{r+1}..s_t` odd.
    pub fn check_parity(&self) -> Result<()> {
        for (i, &v) in self.s.iter().enumerate() {
            let want_even = i < self.r;
            if (v % 2 == 0) != want_even {
                return Err(Error::InvalidParity { at: i + 1, want_even });
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> usize {
        self.s.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> &[u64] {
        &self.s
    }
}

fn unit(m: usize, i: usize, scale: i64) -> Vec<BigInt> {
    let mut v = alloc::vec![BigInt::zero(); m];
    v[i] = BigInt::from(scale);
    v
}

fn pair(m: usize, i: usize, j: usize, sign: i64) -> Vec<BigInt> {
    let mut v = alloc::vec![BigInt::zero(); m];
    v[i] = BigInt::one();
    v[j] = BigInt::from(sign);
    v
}

fn pair_columns(m: usize, with_sum: bool, out: &mut Vec<Vec<BigInt>>) {
    for i in 0..m {
        for j in i + 1..m {
            out.push(pair(m, i, j, -1));
            if with_sum {
                out.push(pair(m, i, j, 1));
            }
        }
    }
}

/// Coefficient matrix of the Coxeter arrangement of `family` in dimension `m`.
pub fn gen_coxeter(family: Family, m: usize) -> Result<IntMatrix> {
    if m == 0 {
        return Err(Error::EmptyArrangement);
    }
    let mut cols = Vec::new();
    match family {
        Family::A => pair_columns(m, false, &mut cols),
        Family::B | Family::C => {
            let scale = if family == Family::B { 1 } else { 2 };
            cols.extend((0..m).map(|i| unit(m, i, scale)));
            pair_columns(m, true, &mut cols);
        }
        Family::D => pair_columns(m, true, &mut cols),
    }
    IntMatrix::from_columns(m, cols)
}

fn diagonal_columns(spec: &DeformSpec) -> Vec<Vec<BigInt>> {
    spec.s
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut col = alloc::vec![BigInt::zero(); spec.m];
            col[i] = BigInt::from(v);
            col
        })
        .collect()
}

/// `A_m(s)`: the columns `s_i e_i` (i = 1..t) followed by `A_m`.
pub fn gen_deform_a(spec: &DeformSpec) -> Result<IntMatrix> {
    let mut cols = diagonal_columns(spec);
    pair_columns(spec.m, false, &mut cols);
    IntMatrix::from_columns(spec.m, cols)
}

/// `D_m(s)`: the columns `s_i e_i` (i = 1..t) followed by `D_m`.
pub fn gen_deform_d(spec: &DeformSpec) -> Result<IntMatrix> {
    if spec.m < 2 {
        return Err(Error::InvalidSpec("type D needs m >= 2"));
    }
    spec.check_parity()?;
    let mut cols = diagonal_columns(spec);
    pair_columns(spec.m, true, &mut cols);
    IntMatrix::from_columns(spec.m, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn coxeter_b2_canonical() {
        let b2 = gen_coxeter(Family::B, 2).unwrap();
        assert_eq!(b2, IntMatrix::from_rows(&[[1, 0, 1, 1], [0, 1, -1, 1]]).unwrap());
    }

    #[test]
    fn coxeter_a2_and_c2() {
        assert_eq!(gen_coxeter(Family::A, 2).unwrap(), IntMatrix::from_rows(&[[1], [-1]]).unwrap());
        assert_eq!(
            gen_coxeter(Family::C, 2).unwrap(),
            IntMatrix::from_rows(&[[2, 0, 1, 1], [0, 2, -1, 1]]).unwrap()
        );
    }

    #[test]
    fn coxeter_column_counts() {
        for m in 1..=6 {
            if m >= 2 {
                assert_eq!(gen_coxeter(Family::A, m).unwrap().cols(), m * (m - 1) / 2);
                assert_eq!(gen_coxeter(Family::D, m).unwrap().cols(), m * m - m);
            }
            assert_eq!(gen_coxeter(Family::B, m).unwrap().cols(), m * m);
            assert_eq!(gen_coxeter(Family::C, m).unwrap().cols(), m * m);
        }
    }

    #[test]
    fn empty_families_rejected() {
        assert_eq!(gen_coxeter(Family::A, 1), Err(Error::EmptyArrangement));
        assert_eq!(gen_coxeter(Family::D, 1), Err(Error::EmptyArrangement));
        assert_eq!(gen_coxeter(Family::B, 0), Err(Error::EmptyArrangement));
    }

    #[test]
    fn zero_column_rejected() {
        assert_eq!(IntMatrix::from_rows(&[[1, 0], [2, 0]]), Err(Error::ZeroColumn(1)));
    }

    #[test]
    fn deform_a_examples() {
        let spec = DeformSpec::type_a(2, vec![2]).unwrap();
        assert_eq!(gen_deform_a(&spec).unwrap(), IntMatrix::from_rows(&[[2, 1], [0, -1]]).unwrap());

        let spec = DeformSpec::type_a(3, vec![]).unwrap();
        assert_eq!(gen_deform_a(&spec).unwrap(), gen_coxeter(Family::A, 3).unwrap());

        let spec = DeformSpec::type_a(2, vec![4, 2]).unwrap();
        assert_eq!(gen_deform_a(&spec).unwrap(), IntMatrix::from_rows(&[[4, 0, 1], [0, 2, -1]]).unwrap());
        let m = gen_deform_a(&DeformSpec::type_a(3, vec![6, 3]).unwrap()).unwrap();
        assert_eq!(m.cols(), (9 - 3 + 4) / 2);
    }

    #[test]
    fn deform_a_rejects_broken_chain() {
        assert_eq!(
            DeformSpec::type_a(2, vec![2, 4]),
            Err(Error::InvalidChain { at: 1, lower: 4, upper: 2 })
        );
        assert!(DeformSpec::type_a(2, vec![1, 1, 1]).is_err());
        assert!(gen_deform_a(&DeformSpec::type_a(1, vec![]).unwrap()).is_err());
        let single = gen_deform_a(&DeformSpec::type_a(1, vec![3]).unwrap()).unwrap();
        assert_eq!(single, IntMatrix::from_rows(&[[3]]).unwrap());
    }

    #[test]
    fn deform_d_recovers_b_c_d() {
        for m in 2..=4 {
            let b = gen_deform_d(&DeformSpec::type_d(m, 0, vec![1; m]).unwrap()).unwrap();
            assert_eq!(b.column_multiset(), gen_coxeter(Family::B, m).unwrap().column_multiset());
            let c = gen_deform_d(&DeformSpec::type_d(m, m, vec![2; m]).unwrap()).unwrap();
            assert_eq!(c.column_multiset(), gen_coxeter(Family::C, m).unwrap().column_multiset());
            let d = gen_deform_d(&DeformSpec::type_d(m, 0, vec![]).unwrap()).unwrap();
            assert_eq!(d, gen_coxeter(Family::D, m).unwrap());
            assert_eq!(b.cols(), m * m - m + m);
        }
    }

    #[test]
    fn deform_d_mixed_parity() {
        let spec = DeformSpec::type_d(2, 1, vec![2, 1]).unwrap();
        assert_eq!(gen_deform_d(&spec).unwrap(), IntMatrix::from_rows(&[[2, 0, 1, 1], [0, 1, -1, 1]]).unwrap());
    }

    #[test]
    fn deform_d_parity_errors() {
        assert_eq!(DeformSpec::type_d(2, 0, vec![2]), Err(Error::InvalidParity { at: 1, want_even: false }));
        assert_eq!(DeformSpec::type_d(2, 2, vec![2, 1]), Err(Error::InvalidParity { at: 2, want_even: true }));
        assert!(DeformSpec::type_d(2, 3, vec![2, 2]).is_err());
        let one = DeformSpec::new(1, vec![2], 1).unwrap();
        assert!(gen_deform_d(&one).is_err());
    }

    #[test]
    fn generated_entries_are_drawn_from_family_alphabet() {
        let spec = DeformSpec::type_d(3, 1, vec![6, 3, 1]).unwrap();
        let mat = gen_deform_d(&spec).unwrap();
        let allowed: Vec<BigInt> = [-1i64, 0, 1, 6, 3].iter().map(|&v| BigInt::from(v)).collect();
        assert!(mat.columns().all(|c| c.iter().all(|e| allowed.contains(e))));
        assert_eq!(mat.cols(), 9 - 3 + 3);
    }
}
