#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use quasiarr_core::{DeformSpec, IntMatrix};
use rand::Rng;

/// Divisibility chains `s_1, ..., s_t` with `s_1 <= max_first`, every length
/// up to `max_len`, including the empty chain.
pub fn chains(max_first: u64, max_len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<u64>> = (1..=max_first).map(|s| vec![s]).collect();
    for _ in 0..max_len {
        out.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for c in &frontier {
            let last = *c.last().unwrap();
            for d in (1..=last).filter(|d| last % d == 0) {
                let mut e = c.clone();
                e.push(d);
                next.push(e);
            }
        }
        frontier = next;
    }
    out
}

/// Number of leading even entries; for a divisibility chain the evens always
/// come first.
pub fn even_prefix(s: &[u64]) -> usize {
    s.iter().take_while(|&&v| v % 2 == 0).count()
}

pub fn d_spec(m: usize, s: &[u64]) -> DeformSpec {
    DeformSpec::type_d(m, even_prefix(s), s.to_vec()).unwrap()
}

/// Determinant by cofactor expansion along the first row.
pub fn det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> =
            a[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = &a[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combos(n - 1, k);
    for mut c in combos(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of all `k x k` minors (0 when they all vanish).
pub fn determinantal_divisor(m: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in combos(m.rows(), k) {
        for cols in combos(m.cols(), k) {
            let sub: Vec<Vec<BigInt>> =
                rows.iter().map(|&i| cols.iter().map(|&j| m.entry(i, j).clone()).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g.abs()
}

/// Random matrix with entries in `[-bound, bound]` and no zero column.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let columns = (0..cols)
        .map(|_| loop {
            let c: Vec<BigInt> = (0..rows).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
            if c.iter().any(|v| !v.is_zero()) {
                break c;
            }
        })
        .collect();
    IntMatrix::from_columns(rows, columns).unwrap()
}

/// Plain nested enumeration of `Z_q^m`, recomputing every inner product.
pub fn naive_count(m: &IntMatrix, q: u64) -> BigInt {
    let dim = m.rows() as u32;
    let qq = BigInt::from(q);
    let mut count = 0u64;
    for idx in 0..q.pow(dim) {
        let x: Vec<BigInt> = (0..dim).map(|i| BigInt::from(idx / q.pow(i) % q)).collect();
        if m.columns().all(|c| !c.iter().zip(&x).map(|(a, b)| a * b).sum::<BigInt>().mod_floor(&qq).is_zero()) {
            count += 1;
        }
    }
    BigInt::from(count)
}
