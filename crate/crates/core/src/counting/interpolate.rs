use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::brute::{brute_force_count_with_budget, DEFAULT_BUDGET};
use super::poly::Polynomial;
use super::quasi::QuasiPolynomial;
use super::snf::DivisorTable;
use crate::arrangements::IntMatrix;
use crate::error::{Error, Result};

/// Which exact counter supplies the interpolation samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counter {
    Brute,
    Snf,
}

/// Lagrange interpolation through `points` over the rationals; returns
/// ascending coefficients of the unique polynomial of degree `< points.len()`.
/// Abscissae must be distinct.
pub fn lagrange_interpolate(points: &[(BigInt, BigInt)]) -> Vec<BigRational> {
    let n = points.len();
    let mut out = alloc::vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::one();
        let mut denom = BigInt::one();
        for (l, (xl, _)) in points.iter().enumerate() {
            if l != i {
                basis = &basis * &Polynomial::linear(-xl);
                denom *= xi - xl;
            }
        }
        for (c, b) in out.iter_mut().zip(basis.coeffs()) {
            *c += BigRational::new(b * yi, denom.clone());
        }
    }
    out
}

/// Sample points used for constituent `k`: `m + 1` values of
/// `q = k + rho * j` starting at the first `j >= 0` with `q >= 2`.
pub fn sample_points(k: u64, rho: u64, m: usize) -> Vec<u64> {
    let j0 = if k >= 2 { 0 } else { 1 };
    (0..=m as u64).map(|i| k + rho * (j0 + i)).collect()
}

fn fit_constituent(k: u64, m: usize, samples: &[(u64, BigInt)]) -> Result<Polynomial> {
    let points: Vec<(BigInt, BigInt)> = samples.iter().map(|(q, y)| (BigInt::from(*q), y.clone())).collect();
    let coeffs = lagrange_interpolate(&points);
    if coeffs.iter().any(|c| !c.is_integer()) {
        return Err(Error::NotIntegral(k));
    }
    let poly = Polynomial::from_coeffs(coeffs.into_iter().map(|c| c.to_integer()).collect());
    if !poly.is_monic() || poly.degree() != Some(m) {
        return Err(Error::NotMonic(k, m));
    }
    Ok(poly)
}

/// Reconstructs the characteristic quasi-polynomial with period `rho` from
/// exact counts supplied by `count`, which is called once per sample `q`.
pub fn interpolate_quasi_with<F>(m: usize, rho: u64, mut count: F) -> Result<QuasiPolynomial>
where
    F: FnMut(u64) -> Result<BigInt>,
{
    if rho == 0 {
        return Err(Error::InvalidResidue(0));
    }
    let mut constituents = Vec::with_capacity(rho as usize);
    for k in 1..=rho {
        let samples = sample_points(k, rho, m)
            .into_iter()
            .map(|q| count(q).map(|y| (q, y)))
            .collect::<Result<Vec<_>>>()?;
        constituents.push(fit_constituent(k, m, &samples)?);
    }
    QuasiPolynomial::new(rho, constituents)
}

/// Interpolates the characteristic quasi-polynomial of `matrix` assuming
/// period `rho`. Fails with `NotIntegral`/`NotMonic` when `rho` is not a
/// period of the counting function.
pub fn interpolate_quasi(matrix: &IntMatrix, rho: u64, counter: Counter) -> Result<QuasiPolynomial> {
    let m = matrix.rows();
    match counter {
        Counter::Brute => interpolate_quasi_with(m, rho, |q| brute_force_count_with_budget(matrix, q, DEFAULT_BUDGET)),
        Counter::Snf => {
            let table = DivisorTable::build(matrix)?;
            interpolate_quasi_with(m, rho, |q| table.count(q))
        }
    }
}
