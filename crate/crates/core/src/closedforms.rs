//! Closed-form constituents for the Coxeter arrangements and their
//! diagonal deformations, expanded into integer polynomials.
//!
//! Conventions: an empty product is 1 and an empty sum is 0. For the
//! deformations `d_i = gcd(k, s_i)`; a residue index `k` that does not
//! divide the period is first replaced by `gcd(rho, k)` (which is `rho` for
//! `k ≡ 0`), since constituents depend on `k` only through that gcd.
//!
//! In the even constituent of `D_m(s)`, the first inner product of `P_2`
//! runs over `j = r+1 .. i-1`. This is the range produced by the counting
//! argument (case: `q/2` taken by one of `x_{r+1}..x_t`) and the one that
//! agrees with the `t = m` specialization; starting it at `j = 1` instead
//! over-counts, e.g. 20 instead of 12 for `m = 2, r = 1, s = (2, 1), q = 6`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arrangements::{DeformSpec, Deformation, Family};
use crate::counting::{Polynomial, QuasiPolynomial};
use crate::error::{Error, Result};
use crate::intlinalg::known_period;

/// `q + c`
fn lin(c: i128) -> Polynomial {
    Polynomial::linear(BigInt::from(c))
}

/// `prod_{i=a}^{b} f(i)`, empty when `a > b`.
fn prod(a: i128, b: i128, f: impl Fn(i128) -> Polynomial) -> Polynomial {
    Polynomial::product((a..=b).map(f))
}

fn small(n: usize) -> Polynomial {
    Polynomial::constant(BigInt::from(n))
}

/// Closed-form quasi-polynomials of `A_m`, `B_m`, `C_m`, `D_m`.
pub fn chi_coxeter(family: Family, m: usize) -> Result<QuasiPolynomial> {
    let min_m = match family {
        Family::A | Family::D => 2,
        Family::B | Family::C => 1,
    };
    if m < min_m {
        return Err(Error::EmptyArrangement);
    }
    let m = m as i128;
    let odd = prod(1, m, |i| lin(-2 * i + 1));
    let qp = match family {
        Family::A => QuasiPolynomial::new(1, alloc::vec![prod(1, m, |i| lin(-i + 1))])?,
        // B_1 is the single hyperplane x = 0; both constituents are q - 1
        Family::B if m == 1 => QuasiPolynomial::new(1, alloc::vec![odd])?,
        Family::B => QuasiPolynomial::new(2, alloc::vec![odd, &lin(-m) * &prod(1, m - 1, |i| lin(-2 * i))])?,
        Family::C => QuasiPolynomial::new(2, alloc::vec![odd, prod(1, m, |i| lin(-2 * i))])?,
        Family::D => {
            let chi1 = &lin(-m + 1) * &prod(1, m - 1, |i| lin(-2 * i + 1));
            let quad = Polynomial::from_coeffs(alloc::vec![
                BigInt::from(m * (m - 1)),
                BigInt::from(-2 * (m - 1)),
                BigInt::from(1),
            ]);
            let chi2 = &quad * &prod(1, m - 2, |i| lin(-2 * i));
            QuasiPolynomial::new(2, alloc::vec![chi1, chi2])?
        }
    };
    Ok(qp)
}

/// `gcd(rho, k)`, rejecting `k = 0`.
fn reduce_residue(rho: u64, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidResidue(0));
    }
    Ok(rho.gcd(&k))
}

/// `d_1..d_t` as signed offsets, indexed from 1 (`d[0]` unused).
fn gcds(spec: &DeformSpec, k: u64) -> Vec<i128> {
    core::iter::once(0).chain(spec.s().iter().map(|&s| i128::from(k.gcd(&s)))).collect()
}

/// The `k`-constituent of `A_m(s)`:
/// `prod_{i=1}^{t} (q - d_i - i + 1) * prod_{i=t+1}^{m} (q - i + 1)`.
pub fn chi_deform_a(spec: &DeformSpec, k: u64) -> Result<Polynomial> {
    if spec.m() < 2 && spec.t() == 0 {
        return Err(Error::EmptyArrangement);
    }
    let k = reduce_residue(known_period(spec, Deformation::A), k)?;
    let d = gcds(spec, k);
    let (m, t) = (spec.m() as i128, spec.t() as i128);
    Ok(&prod(1, t, |i| lin(-d[i as usize] - i + 1)) * &prod(t + 1, m, |i| lin(-i + 1)))
}

fn check_type_d(spec: &DeformSpec) -> Result<()> {
    if spec.m() < 2 {
        return Err(Error::InvalidSpec("type D needs m >= 2"));
    }
    spec.check_parity()
}

/// The `k`-constituent of `D_m(s)` (odd and even `k` handled separately).
pub fn chi_deform_d(spec: &DeformSpec, k: u64) -> Result<Polynomial> {
    check_type_d(spec)?;
    let k = reduce_residue(known_period(spec, Deformation::D), k)?;
    let d = gcds(spec, k);
    let (m, t, r) = (spec.m() as i128, spec.t() as i128, spec.r() as i128);
    let free = (m - t) as usize;
    let d = |i: i128| d[i as usize];

    if k % 2 == 1 {
        let head = prod(1, t, |i| lin(-d(i) - 2 * i + 2));
        let tail = &prod(t + 1, m, |i| lin(-2 * i + 1)) + &(&small(free) * &prod(t + 1, m - 1, |i| lin(-2 * i + 1)));
        return Ok(&head * &tail);
    }

    let head = prod(1, r, |i| lin(-d(i) - 2 * i + 2));
    // case: q/2 not among x_{r+1}..x_t
    let p1_tail = Polynomial::sum([
        prod(t + 1, m, |i| lin(-2 * i)),
        &small(2 * free) * &prod(t + 1, m - 1, |i| lin(-2 * i)),
        &small(free * free.saturating_sub(1)) * &prod(t + 1, m - 2, |i| lin(-2 * i)),
    ]);
    let p1 = &prod(r + 1, t, |i| lin(-d(i) - 2 * i + 1)) * &p1_tail;
    // case: x_i = q/2 for exactly one i in r+1..t
    let p2_sum = Polynomial::sum(
        (r + 1..=t).map(|i| &prod(r + 1, i - 1, |j| lin(-d(j) - 2 * j + 1)) * &prod(i + 1, t, |j| lin(-d(j) - 2 * j + 3))),
    );
    let p2_tail = &prod(t + 1, m, |i| lin(-2 * i + 2)) + &(&small(free) * &prod(t + 1, m - 1, |i| lin(-2 * i + 2)));
    let p2 = &p2_sum * &p2_tail;
    Ok(&head * &(&p1 + &p2))
}

/// The `t = m` specialization of [`chi_deform_d`], computed from its own
/// simplified formula.
pub fn chi_deform_d_tm(spec: &DeformSpec, k: u64) -> Result<Polynomial> {
    check_type_d(spec)?;
    if spec.t() != spec.m() {
        return Err(Error::SpecMismatch { t: spec.t(), m: spec.m() });
    }
    let k = reduce_residue(known_period(spec, Deformation::D), k)?;
    let d = gcds(spec, k);
    let (m, r) = (spec.m() as i128, spec.r() as i128);
    let d = |i: i128| d[i as usize];
    if k % 2 == 1 {
        return Ok(prod(1, m, |i| lin(-d(i) - 2 * i + 2)));
    }
    let head = prod(1, r, |i| lin(-d(i) - 2 * i + 2));
    let avoid_half = prod(r + 1, m, |i| lin(-d(i) - 2 * i + 1));
    let take_half = Polynomial::sum(
        (r + 1..=m).map(|i| &prod(r + 1, i - 1, |j| lin(-d(j) - 2 * j + 1)) * &prod(i + 1, m, |j| lin(-d(j) - 2 * j + 3))),
    );
    Ok(&head * &(&avoid_half + &take_half))
}

/// All constituents of `A_m(s)` over its period.
pub fn quasi_deform_a(spec: &DeformSpec) -> Result<QuasiPolynomial> {
    let rho = known_period(spec, Deformation::A);
    let cs = (1..=rho).map(|k| chi_deform_a(spec, k)).collect::<Result<Vec<_>>>()?;
    QuasiPolynomial::new(rho, cs)
}

/// All constituents of `D_m(s)` over its period.
pub fn quasi_deform_d(spec: &DeformSpec) -> Result<QuasiPolynomial> {
    let rho = known_period(spec, Deformation::D);
    let cs = (1..=rho).map(|k| chi_deform_d(spec, k)).collect::<Result<Vec<_>>>()?;
    QuasiPolynomial::new(rho, cs)
}
