use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial in `q` with integer coefficients.
///
/// Coefficients are ascending (`coeffs[i]` multiplies `q^i`). The vector is
/// empty for the zero polynomial and otherwise ends in a nonzero entry.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(alloc::vec![c.into()])
    }

    /// `q + c`.
    pub fn linear(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(alloc::vec![c.into(), BigInt::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_u64(&self, q: u64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product of the polynomials yielded by `factors`; the empty product is 1.
    pub fn product<I: IntoIterator<Item = Polynomial>>(factors: I) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * &f)
    }

    /// Sum of the polynomials yielded by `terms`; the empty sum is 0.
    pub fn sum<I: IntoIterator<Item = Polynomial>>(terms: I) -> Self {
        terms.into_iter().fold(Self::zero(), |acc, f| &acc + &f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_default();
                match rhs.coeffs.get(i) {
                    Some(b) => a + b,
                    None => a,
                }
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Descending powers of `q`, e.g. `q^2 - 4*q + 3`. Zero terms are omitted,
/// unit coefficients are dropped on non-constant terms, and signs between
/// terms are written as ` + ` / ` - `.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if power == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            match power {
                1 => f.write_str("q")?,
                p => write!(f, "q^{p}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
