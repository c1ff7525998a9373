use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use super::poly::Polynomial;
use crate::error::{Error, Result};

/// A quasi-polynomial with period `rho`: constituent `k` (1-based) applies to
/// `q ≡ k (mod rho)`, the last one covering `q ≡ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u64,
    constituents: Vec<Polynomial>,
}

impl QuasiPolynomial {
    pub fn new(period: u64, constituents: Vec<Polynomial>) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidResidue(0));
        }
        if constituents.len() as u64 != period {
            return Err(Error::Shape { expected: period as usize, got: constituents.len() });
        }
        Ok(Self { period, constituents })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// The `k`-constituent, `1 <= k <= rho`.
    pub fn constituent(&self, k: u64) -> Option<&Polynomial> {
        k.checked_sub(1).and_then(|i| self.constituents.get(i as usize))
    }

    pub fn constituents(&self) -> &[Polynomial] {
        &self.constituents
    }

    /// Residue index in `1..=rho` used for `q`.
    pub fn residue(&self, q: u64) -> u64 {
        match q % self.period {
            0 => self.period,
            k => k,
        }
    }

    pub fn eval(&self, q: u64) -> BigInt {
        self.constituents[(self.residue(q) - 1) as usize].eval_u64(q)
    }

    /// True when every constituent is monic of degree `degree`.
    pub fn is_monic_of_degree(&self, degree: usize) -> bool {
        self.constituents.iter().all(|c| c.is_monic() && c.degree() == Some(degree))
    }
}

/// True iff no proper divisor of the period also works as a period.
pub fn verify_minimum_period(qp: &QuasiPolynomial) -> bool {
    let rho = qp.period();
    (1..rho).filter(|d| rho.is_multiple_of(*d)).all(|d| {
        (1..=rho).any(|k| {
            let folded = (k - 1) % d + 1;
            qp.constituent(k) != qp.constituent(folded)
        })
    })
}

/// True iff constituents `a` and `b` coincide whenever
/// `gcd(rho, a) == gcd(rho, b)`.
pub fn check_gcd_property(qp: &QuasiPolynomial) -> bool {
    let rho = qp.period();
    (1..=rho).all(|a| {
        // compare against the representative gcd(rho, a) of its class
        let rep = rho.gcd(&a);
        qp.constituent(a) == qp.constituent(rep)
    })
}
