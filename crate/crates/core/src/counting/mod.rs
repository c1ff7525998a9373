//! Counting `|M_S(q)|` and reconstructing the characteristic
//! quasi-polynomial.
//!
//! Two independent counters are provided: direct enumeration of `Z_q^m`
//! ([`brute_force_count`]) and inclusion-exclusion over elementary divisors
//! of column subsets ([`snf_count`]). Either can feed [`interpolate_quasi`].

mod brute;
mod interpolate;
mod poly;
mod quasi;
mod snf;

pub use brute::{brute_force_count, brute_force_count_slab, brute_force_count_with_budget, DEFAULT_BUDGET};
pub use interpolate::{interpolate_quasi, interpolate_quasi_with, lagrange_interpolate, sample_points, Counter};
pub use poly::Polynomial;
pub use quasi::{check_gcd_property, verify_minimum_period, QuasiPolynomial};
pub use snf::{snf_count, DivisorTable};
