//! Characteristic quasi-polynomials of central integral hyperplane
//! arrangements.
//!
//! For an integer matrix `S` whose columns are hyperplane normals, the
//! number of `x ∈ Z_q^m` with `x . s_j ≢ 0 (mod q)` for every column is a
//! quasi-polynomial in `q`. This crate builds the Coxeter matrices of types
//! A/B/C/D and their diagonal deformations, computes elementary divisors and
//! the lcm period, counts the complement two independent ways, interpolates
//! the quasi-polynomial exactly, and evaluates closed-form constituents.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arrangements;
pub mod closedforms;
pub mod counting;
pub mod error;
pub mod intlinalg;

pub use arrangements::{gen_coxeter, gen_deform_a, gen_deform_d, DeformSpec, Deformation, Family, IntMatrix};
pub use closedforms::{chi_coxeter, chi_deform_a, chi_deform_d, chi_deform_d_tm, quasi_deform_a, quasi_deform_d};
pub use counting::{
    brute_force_count, check_gcd_property, interpolate_quasi, snf_count, verify_minimum_period, Counter,
    Polynomial, QuasiPolynomial,
};
pub use error::{Error, Result};
pub use intlinalg::{column_submatrix, known_period, lcm_period, smith_divisors, ElementaryDivisors, Period};

pub use num_bigint::BigInt;
