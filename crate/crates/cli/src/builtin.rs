//! Built-in arrangement families addressable from the command line.

use std::fmt;

use quasiarr_core::{
    chi_coxeter, gen_coxeter, gen_deform_a, gen_deform_d, quasi_deform_a, quasi_deform_d, DeformSpec, Deformation,
    Family, IntMatrix, QuasiPolynomial,
};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinSpec {
    Coxeter(Family, usize),
    Deform(Deformation, DeformSpec),
}

impl BuiltinSpec {
    /// `family` is one of `A`, `B`, `C`, `D`, `Adeform`, `Ddeform`. For
    /// `Ddeform` a missing `r` defaults to the number of leading even
    /// entries of `s`.
    pub fn from_parts(family: &str, m: usize, s: Option<&[u64]>, r: Option<usize>) -> Result<Self, CliError> {
        match family {
            "Adeform" => {
                let s = s.unwrap_or_default().to_vec();
                Ok(BuiltinSpec::Deform(Deformation::A, DeformSpec::type_a(m, s)?))
            }
            "Ddeform" => {
                let s = s.unwrap_or_default().to_vec();
                let r = r.unwrap_or_else(|| s.iter().take_while(|&&v| v % 2 == 0).count());
                Ok(BuiltinSpec::Deform(Deformation::D, DeformSpec::type_d(m, r, s)?))
            }
            other => {
                let family: Family = other
                    .parse()
                    .map_err(|_| CliError::usage(format!("unknown family `{other}` (A, B, C, D, Adeform, Ddeform)")))?;
                if s.is_some() || r.is_some() {
                    return Err(CliError::usage("--s and --r only apply to Adeform and Ddeform"));
                }
                Ok(BuiltinSpec::Coxeter(family, m))
            }
        }
    }

    pub fn m(&self) -> usize {
        match self {
            BuiltinSpec::Coxeter(_, m) => *m,
            BuiltinSpec::Deform(_, spec) => spec.m(),
        }
    }

    pub fn matrix(&self) -> Result<IntMatrix, CliError> {
        Ok(match self {
            BuiltinSpec::Coxeter(f, m) => gen_coxeter(*f, *m)?,
            BuiltinSpec::Deform(Deformation::A, spec) => gen_deform_a(spec)?,
            BuiltinSpec::Deform(Deformation::D, spec) => gen_deform_d(spec)?,
        })
    }

    /// Minimum period known in closed form.
    pub fn known_period(&self) -> u64 {
        match self {
            BuiltinSpec::Coxeter(Family::A, _) | BuiltinSpec::Coxeter(Family::B, 1) => 1,
            BuiltinSpec::Coxeter(_, _) => 2,
            BuiltinSpec::Deform(kind, spec) => quasiarr_core::known_period(spec, *kind),
        }
    }

    pub fn closed_form(&self) -> Result<QuasiPolynomial, CliError> {
        Ok(match self {
            BuiltinSpec::Coxeter(f, m) => chi_coxeter(*f, *m)?,
            BuiltinSpec::Deform(Deformation::A, spec) => quasi_deform_a(spec)?,
            BuiltinSpec::Deform(Deformation::D, spec) => quasi_deform_d(spec)?,
        })
    }
}

fn join(s: &[u64]) -> String {
    s.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for BuiltinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinSpec::Coxeter(family, m) => write!(f, "{family} m={m}"),
            BuiltinSpec::Deform(Deformation::A, spec) => write!(f, "Adeform m={} s={}", spec.m(), join(spec.s())),
            BuiltinSpec::Deform(Deformation::D, spec) => {
                write!(f, "Ddeform m={} r={} s={}", spec.m(), spec.r(), join(spec.s()))
            }
        }
    }
}
