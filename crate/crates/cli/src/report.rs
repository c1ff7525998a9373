//! Cross-method verification report.

use std::fmt::Write as _;
use std::time::Instant;

use num_traits::ToPrimitive;
use quasiarr_core::intlinalg::FULL_ENUMERATION_LIMIT;
use quasiarr_core::{BigInt, Error};
use serde::Serialize;

use crate::builtin::BuiltinSpec;
use crate::error::CliError;
use crate::parallel::{par_brute_force_count, par_divisor_table, par_lcm_period};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub q: u64,
    pub brute: Option<i128>,
    pub snf: Option<i128>,
    pub closed: Option<i128>,
}

impl Row {
    /// True when every present column holds the same value.
    pub fn agrees(&self) -> bool {
        let mut present = [self.brute, self.snf, self.closed].into_iter().flatten();
        match present.next() {
            Some(first) => present.all(|v| v == first),
            None => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub spec: String,
    pub rho: u64,
    pub rows: Vec<Row>,
    pub verdict: Verdict,
    pub ms: u64,
}

fn narrow(v: BigInt) -> Result<i128, CliError> {
    v.to_i128().ok_or_else(|| CliError::usage(format!("count {v} does not fit the report")))
}

/// Runs brute force, the SNF formula and the closed form for every
/// `q in 1..=qmax`. A method out of budget contributes `None` columns.
pub fn run_verify(spec: &BuiltinSpec, qmax: u64, budget: u64) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let matrix = spec.matrix()?;
    let closed = spec.closed_form()?;

    let rho = if matrix.cols() <= FULL_ENUMERATION_LIMIT {
        par_lcm_period(&matrix, None)?.to_u64().ok_or_else(|| CliError::usage("period does not fit in u64"))?
    } else {
        spec.known_period()
    };
    let table = match par_divisor_table(&matrix) {
        Ok(t) => Some(t),
        Err(Error::TooManyColumns { .. }) => None,
        Err(e) => return Err(e.into()),
    };

    let mut rows = Vec::with_capacity(qmax as usize);
    for q in 1..=qmax {
        let brute = match par_brute_force_count(&matrix, q, budget) {
            Ok(v) => Some(narrow(v)?),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        let snf = table.as_ref().map(|t| t.count(q)).transpose()?.map(narrow).transpose()?;
        let closed = Some(narrow(closed.eval(q))?);
        rows.push(Row { q, brute, snf, closed });
    }

    let verdict = if rows.iter().all(Row::agrees) { Verdict::Pass } else { Verdict::Fail };
    Ok(RunReport {
        spec: spec.to_string(),
        rho,
        rows,
        verdict,
        ms: start.elapsed().as_millis() as u64,
    })
}

fn cell(v: Option<i128>) -> String {
    v.map_or_else(|| "-".to_owned(), |v| v.to_string())
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("spec: {}\nrho = {}\n", self.spec, self.rho);
        let _ = writeln!(out, "{:>4} {:>12} {:>12} {:>12}", "q", "brute", "snf", "closed");
        for r in &self.rows {
            let mark = if r.agrees() { "" } else { "  MISMATCH" };
            let _ = writeln!(out, "{:>4} {:>12} {:>12} {:>12}{mark}", r.q, cell(r.brute), cell(r.snf), cell(r.closed));
        }
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        };
        let _ = writeln!(out, "verdict: {verdict} ({} ms)", self.ms);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use quasiarr_core::counting::DEFAULT_BUDGET;

    #[test]
    fn agreement_ignores_missing_columns() {
        let row = |b, s, c| Row { q: 1, brute: b, snf: s, closed: c };
        assert!(row(Some(3), None, Some(3)).agrees());
        assert!(row(None, None, None).agrees());
        assert!(!row(Some(3), Some(4), Some(3)).agrees());
    }

    #[test]
    fn json_field_names() {
        let spec = BuiltinSpec::from_parts("B", 2, None, None).unwrap();
        let report = run_verify(&spec, 3, DEFAULT_BUDGET).unwrap();
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        let mut keys: Vec<_> = value.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["ms", "rho", "rows", "spec", "verdict"]);
        let mut row_keys: Vec<_> = value["rows"][0].as_object().unwrap().keys().cloned().collect();
        row_keys.sort();
        assert_eq!(row_keys, ["brute", "closed", "q", "snf"]);
        assert_eq!(value["verdict"], "pass");
        assert_eq!(value["rows"][2]["brute"], 0);
    }
}
