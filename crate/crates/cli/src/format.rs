//! Text formats.
//!
//! Matrix files: the first non-comment line holds `m n`, followed by `m`
//! lines of `n` whitespace-separated integers (row-major). Lines starting
//! with `#` and blank lines are ignored.
//!
//! Quasi-polynomial listings: `period <rho>` followed by one
//! `k=<k>: <polynomial>` line per residue.

use std::fmt::Write as _;

use quasiarr_core::{BigInt, IntMatrix, QuasiPolynomial};

use crate::error::CliError;

pub fn parse_matrix(text: &str) -> Result<IntMatrix, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| CliError::parse(0, "missing `m n` header"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| CliError::parse(header_line, format!("bad dimension `{t}`"))))
        .collect::<Result<_, _>>()?;
    let [rows, cols] = dims[..] else {
        return Err(CliError::parse(header_line, "header must be exactly two integers `m n`"));
    };

    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (ln, line) = lines.next().ok_or_else(|| CliError::parse(0, format!("expected {rows} rows")))?;
        let row: Vec<BigInt> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| CliError::parse(ln, format!("bad integer `{t}`"))))
            .collect::<Result<_, _>>()?;
        if row.len() != cols {
            return Err(CliError::parse(ln, format!("expected {cols} entries, found {}", row.len())));
        }
        entries.extend(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(CliError::parse(ln, "trailing data after the last row"));
    }
    Ok(IntMatrix::from_row_major(rows, cols, entries)?)
}

pub fn write_matrix(matrix: &IntMatrix) -> String {
    let mut out = format!("{} {}\n", matrix.rows(), matrix.cols());
    for i in 0..matrix.rows() {
        let row: Vec<String> = matrix.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_quasi(qp: &QuasiPolynomial) -> String {
    let mut out = format!("period {}\n", qp.period());
    for (k, c) in qp.constituents().iter().enumerate() {
        writeln!(out, "k={}: {c}", k + 1).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use quasiarr_core::{gen_coxeter, Family};

    #[test]
    fn b2_text() {
        let b2 = gen_coxeter(Family::B, 2).unwrap();
        assert_eq!(write_matrix(&b2), "2 4\n1 0 1 1\n0 1 -1 1\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# B_2\n2 4\n\n1 0 1 1\n# second row\n0 1 -1 1\n";
        assert_eq!(parse_matrix(text).unwrap(), gen_coxeter(Family::B, 2).unwrap());
    }

    #[test]
    fn big_entries_survive() {
        let text = "1 2\n123456789012345678901234567890 -1\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(write_matrix(&m), text);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("2\n1 2\n").is_err());
        assert!(parse_matrix("2 2\n1 0\n").is_err());
        assert!(parse_matrix("1 2\n1 x\n").is_err());
        assert!(parse_matrix("1 2\n1 2 3\n").is_err());
        assert!(parse_matrix("1 1\n1\n1\n").is_err());
        let zero = parse_matrix("2 2\n1 0\n0 0\n").unwrap_err();
        assert!(zero.to_string().contains("zero column"), "{zero}");
    }
}
