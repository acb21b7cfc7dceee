//! Matrix-group definition text format.
//!
//! ```text
//! # Q8 inside GL(2, 3)
//! GF(3)
//! 0 2 1 0
//! 1 1 1 2
//! ```
//!
//! The first non-comment line names the field as `GF(p)`, `GF(p^k)` or
//! `GF(q)`. Every further line is one square generator with its entries in
//! row-major order. An entry is a coefficient tuple `(c0,c1,...)` from the
//! constant term up; in prime fields a bare integer is also accepted.

use std::fmt::Write as _;

use crate::arith::prime_power;
use crate::error::{Error, Result};

use super::{Field, FieldElement, Matrix};

pub fn parse_field(line: &str, lineno: usize) -> Result<Field> {
    let inner = line
        .trim()
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(lineno, format!("expected GF(...), found {line:?}")))?;
    let bad = || Error::parse(lineno, format!("bad field {line:?}"));
    let (p, k) = match inner.split_once('^') {
        Some((p, k)) => (p.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?),
        None => prime_power(inner.trim().parse().map_err(|_| bad())?).ok_or_else(bad)?,
    };
    Field::new(p, k)
}

fn parse_entry(field: &Field, token: &str, lineno: usize) -> Result<FieldElement> {
    let bad = |msg: &str| Error::parse(lineno, format!("{msg}: {token:?}"));
    let coeffs: Vec<u32> = match token.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        Some(body) => {
            body.split(',').map(|c| c.trim().parse().map_err(|_| bad("bad coefficient"))).collect::<Result<_>>()?
        }
        None => vec![token.parse().map_err(|_| bad("bad entry"))?],
    };
    field.from_coefficients(&coeffs).map_err(|_| bad("entry outside the field"))
}

fn tokens(line: &str) -> Vec<String> {
    // commas inside tuples are kept; whitespace separates entries
    let mut out = Vec::new();
    let mut current = String::new();
    let mut depth = 0;
    for ch in line.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                current.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
            }
            c if c.is_whitespace() => {}
            c => current.push(c),
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

pub fn parse_matrix_group(text: &str) -> Result<(Field, Vec<Matrix>)> {
    let mut field = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match &field {
            None => field = Some(parse_field(line, i + 1)?),
            Some(f) => {
                let entries = tokens(line).iter().map(|t| parse_entry(f, t, i + 1)).collect::<Result<Vec<_>>>()?;
                let m = Matrix::square(entries).map_err(|e| Error::parse(i + 1, e.to_string()))?;
                if let Some(first) = gens.first() {
                    if Matrix::rows(first) != m.rows() {
                        return Err(Error::parse(i + 1, "generators of different sizes"));
                    }
                }
                gens.push(m);
            }
        }
    }
    let field = field.ok_or_else(|| Error::parse(0, "missing GF(...) line"))?;
    if gens.is_empty() {
        return Err(Error::parse(0, "no generators"));
    }
    Ok((field, gens))
}

pub fn write_matrix_group(field: &Field, gens: &[Matrix]) -> String {
    let mut out = format!("{field}\n");
    for g in gens {
        let entries: Vec<String> = g.entries().iter().map(|&e| field.display(e)).collect();
        let _ = writeln!(out, "{}", entries.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_q8_over_gf3() {
        let (f, gens) = parse_matrix_group("# Q8\nGF(3)\n0 2 1 0\n(1) (1) (1) (2)\n").unwrap();
        assert_eq!(f.size(), 3);
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[1], Matrix::from_ints(&f, &[&[1, 1], &[1, 2]]).unwrap());
    }

    #[test]
    fn parses_extension_tuples() {
        let (f, gens) = parse_matrix_group("GF(3^2)\n(0,1) (0) (0) (1,0)\n").unwrap();
        assert_eq!(f.size(), 9);
        assert_eq!(gens[0].get(0, 0), f.primitive_element());
        let text = write_matrix_group(&f, &gens);
        let (_, again) = parse_matrix_group(&text).unwrap();
        assert_eq!(again, gens);
        assert_eq!(parse_field("GF(9)", 1).unwrap().degree(), 2);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_matrix_group("GF(6)\n1\n").is_err());
        assert!(parse_matrix_group("GF(3)\n1 0 0\n").is_err());
        assert!(parse_matrix_group("GF(3)\n1 0 0 7\n").is_err());
        assert!(parse_matrix_group("GF(3)\n").is_err());
        assert!(parse_matrix_group("GF(3)\n1 0 0 1\n1\n").is_err());
    }
}
