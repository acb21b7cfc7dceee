//! Group definition text format.
//!
//! ```text
//! # cyclic group of order 6
//! degree 6
//! (1 2 3 4 5 6)
//! ```
//!
//! The first non-comment line gives the degree (`degree N` or just `N`);
//! every further line is one generator in disjoint-cycle notation with
//! 1-based points. `#` starts a comment. Points within a cycle may be
//! separated by whitespace or commas; `()` is the identity.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{PermGroup, Permutation};

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_degree(line: &str, lineno: usize) -> Result<usize> {
    let rest = line.strip_prefix("degree").unwrap_or(line).trim();
    let degree: usize = rest.parse().map_err(|_| Error::parse(lineno, format!("expected a degree, found {line:?}")))?;
    if degree == 0 {
        return Err(Error::EmptyDegree);
    }
    Ok(degree)
}

/// Parses one generator in cycle notation with 1-based points.
pub fn parse_cycles(text: &str, degree: usize, lineno: usize) -> Result<Permutation> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::parse(lineno, format!("expected '(' in {text:?}")));
        };
        let close = body.find(')').ok_or_else(|| Error::parse(lineno, format!("unclosed cycle in {text:?}")))?;
        let mut cycle = Vec::new();
        for token in body[..close].split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let point: usize = token.parse().map_err(|_| Error::parse(lineno, format!("bad point {token:?}")))?;
            if point == 0 || point > degree {
                return Err(Error::parse(lineno, format!("point {point} outside 1..={degree}")));
            }
            cycle.push(point as u32 - 1);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
        .map_err(|_| Error::parse(lineno, format!("cycles are not disjoint in {text:?}")))
}

pub fn parse_group(text: &str) -> Result<PermGroup> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        match degree {
            None => degree = Some(parse_degree(line, i + 1)?),
            Some(d) => gens.push(parse_cycles(line, d, i + 1)?),
        }
    }
    let degree = degree.ok_or_else(|| Error::parse(0, "missing degree line"))?;
    PermGroup::from_generators(gens, degree)
}

pub fn write_group(group: &PermGroup, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "degree {}", group.degree());
    for g in group.generators() {
        let _ = writeln!(out, "{g}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a5() {
        let g = parse_group("# A5\n5\n(1 2 3 4 5)\n(1,2,3)  # three-cycle\n").unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(g.degree(), 5);
    }

    #[test]
    fn round_trip() {
        let g = parse_group("degree 6\n(1 2)(3 4 5)\n()\n").unwrap();
        let text = write_group(&g, Some("test"));
        let h = parse_group(&text).unwrap();
        assert_eq!(g.generators(), h.generators());
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_group("3\n(1 2 4)\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(parse_group("# nothing\n").is_err());
        assert!(matches!(parse_group("0\n"), Err(Error::EmptyDegree)));
        assert!(parse_group("3\n(1 2)(2 3)\n").is_err());
        assert!(parse_group("3\n1 2\n").is_err());
    }
}
