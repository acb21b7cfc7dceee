//! Constructor spec strings such as `metacyclic p=7 a=1 q=3 b=1 r=2`.

use std::collections::BTreeMap;
use std::path::Path;

use crate::gf::format::parse_matrix_group;
use crate::gf::{Field, Matrix};
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

use super::metacyclic::{metacyclic_group, MetacyclicSpec};
use super::quaternion::generalized_quaternion;
use super::semidirect::{semidirect_product, SemidirectSpec, ACTING_CAP};
use super::table::TableGroup;

/// Names accepted for `H` in `semidirect` specs, besides `file:<path>`.
pub const NAMED_ACTIONS: &[&str] = &["1", "C2", "C3", "C4", "C6", "C8", "Q8", "swap", "diag", "C2-trivial", "C4-sign"];

#[derive(Clone, Debug)]
pub enum Construction {
    Metacyclic(MetacyclicSpec),
    Semidirect(SemidirectSpec),
    Quaternion(u32),
}

impl Construction {
    pub fn build(&self) -> Result<TableGroup> {
        match self {
            Construction::Metacyclic(spec) => Ok(metacyclic_group(spec)),
            Construction::Semidirect(spec) => semidirect_product(spec, ACTING_CAP),
            Construction::Quaternion(n) => generalized_quaternion(*n),
        }
    }
}

fn parse_pairs(tokens: &[&str]) -> Result<BTreeMap<String, String>> {
    tokens
        .iter()
        .map(|t| {
            t.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| Error::Source(format!("expected key=value, found `{t}`")))
        })
        .collect()
}

struct Args {
    keyword: &'static str,
    pairs: BTreeMap<String, String>,
}

impl Args {
    fn take(&mut self, key: &str) -> Option<String> {
        self.pairs.remove(key)
    }

    fn number(&mut self, key: &str) -> Result<Option<u64>> {
        self.take(key)
            .map(|v| {
                v.parse().map_err(|_| {
                    Error::Source(format!("{}: `{key}` must be a non-negative integer, found `{v}`", self.keyword))
                })
            })
            .transpose()
    }

    fn required(&mut self, key: &str) -> Result<u64> {
        self.number(key)?.ok_or_else(|| Error::Source(format!("{}: missing `{key}=`", self.keyword)))
    }

    fn small(&mut self, key: &str) -> Result<u32> {
        let v = self.required(key)?;
        u32::try_from(v).map_err(|_| Error::Source(format!("{}: `{key}` is too large", self.keyword)))
    }

    fn finish(self) -> Result<()> {
        match self.pairs.keys().next() {
            Some(k) => Err(Error::Source(format!("{}: unknown parameter `{k}`", self.keyword))),
            None => Ok(()),
        }
    }
}

/// Parses a constructor spec. Returns `Ok(None)` when the text does not
/// start with a constructor keyword.
pub fn parse_construction(text: &str) -> Result<Option<Construction>> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let Some((&head, rest)) = tokens.split_first() else {
        return Ok(None);
    };
    let keyword = match head {
        "metacyclic" => "metacyclic",
        "semidirect" => "semidirect",
        "genquat" => "genquat",
        _ => return Ok(None),
    };
    let mut args = Args { keyword, pairs: parse_pairs(rest)? };
    let construction = match keyword {
        "metacyclic" => {
            let p = args.required("p")?;
            let alpha = args.small("a")?;
            let q = args.required("q")?;
            let beta = args.small("b")?;
            let r = args.number("r")?;
            Construction::Metacyclic(MetacyclicSpec::new(p, alpha, q, beta, r)?)
        }
        "semidirect" => {
            let q = args.required("q")?;
            let m = args.small("m")? as usize;
            let h = args.take("H").ok_or_else(|| Error::Source("semidirect: missing `H=`".into()))?;
            Construction::Semidirect(semidirect_spec(q, m, &h)?)
        }
        _ => Construction::Quaternion(args.small("n")?),
    };
    args.finish()?;
    Ok(Some(construction))
}

/// The semidirect spec for `GF(q)^m` and an `H` from [`NAMED_ACTIONS`] or `file:<path>`.
pub fn semidirect_spec(q: u64, m: usize, h: &str) -> Result<SemidirectSpec> {
    let field = Field::of_size(q)?;
    if m == 0 {
        return Err(Error::Source("semidirect: m must be at least 1".into()));
    }
    if let Some(path) = h.strip_prefix("file:") {
        let text =
            std::fs::read_to_string(path).map_err(|source| Error::Io { path: Path::new(path).into(), source })?;
        let (file_field, gens) = parse_matrix_group(&text)?;
        if file_field.size() as u64 != q || file_field.modulus() != field.modulus() {
            return Err(Error::Source(format!("semidirect: {path} is over {file_field}, expected {field}")));
        }
        if gens.iter().any(|g| g.rows() != m) {
            return Err(Error::Source(format!("semidirect: {path} does not contain {m}x{m} matrices")));
        }
        return SemidirectSpec::new(field, gens, h);
    }
    named_action(field, m, h)
}

fn unsupported(name: &str, field: &Field, m: usize) -> Error {
    Error::Source(format!("semidirect: H={name} is not available on {field}^{m}"))
}

fn named_action(field: Field, m: usize, name: &str) -> Result<SemidirectSpec> {
    let q = field.size() as u64;
    let int = |rows: &[&[i64]]| Matrix::from_ints(&field, rows);
    let scalar = |x| Matrix::diagonal(&vec![x; m]);
    let minus_one = field.from_int(-1);
    let gens = match (name, m) {
        ("1", _) => vec![Matrix::identity(m)],
        ("C2", _) if q % 2 == 1 => vec![scalar(minus_one)],
        ("C3", 2) => vec![int(&[&[0, -1], &[1, -1]])?],
        ("C4", 1) if (q - 1).is_multiple_of(4) => {
            vec![scalar(field.pow(field.primitive_element(), ((q - 1) / 4) as i64))]
        }
        ("C4", 2) => vec![int(&[&[0, -1], &[1, 0]])?],
        ("C6", 2) => vec![int(&[&[0, 1], &[-1, 1]])?],
        ("C8", 2) if field.degree() == 1 && (q * q - 1).is_multiple_of(8) => {
            let square = Field::new(q, 2)?;
            let lower: Vec<_> = square.modulus()[..2].iter().map(|&c| field.from_int(c as i64)).collect();
            vec![Matrix::companion(&field, &lower).pow(&field, (q * q - 1) / 8)?]
        }
        ("Q8", 2) if q == 3 => vec![int(&[&[0, 2], &[1, 0]])?, int(&[&[1, 1], &[1, 2]])?],
        ("Q8", 2) if q == 5 => vec![int(&[&[2, 0], &[0, 3]])?, int(&[&[0, 4], &[1, 0]])?],
        ("swap", 2) => vec![int(&[&[0, 1], &[1, 0]])?],
        ("diag", 2) if q % 2 == 1 => vec![int(&[&[1, 0], &[0, -1]])?],
        ("C2-trivial", _) => return abstract_cyclic(field, 2, Matrix::identity(m), name),
        ("C4-sign", _) if q % 2 == 1 => return abstract_cyclic(field, 4, scalar(minus_one), name),
        _ => return Err(unsupported(name, &field, m)),
    };
    SemidirectSpec::new(field, gens, name)
}

/// A cyclic group of order `n` acting through a single matrix.
fn abstract_cyclic(field: Field, n: usize, image: Matrix, name: &str) -> Result<SemidirectSpec> {
    let images = (1..=n as u32).map(|i| i % n as u32).collect();
    let h = PermGroup::from_generators(vec![Permutation::from_images(images)?], n)?;
    SemidirectSpec::with_abstract(field, h, vec![image], name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::fixed_point_free;
    use crate::group::FiniteGroup;

    fn build(text: &str) -> TableGroup {
        parse_construction(text).unwrap().unwrap().build().unwrap()
    }

    #[test]
    fn parses_specs() {
        assert_eq!(build("metacyclic p=7 a=1 q=3 b=1 r=2").order(), 21);
        assert_eq!(build("metacyclic p=7 a=1 q=3 b=1").order(), 21);
        assert_eq!(build("semidirect q=3 m=2 H=Q8").order(), 72);
        assert_eq!(build("genquat n=4").order(), 16);
        assert!(parse_construction("catalog:A5").unwrap().is_none());
        assert!(parse_construction("genquat").is_err());
        assert!(parse_construction("genquat n=3 x=1").is_err());
        assert!(parse_construction("metacyclic p=5 a=1 q=3 b=1").is_err());
        assert!(parse_construction("semidirect q=3 m=1 H=Q8").is_err());
    }

    #[test]
    fn named_action_orders() {
        let cases = [
            (3, 1, "C2", 2),
            (3, 2, "C4", 4),
            (3, 2, "C8", 8),
            (3, 2, "Q8", 8),
            (5, 1, "C4", 4),
            (5, 2, "C3", 3),
            (5, 2, "C6", 6),
            (5, 2, "C8", 8),
            (5, 2, "Q8", 8),
            (5, 1, "C4-sign", 4),
        ];
        for (q, m, name, order) in cases {
            let spec = semidirect_spec(q, m, name).unwrap();
            let r = fixed_point_free(&spec, 1000).unwrap();
            assert_eq!(r.h_order, order, "{name} over GF({q})^{m}");
        }
    }

    #[test]
    fn matrix_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c4.mat");
        std::fs::write(&path, "GF(3)\n0 2 1 0\n").unwrap();
        let spec = semidirect_spec(3, 2, &format!("file:{}", path.display())).unwrap();
        assert_eq!(semidirect_product(&spec, 100).unwrap().order(), 36);
        assert!(semidirect_spec(5, 2, &format!("file:{}", path.display())).is_err());
    }
}
