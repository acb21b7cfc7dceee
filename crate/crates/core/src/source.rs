//! Group sources: `file:<path>`, `catalog:<name>` and constructor specs.

use std::cell::OnceCell;
use std::fmt;
use std::path::Path;

use crate::catalog::{self, CatalogEntry};
use crate::constructors::{parse_construction, TableElement, TableGroup};
use crate::criteria::{EppoVerdict, Spectrum, Witness};
use crate::gf::action::linear_action;
use crate::gf::format::parse_matrix_group;
use crate::perm::format::parse_group;
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

enum Repr {
    Perm(PermGroup),
    Table { group: TableGroup, regular: OnceCell<PermGroup> },
}

/// A loaded group together with its source text.
pub struct LoadedGroup {
    pub label: String,
    pub catalog: Option<CatalogEntry>,
    repr: Repr,
}

impl fmt::Debug for LoadedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LoadedGroup").field("label", &self.label).field("order", &self.order()).finish()
    }
}

impl LoadedGroup {
    pub fn from_perm(label: impl Into<String>, group: PermGroup) -> Self {
        LoadedGroup { label: label.into(), catalog: None, repr: Repr::Perm(group) }
    }

    pub fn from_table(label: impl Into<String>, group: TableGroup) -> Self {
        LoadedGroup { label: label.into(), catalog: None, repr: Repr::Table { group, regular: OnceCell::new() } }
    }

    pub fn order(&self) -> u64 {
        match &self.repr {
            Repr::Perm(g) => g.order(),
            Repr::Table { group, .. } => crate::group::FiniteGroup::order(group),
        }
    }

    pub fn table_group(&self) -> Option<&TableGroup> {
        match &self.repr {
            Repr::Table { group, .. } => Some(group),
            Repr::Perm(_) => None,
        }
    }

    /// The permutation group; table groups use their right regular
    /// representation, built on first use.
    pub fn perm(&self) -> Result<&PermGroup> {
        match &self.repr {
            Repr::Perm(g) => Ok(g),
            Repr::Table { group, regular } => {
                if let Some(g) = regular.get() {
                    return Ok(g);
                }
                let g = group.to_perm_group()?;
                Ok(regular.get_or_init(|| g))
            }
        }
    }

    /// How an element of [`LoadedGroup::perm`] is shown to users.
    pub fn describe(&self, p: &Permutation) -> String {
        match &self.repr {
            Repr::Perm(_) => p.to_string(),
            Repr::Table { group, .. } => group.element_of(p).to_string(),
        }
    }

    pub fn describe_verdict(&self, v: EppoVerdict<Permutation>) -> EppoVerdict<String> {
        v.map(|p| self.describe(&p))
    }

    pub fn describe_spectrum(&self, s: Spectrum<Permutation>) -> Spectrum<String> {
        s.map(|p| self.describe(&p))
    }

    pub fn describe_witness(&self, w: Witness<Permutation>) -> Witness<String> {
        w.map(|p| self.describe(&p))
    }
}

/// Shown for table-group elements sampled without the regular representation.
pub fn describe_table_element(e: &TableElement) -> String {
    e.to_string()
}

pub const CONSTRUCTOR_KEYWORDS: &[&str] = &["metacyclic", "semidirect", "genquat"];

/// Whether `token` begins a new source on a command line.
pub fn starts_source(token: &str) -> bool {
    token.starts_with("file:")
        || token.starts_with("catalog:")
        || CONSTRUCTOR_KEYWORDS.iter().any(|k| token == *k || token.starts_with(&format!("{k} ")))
}

/// Groups command-line tokens into sources: `key=value` tokens after a
/// constructor keyword belong to it.
pub fn split_sources(tokens: &[String]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for t in tokens {
        match out.last_mut() {
            Some(last) if !starts_source(t) => {
                last.push(' ');
                last.push_str(t);
            }
            _ => out.push(t.clone()),
        }
    }
    out
}

/// Loads a group from a file: a permutation group (`degree N` then cycles)
/// or a matrix group (`GF(q)` then matrices), the latter acting on nonzero vectors.
pub fn load_file(path: &Path) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })?;
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    if first.is_some_and(|l| l.starts_with("GF(") || l.starts_with("gf(")) {
        let (field, gens) = parse_matrix_group(&text)?;
        linear_action(&field, &gens)
    } else {
        parse_group(&text)
    }
}

pub fn load(source: &str) -> Result<LoadedGroup> {
    let source = source.trim();
    if let Some(path) = source.strip_prefix("file:") {
        return Ok(LoadedGroup::from_perm(source, load_file(Path::new(path))?));
    }
    if let Some(name) = source.strip_prefix("catalog:") {
        let entry = catalog::lookup(name)?;
        let group = entry.build()?;
        let mut loaded = LoadedGroup::from_perm(format!("catalog:{}", entry.name), group);
        loaded.catalog = Some(entry);
        return Ok(loaded);
    }
    match parse_construction(source)? {
        Some(c) => Ok(LoadedGroup::from_table(source, c.build()?)),
        None => Err(Error::Source(format!(
            "`{source}` is not a group source (use file:<path>, catalog:<name> or a constructor spec)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting() {
        let toks: Vec<String> =
            ["metacyclic", "p=5", "a=1", "q=2", "b=2", "catalog:A5", "semidirect q=3 m=2 H=Q8", "genquat", "n=3"]
                .iter()
                .map(|s| s.to_string())
                .collect();
        assert_eq!(
            split_sources(&toks),
            ["metacyclic p=5 a=1 q=2 b=2", "catalog:A5", "semidirect q=3 m=2 H=Q8", "genquat n=3"]
        );
    }

    #[test]
    fn loading() {
        assert_eq!(load("catalog:A5").unwrap().order(), 60);
        let g = load("metacyclic p=5 a=1 q=2 b=2 r=2").unwrap();
        assert_eq!(g.order(), 20);
        assert_eq!(g.perm().unwrap().order(), 20);
        assert!(load("nonsense").is_err());
        assert!(matches!(load("file:/nonexistent/x.grp"), Err(Error::Io { .. })));
    }

    #[test]
    fn files() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("s3.grp");
        std::fs::write(&p, "# S3\ndegree 3\n(1 2 3)\n(1 2)\n").unwrap();
        assert_eq!(load(&format!("file:{}", p.display())).unwrap().order(), 6);
        let m = dir.path().join("sl23.mat");
        std::fs::write(&m, "GF(3)\n1 1 0 1\n1 0 1 1\n").unwrap();
        assert_eq!(load(&format!("file:{}", m.display())).unwrap().order(), 24);
    }
}
