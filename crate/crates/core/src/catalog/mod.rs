//! Named groups: the nonabelian simple EPPO groups, the `PSL(2, q)` family
//! and the sharply 2-transitive group of degree 9.

mod builders;

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::{divisors, gcd, is_prime, prime_power};
use crate::criteria::spectrum;
use crate::perm::PermGroup;
use crate::records::{join, Records};
use crate::{Error, Limits, Result};

pub use builders::{a5, m9, m9_quaternion, psl2, psl3_4, suzuki, suzuki_matrices};

/// Spectra regenerated by `eppo catalog fixture` from exhaustive runs.
pub const BUNDLED_FIXTURE: &str = include_str!("../../fixtures/catalog.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builder {
    A5,
    Psl2(u64),
    Psl3Of4,
    Suzuki(u64),
    M9,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub builder: Builder,
    /// From the closed-form order formula, not from the construction.
    pub expected_order: u64,
    pub degree: usize,
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / gcd(2, q - 1)
}

pub fn psl3_order(q: u64) -> u64 {
    q.pow(3) * (q.pow(3) - 1) * (q * q - 1) / gcd(3, q - 1)
}

pub fn suzuki_order(q: u64) -> u64 {
    q * q * (q * q + 1) * (q - 1)
}

/// Every element order of `Sz(q)` divides one of `4, q - 1, q ± sqrt(2q) + 1`.
pub fn suzuki_spectrum_bound(q: u64) -> BTreeSet<u64> {
    let r = (2 * q).isqrt();
    [4, q - 1, q + r + 1, q - r + 1].into_iter().flat_map(divisors).collect()
}

impl CatalogEntry {
    fn new(builder: Builder) -> Self {
        let (name, expected_order, degree) = match builder {
            Builder::A5 => ("A5".to_string(), 60, 5),
            Builder::Psl2(q) => (format!("PSL2({q})"), psl2_order(q), q as usize + 1),
            Builder::Psl3Of4 => ("PSL3(4)".to_string(), psl3_order(4), 21),
            Builder::Suzuki(q) => (format!("Sz({q})"), suzuki_order(q), (q * q + 1) as usize),
            Builder::M9 => ("M9".to_string(), 72, 9),
        };
        CatalogEntry { name, builder, expected_order, degree }
    }

    pub fn build(&self) -> Result<PermGroup> {
        match self.builder {
            Builder::A5 => Ok(a5()),
            Builder::Psl2(q) => psl2(q),
            Builder::Psl3Of4 => Ok(psl3_4()),
            Builder::Suzuki(q) => suzuki(q),
            Builder::M9 => Ok(m9()),
        }
    }

    /// The spectrum recorded in `fixture`, if any.
    pub fn expected_spectrum(&self, fixture: &Fixture) -> Option<BTreeSet<u64>> {
        fixture.spectrum(&self.name)
    }

    /// A set every element order must lie in, for groups too large to enumerate.
    pub fn spectrum_bound(&self) -> Option<BTreeSet<u64>> {
        match self.builder {
            Builder::Suzuki(q) => Some(suzuki_spectrum_bound(q)),
            _ => None,
        }
    }
}

/// The eight nonabelian simple EPPO groups.
pub fn simple_eppo_list() -> Vec<CatalogEntry> {
    [
        Builder::A5,
        Builder::Psl2(7),
        Builder::Psl2(8),
        Builder::Psl2(9),
        Builder::Psl2(17),
        Builder::Psl3Of4,
        Builder::Suzuki(8),
        Builder::Suzuki(32),
    ]
    .into_iter()
    .map(CatalogEntry::new)
    .collect()
}

/// The simple EPPO groups followed by M9.
pub fn entries() -> Vec<CatalogEntry> {
    let mut all = simple_eppo_list();
    all.push(CatalogEntry::new(Builder::M9));
    all
}

/// Resolves names such as `A5`, `PSL2(17)`, `PSL(2,17)`, `PSL3(4)`, `Sz8`,
/// `Sz(32)` and `M9`, ignoring case and spaces.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_uppercase();
    let unknown = || Error::UnknownCatalog(name.to_string());
    let builder = match key.as_str() {
        "A5" => Builder::A5,
        "M9" => Builder::M9,
        "PSL3(4)" | "PSL(3,4)" => Builder::Psl3Of4,
        "SZ8" | "SZ(8)" => Builder::Suzuki(8),
        "SZ32" | "SZ(32)" => Builder::Suzuki(32),
        _ => {
            let q = key
                .strip_prefix("PSL2(")
                .or_else(|| key.strip_prefix("PSL(2,"))
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(unknown)?;
            let q: u64 = q.parse().map_err(|_| unknown())?;
            if prime_power(q).is_none()
                || q < 2
                || q > u16::MAX as u64
                || (!is_prime(q) && crate::gf::Field::of_size(q).is_err())
            {
                return Err(Error::UnknownCatalog(format!("{name} (unsupported field size {q})")));
            }
            Builder::Psl2(q)
        }
    };
    Ok(CatalogEntry::new(builder))
}

/// Stored orders and spectra, as `key: value` records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    records: Records,
}

impl Fixture {
    pub fn bundled() -> Self {
        Fixture::parse(BUNDLED_FIXTURE)
    }

    pub fn parse(text: &str) -> Self {
        Fixture { records: Records::parse(text) }
    }

    fn numbers(&self, key: &str) -> Option<BTreeSet<u64>> {
        let v = self.records.get(key)?;
        v.split(',').map(|x| x.trim().parse().ok()).collect()
    }

    pub fn spectrum(&self, name: &str) -> Option<BTreeSet<u64>> {
        self.numbers(&format!("{name}.spectrum"))
    }

    pub fn order(&self, name: &str) -> Option<u64> {
        self.records.get(&format!("{name}.order"))?.parse().ok()
    }
}

/// Regenerates the fixture by enumerating every entry within the threshold.
pub fn generate_fixture(limits: &Limits) -> Result<String> {
    let mut out = Records::new();
    for entry in entries() {
        if entry.expected_order > limits.enumeration {
            continue;
        }
        let group = entry.build()?;
        let s = spectrum(&group, limits)?;
        out.push(format!("{}.order", entry.name), group.order());
        out.push(format!("{}.spectrum", entry.name), join(&s.orders));
    }
    Ok(format!("# Generated by `eppo catalog fixture`; each spectrum is an exhaustive enumeration.\n{out}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list() {
        let orders: Vec<u64> = simple_eppo_list().iter().map(|e| e.expected_order).collect();
        assert_eq!(orders, [60, 168, 504, 360, 2448, 20160, 29120, 32537600]);
        assert_eq!(entries().len(), 9);
    }

    #[test]
    fn names() {
        assert_eq!(lookup("sz8").unwrap().builder, Builder::Suzuki(8));
        assert_eq!(lookup("Sz(32)").unwrap().expected_order, 32537600);
        assert_eq!(lookup("PSL2(17)").unwrap().builder, Builder::Psl2(17));
        assert_eq!(lookup("psl(2, 31)").unwrap().degree, 32);
        assert_eq!(lookup("PSL(3,4)").unwrap().name, "PSL3(4)");
        assert!(lookup("PSL2(6)").is_err());
        assert!(lookup("PSL2(27)").is_err());
        assert!(lookup("J1").is_err());
    }

    #[test]
    fn suzuki_bound() {
        assert_eq!(suzuki_spectrum_bound(32), BTreeSet::from([1, 2, 4, 5, 25, 31, 41]));
        assert_eq!(suzuki_spectrum_bound(8), BTreeSet::from([1, 2, 4, 5, 7, 13]));
    }

    #[test]
    fn bundled_fixture_is_current() {
        let regenerated = generate_fixture(&Limits::default()).unwrap();
        assert_eq!(Fixture::parse(&regenerated), Fixture::bundled());
    }
}
