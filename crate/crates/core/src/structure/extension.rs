use std::fmt;
use std::str::FromStr;

use crate::arith::{multiplicative_order, prime_power};
use crate::perm::GroupTable;
use crate::{Error, Result};

use super::ClauseReport;

/// Simple quotients `G/T` of a nonsolvable EPPO group by a nontrivial
/// normal 2-subgroup `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SimpleId {
    Psl2Of5,
    Psl2Of8,
    Psl2Of17,
    Sz8,
    Sz32,
}

impl SimpleId {
    pub const ALL: [SimpleId; 5] =
        [SimpleId::Psl2Of5, SimpleId::Psl2Of8, SimpleId::Psl2Of17, SimpleId::Sz8, SimpleId::Sz32];

    pub fn name(self) -> &'static str {
        match self {
            SimpleId::Psl2Of5 => "PSL2(5)",
            SimpleId::Psl2Of8 => "PSL2(8)",
            SimpleId::Psl2Of17 => "PSL2(17)",
            SimpleId::Sz8 => "Sz(8)",
            SimpleId::Sz32 => "Sz(32)",
        }
    }

    /// The number that must divide `|T| - 1`.
    pub fn divisor(self) -> u64 {
        match self {
            SimpleId::Psl2Of5 => 3 * 5,
            SimpleId::Psl2Of8 => 9 * 7,
            SimpleId::Psl2Of17 => 9 * 17,
            SimpleId::Sz8 => 5 * 7 * 13,
            SimpleId::Sz32 => 25 * 31 * 41,
        }
    }

    /// Bound on the nilpotency class of `T`. "Class length at most 2" is
    /// read as nilpotency class; it only accompanies the PSL2 quotients.
    pub fn class_bound(self) -> Option<usize> {
        match self {
            SimpleId::Psl2Of5 | SimpleId::Psl2Of8 | SimpleId::Psl2Of17 => Some(2),
            SimpleId::Sz8 | SimpleId::Sz32 => None,
        }
    }
}

impl fmt::Display for SimpleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SimpleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_uppercase();
        Ok(match key.as_str() {
            "PSL2(5)" | "PSL(2,5)" | "A5" => SimpleId::Psl2Of5,
            "PSL2(8)" | "PSL(2,8)" => SimpleId::Psl2Of8,
            "PSL2(17)" | "PSL(2,17)" => SimpleId::Psl2Of17,
            "SZ(8)" | "SZ8" => SimpleId::Sz8,
            "SZ(32)" | "SZ32" => SimpleId::Sz32,
            _ => return Err(Error::UnknownCatalog(format!("{s} has no extension constraint"))),
        })
    }
}

/// Whether the constraint's divisor divides `t_order - 1`, for `t_order` a
/// power of 2 greater than 1.
pub fn extension_constraint(id: SimpleId, t_order: u128) -> Result<bool> {
    if t_order < 2 || !t_order.is_power_of_two() {
        return Err(Error::Precondition(format!("|T| = {t_order} is not a nontrivial power of 2")));
    }
    Ok((t_order - 1).is_multiple_of(id.divisor() as u128))
}

/// Least `k >= 1` with `2^k` satisfying the constraint: the multiplicative
/// order of 2 modulo the divisor.
pub fn smallest_valid_exponent(id: SimpleId) -> u32 {
    multiplicative_order(2, id.divisor()).expect("divisors are odd") as u32
}

/// Checks a concrete normal 2-subgroup `T`: its order against the divisor
/// and, for the PSL2 quotients, its nilpotency class.
pub fn check_concrete_extension(id: SimpleId, t: &GroupTable) -> ClauseReport {
    let mut report = ClauseReport::new(format!("extension-{}", id.name()));
    let two_group = matches!(prime_power(t.order()), Some((2, _)));
    report.check("two-group", two_group, format!("|T| = {}", t.order()));
    if two_group {
        let ok = (t.order() - 1).is_multiple_of(id.divisor());
        report.check("divisibility", ok, format!("{} | {}", id.divisor(), t.order() - 1));
    }
    if let Some(bound) = id.class_bound() {
        let class = t.nilpotency_class(&t.whole());
        report.check("nilpotency-class", class.is_some_and(|c| c <= bound), format!("class {class:?}, bound {bound}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(extension_constraint(SimpleId::Psl2Of5, 16).unwrap());
        assert!(extension_constraint(SimpleId::Psl2Of8, 64).unwrap());
        assert!(extension_constraint(SimpleId::Sz8, 4096).unwrap());
        assert!(!extension_constraint(SimpleId::Sz8, 8).unwrap());
        assert!(extension_constraint(SimpleId::Sz8, 12).is_err());
        assert!(extension_constraint(SimpleId::Sz8, 1).is_err());
    }

    #[test]
    fn smallest_exponents() {
        assert_eq!(smallest_valid_exponent(SimpleId::Psl2Of5), 4);
        assert_eq!(smallest_valid_exponent(SimpleId::Psl2Of8), 6);
        assert_eq!(smallest_valid_exponent(SimpleId::Psl2Of17), 24);
        assert_eq!(smallest_valid_exponent(SimpleId::Sz8), 12);
        assert_eq!(smallest_valid_exponent(SimpleId::Sz32), 20);
    }

    #[test]
    fn names() {
        assert_eq!("sz32".parse::<SimpleId>().unwrap(), SimpleId::Sz32);
        assert_eq!("PSL2(17)".parse::<SimpleId>().unwrap(), SimpleId::Psl2Of17);
        assert!("PSL2(7)".parse::<SimpleId>().is_err());
    }
}
