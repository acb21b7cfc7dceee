//! Structural checks on solvable and simple EPPO groups, chief series and
//! the classifier.
//!
//! Checks report one [`Clause`] per statement they test, so a caller can tell
//! a statement that held from one that did not apply.

mod checks;
mod chief;
mod classify;
mod extension;

use std::fmt;

use crate::arith::{p_part, prime_power};
use crate::perm::{GroupTable, Subgroup};
use crate::records::Records;

pub use checks::{
    coprime_subgroup_shape, is_supersolvable, minimal_normal_exponent_check, noncentral_normal_abelian,
    quaternion_and_solvability_check, supersolvability_check,
};
pub use chief::{
    chief_series, chief_series_pattern, chief_series_through, ChiefSeries, PatternCase, PatternParams, PatternReport,
};
pub use classify::{classify, recognizes_a5, Classification, ClassificationRecord};
pub use extension::{check_concrete_extension, extension_constraint, smallest_valid_exponent, SimpleId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed,
    /// The statement's premise does not occur in this group.
    Vacuous,
    /// A derived inequality that does not follow from its stated argument;
    /// reported but never a failure.
    Flagged,
    /// The group does not meet the hypotheses.
    NotApplicable,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Passed => "passed",
            Outcome::Failed => "failed",
            Outcome::Vacuous => "vacuous",
            Outcome::Flagged => "flagged",
            Outcome::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseReport {
    pub title: String,
    pub clauses: Vec<Clause>,
}

impl ClauseReport {
    pub fn new(title: impl Into<String>) -> Self {
        ClauseReport { title: title.into(), clauses: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, outcome: Outcome, detail: impl Into<String>) {
        self.clauses.push(Clause { name: name.into(), outcome, detail: detail.into() });
    }

    pub fn check(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) -> bool {
        self.push(name, if holds { Outcome::Passed } else { Outcome::Failed }, detail);
        holds
    }

    /// No clause failed.
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.outcome != Outcome::Failed)
    }

    /// Some clause was actually tested.
    pub fn applied(&self) -> bool {
        self.clauses.iter().any(|c| matches!(c.outcome, Outcome::Passed | Outcome::Failed | Outcome::Flagged))
    }

    pub fn outcome(&self, name: &str) -> Option<Outcome> {
        self.clauses.iter().find(|c| c.name == name).map(|c| c.outcome)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.outcome == Outcome::Failed)
    }

    pub fn write(&self, out: &mut Records, prefix: &str) {
        for c in &self.clauses {
            let value =
                if c.detail.is_empty() { c.outcome.to_string() } else { format!("{} ({})", c.outcome, c.detail) };
            out.push(format!("{prefix}.{}.{}", self.title, c.name), value);
        }
    }
}

/// `O_p(G)`, the largest normal `p`-subgroup.
pub fn largest_normal_p_subgroup(table: &GroupTable, p: u64) -> Subgroup {
    table
        .normal_subgroups()
        .iter()
        .filter(|n| p_part(n.order(), p) == n.order())
        .max_by_key(|n| n.order())
        .cloned()
        .unwrap_or_else(|| table.trivial())
}

pub fn is_cyclic(table: &GroupTable, sub: &Subgroup) -> bool {
    sub.members().any(|x| table.element_order(x) == sub.order())
}

/// Order `2^n` with `n >= 3` and exactly one involution.
pub fn is_generalized_quaternion(table: &GroupTable, sub: &Subgroup) -> bool {
    matches!(prime_power(sub.order()), Some((2, n)) if n >= 3)
        && sub.members().filter(|&x| table.element_order(x) == 2).count() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::m9;
    use crate::constructors::generalized_quaternion;
    use crate::Limits;

    #[test]
    fn quaternion_recognizer() {
        let t = generalized_quaternion(4).unwrap().to_perm_group().unwrap().table(&Limits::default()).unwrap();
        assert!(is_generalized_quaternion(&t, &t.whole()));
        let m = m9().table(&Limits::default()).unwrap();
        let s2 = m.sylow_subgroup(2, 0).unwrap();
        assert!(is_generalized_quaternion(&m, &s2));
        assert!(!is_cyclic(&m, &s2));
        assert_eq!(largest_normal_p_subgroup(&m, 3).order(), 9);
        assert!(largest_normal_p_subgroup(&m, 2).is_trivial());
    }
}
