//! Permutation groups: elements, stabilizer chains, enumeration and
//! brute-force subgroup analysis.

mod chain;
pub mod format;
mod group;
mod permutation;
mod table;

pub use group::{Elements, PermGroup};
pub use permutation::Permutation;
pub use table::{ConjugacyClass, ElementId, GroupTable, Subgroup, SYLOW_ATTEMPTS};
