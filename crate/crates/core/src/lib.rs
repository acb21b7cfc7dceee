pub mod arith;
pub mod catalog;
pub mod cli;
pub mod constructors;
pub mod criteria;
mod error;
pub mod gf;
pub mod group;
pub mod perm;
pub mod records;
pub mod source;
pub mod structure;
pub mod suite;

pub use error::{Error, Result};

/// Enumeration limits shared by every brute-force operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order that may be enumerated element by element.
    pub enumeration: u64,
    /// Largest group order for scans over element pairs.
    pub pairwise: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { enumeration: 1 << 21, pairwise: 1 << 12 }
    }
}
