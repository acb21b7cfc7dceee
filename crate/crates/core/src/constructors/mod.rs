//! Groups given by explicit multiplication rules.

mod metacyclic;
mod quaternion;
mod semidirect;
mod spec;
mod table;

pub use metacyclic::{constructible_rs, find_metacyclic_r, metacyclic_group, MetacyclicSpec};
pub use quaternion::generalized_quaternion;
pub use semidirect::{fixed_point_free, semidirect_product, ActionReport, SemidirectSpec, ACTING_CAP};
pub use spec::{parse_construction, semidirect_spec, Construction, NAMED_ACTIONS};
pub use table::{TableElement, TableGroup};
