//! Regulator constants of permutation-group relations for explicitly
//! presented rational representations.

mod constant;
mod group;
mod linalg;
mod rep;

pub use constant::{regulator_constant, verify_relation, GRelation, RegulatorConstant};
pub use group::{compose, inverse, Perm, PermGroup};
pub use linalg::Matrix;
pub use rep::PairedRepresentation;
