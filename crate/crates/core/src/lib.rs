//! Counting conjugacy classes of non-self-normalizing subgroups of finite
//! permutation groups, plus the structural tools needed to check results
//! about that count.

pub mod bitset;
pub mod catalog;
pub mod census;
pub mod constructors;
pub mod error;
pub mod family;
pub mod gf;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod quotient;
pub mod structure;
pub mod subgroup;
pub mod verify;

pub use error::{Error, Result};
pub use group::{enumerate, Elem, Group, Limits};
pub use lattice::{SubgroupClassRecord, SubgroupLattice};
pub use perm::Permutation;
pub use subgroup::Subgroup;
