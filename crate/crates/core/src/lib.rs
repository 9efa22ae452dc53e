//! Finite permutation groups, their subgroup lattices, and exhaustive
//! machine checks of statements relating subnormality, products of
//! subgroups, relative orders and exponential subgroups.

pub mod arith;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod group;
pub mod paperlab;
pub mod perm;
pub mod structure;
pub mod subgroups;

pub use error::{Error, Result};
pub use group::{construct, GroupSpec, GroupTable, PermGroup};
pub use perm::{CycleType, Parity, Perm};
pub use subgroups::{all_subgroups, LatticeCaps, Subgroup, SubgroupLattice};
