//! Finite permutation groups: stabiliser chains, conjugacy classes, subgroup
//! structure, factorised groups and checks of class-size theorems on them.

pub mod arith;
pub mod catalog;
pub mod chain;
pub mod error;
pub mod factorization;
pub mod group;
pub mod perm;
pub mod predicates;
pub mod structure;
pub mod subgroup;
pub mod verify;

pub use error::{GroupError, Result};
pub use group::{ElemId, FiniteGroup, Limits};
pub use perm::Permutation;
pub use subgroup::SubgroupRef;
