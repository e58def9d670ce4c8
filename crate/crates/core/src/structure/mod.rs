//! Structural computations inside an enumerated group.
//!
//! Every function takes a [`SubgroupRef`](crate::subgroup::SubgroupRef) as
//! its universe, so the same code serves a whole group (`g.whole()`) and any
//! of its subgroups.

pub mod chief;
pub mod classes;
pub mod lattice;
pub mod quotient;
pub mod series;
pub mod sylow;

pub use chief::{chief_series, ChiefFactor, ChiefSeries};
pub use classes::{
    center, centralizer, centralizer_of_elements, centralizer_of_subgroup, class_size,
    class_size_in_group, class_size_multiset, conjugacy_classes, group_classes, ClassData,
};
pub use lattice::{
    all_subgroups, frattini, frattini_of_p_group, maximal_subgroups, minimal_normal_subgroups,
    normal_subgroups, socle,
};
pub use quotient::Quotient;
pub use series::{
    commutator_subgroup, derived_series, derived_subgroup, lower_central_series,
    nilpotent_residual, normal_closure,
};
pub use sylow::{
    core_in, fitting, hall_subgroup, hall_subgroups, normalizer, p_core, p_prime_core,
    sylow_subgroup,
};
