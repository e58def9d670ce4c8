//! Group constructions, bundled fixtures, generator files and sweep catalogs.

pub mod file;
pub mod fixtures;
pub mod products;
pub mod spec;
pub mod sweep;

pub use file::{
    fixture_text, group_text, parse_group_text, read_fixture_file, read_group_file,
    write_fixture_file, write_group_file, GroupFile,
};
pub use fixtures::{builtin_example, FactorizedFixture, BUILTIN_IDS};
pub use products::{direct_product, direct_product_of, semidirect_product, DirectProduct, SemidirectProduct};
pub use spec::{alternating, cyclic, dicyclic, dihedral, semidirect_cyclic, symmetric, GroupSpec};
pub use sweep::{sweep_catalog, CatalogEntry};
