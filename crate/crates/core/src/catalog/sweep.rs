//! The bounded catalog of groups used by sweeps and property suites.

use super::fixtures::{builtin_example, BUILTIN_IDS};
use super::spec::GroupSpec;

/// One catalog group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub order: u64,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        self.spec.to_string()
    }
}

/// Cyclic, dihedral and dicyclic groups of order up to `max_order`,
/// `Sym(n)` and `Alt(n)` for `n ≤ 5`, direct products of two of those with
/// order up to `max_order`, and the bundled fixtures of small enough order.
///
/// Obvious duplicates (`D2 = C2`, `Q4 = C4`, `Sym(2) = C2`, `Alt(3) = C3`, the
/// trivial group under several names) appear once. Entries are sorted by
/// order and then label.
pub fn sweep_catalog(max_order: u64) -> Vec<CatalogEntry> {
    let mut pool: Vec<CatalogEntry> = Vec::new();
    let push = |spec: GroupSpec, order: u64, pool: &mut Vec<CatalogEntry>| {
        if order <= max_order {
            pool.push(CatalogEntry { spec, order });
        }
    };
    for n in 1..=max_order as usize {
        push(GroupSpec::Cyclic(n), n as u64, &mut pool);
        if n % 2 == 0 && n >= 4 {
            push(GroupSpec::Dihedral(n), n as u64, &mut pool);
        }
        if n % 4 == 0 && n >= 8 {
            push(GroupSpec::Dicyclic(n), n as u64, &mut pool);
        }
    }
    for (n, order) in [(3, 6), (4, 24), (5, 120)] {
        push(GroupSpec::Symmetric(n), order, &mut pool);
    }
    for (n, order) in [(4, 12), (5, 60)] {
        push(GroupSpec::Alternating(n), order, &mut pool);
    }

    let mut entries = pool.clone();
    for (i, x) in pool.iter().enumerate() {
        for y in &pool[i..] {
            if x.order > 1 && y.order > 1 && x.order * y.order <= max_order {
                entries.push(CatalogEntry {
                    spec: GroupSpec::Direct(vec![x.spec.clone(), y.spec.clone()]),
                    order: x.order * y.order,
                });
            }
        }
    }
    for id in BUILTIN_IDS {
        if let Ok(f) = builtin_example(id) {
            if f.order() <= max_order {
                entries.push(CatalogEntry {
                    spec: GroupSpec::Builtin(id.to_string()),
                    order: f.order(),
                });
            }
        }
    }
    entries.sort_by_key(|e| (e.order, e.label()));
    entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders_match_constructions() {
        let cat = sweep_catalog(24);
        assert!(cat.iter().any(|e| e.spec == GroupSpec::Symmetric(4)));
        assert!(cat.iter().any(|e| e.spec == GroupSpec::Builtin("s4_a4_sylow2".into())));
        for e in &cat {
            assert_eq!(e.spec.construct().unwrap().order(), e.order as u128, "{}", e.label());
        }
        let labels: std::collections::BTreeSet<String> = cat.iter().map(|e| e.label()).collect();
        assert_eq!(labels.len(), cat.len());
    }
}
