//! Subgroup lattices, normal subgroups, socle and Frattini subgroup.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::classes::conjugacy_classes;
use super::series::normal_closure;
use crate::arith;
use crate::subgroup::SubgroupRef;
use crate::{GroupError, Result};

fn is_whole(h: &SubgroupRef) -> bool {
    h.order() as usize == h.ambient().n()
}

fn check_lattice_cap(h: &SubgroupRef) -> Result<()> {
    let cap = h.ambient().limits().lattice_cap;
    if h.order() as usize > cap {
        return Err(GroupError::LatticeCap {
            order: h.order(),
            cap,
        });
    }
    Ok(())
}

/// Joins each subgroup in the working set with each seed until nothing new
/// appears. Seeds are cyclic subgroups for the full lattice and normal closures
/// of classes for the normal lattice.
fn close_under_joins(seeds: Vec<SubgroupRef>, trivial: SubgroupRef) -> Vec<SubgroupRef> {
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut all: Vec<SubgroupRef> = Vec::new();
    let mut add = |s: SubgroupRef, all: &mut Vec<SubgroupRef>| -> bool {
        if index.contains_key(s.bits()) {
            return false;
        }
        index.insert(s.bits().clone(), all.len());
        all.push(s);
        true
    };
    add(trivial, &mut all);
    let mut seeds_unique = Vec::new();
    for s in seeds {
        if add(s.clone(), &mut all) {
            seeds_unique.push(s);
        }
    }
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for seed in &seeds_unique {
                if seed.is_subgroup_of(&all[i]) {
                    continue;
                }
                let joined = all[i].join(seed);
                if add(joined, &mut all) {
                    next.push(all.len() - 1);
                }
            }
        }
        frontier = next;
    }
    all.sort();
    all
}

/// Every subgroup of `h` exactly once, sorted by `(order, fingerprint)`.
pub fn all_subgroups(h: &SubgroupRef) -> Result<Vec<SubgroupRef>> {
    check_lattice_cap(h)?;
    let g = h.ambient();
    let compute = || {
        let mut seen = FixedBitSet::with_capacity(g.n());
        let mut cyclic = Vec::new();
        for x in h.ids() {
            if x == 0 || seen.contains(x as usize) {
                continue;
            }
            let c = SubgroupRef::generated(g, &[x]);
            // Generators of the same cyclic subgroup need not be revisited.
            for y in c.ids() {
                if g.elem_order(y) == c.order() {
                    seen.insert(y as usize);
                }
            }
            cyclic.push(c);
        }
        close_under_joins(cyclic, g.trivial_subgroup().expect("enumerable"))
    };
    if is_whole(h) {
        return Ok(g.lattice_cache().get_or_init(compute).clone());
    }
    Ok(compute())
}

/// Every normal subgroup of `h`, sorted by `(order, fingerprint)`.
///
/// Built from normal closures of conjugacy class representatives, so it does
/// not need the full subgroup lattice.
pub fn normal_subgroups(h: &SubgroupRef) -> Vec<SubgroupRef> {
    let g = h.ambient();
    let compute = || {
        let seeds: Vec<SubgroupRef> = conjugacy_classes(h)
            .iter()
            .filter(|c| c.representative_id != 0)
            .map(|c| normal_closure(h, &[c.representative_id]))
            .collect();
        close_under_joins(seeds, g.trivial_subgroup().expect("enumerable"))
    };
    if is_whole(h) {
        return g.normal_cache().get_or_init(compute).clone();
    }
    compute()
}

/// Non-trivial normal subgroups containing no smaller non-trivial normal subgroup.
pub fn minimal_normal_subgroups(h: &SubgroupRef) -> Vec<SubgroupRef> {
    let normals = normal_subgroups(h);
    let nontrivial: Vec<&SubgroupRef> = normals.iter().filter(|n| !n.is_trivial()).collect();
    nontrivial
        .iter()
        .filter(|n| {
            !nontrivial
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .map(|n| (*n).clone())
        .collect()
}

/// Join of the minimal normal subgroups.
pub fn socle(h: &SubgroupRef) -> SubgroupRef {
    let g = h.ambient();
    minimal_normal_subgroups(h)
        .iter()
        .fold(g.trivial_subgroup().expect("enumerable"), |acc, m| acc.join(m))
}

/// Maximal proper subgroups of `h`.
pub fn maximal_subgroups(h: &SubgroupRef) -> Result<Vec<SubgroupRef>> {
    let lattice = all_subgroups(h)?;
    let proper: Vec<&SubgroupRef> = lattice.iter().filter(|s| s.order() < h.order()).collect();
    Ok(proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.order() > s.order() && s.is_subgroup_of(t))
        })
        .map(|s| (*s).clone())
        .collect())
}

/// Intersection of the maximal subgroups of `h`.
pub fn frattini(h: &SubgroupRef) -> Result<SubgroupRef> {
    let maximals = maximal_subgroups(h)?;
    Ok(maximals
        .iter()
        .fold(h.clone(), |acc, m| acc.intersection(m)))
}

/// `Φ(P) = P' P^p` for a `p`-group `P`; no lattice needed.
pub fn frattini_of_p_group(h: &SubgroupRef) -> Option<SubgroupRef> {
    if h.is_trivial() {
        return Some(h.clone());
    }
    let p = arith::prime_power_base(h.order())?;
    let g = h.ambient();
    let mut gens: Vec<u32> = super::series::derived_subgroup(h).generator_ids().to_vec();
    gens.extend(h.ids().map(|x| g.pow(x, p)).filter(|&y| y != 0));
    Some(SubgroupRef::generated(g, &gens))
}
