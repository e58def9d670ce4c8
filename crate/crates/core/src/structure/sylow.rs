//! Normalisers, Sylow and Hall subgroups, cores and the Fitting subgroup.

use fixedbitset::FixedBitSet;

use super::lattice::{all_subgroups, normal_subgroups};
use crate::arith;
use crate::group::ElemId;
use crate::subgroup::SubgroupRef;
use crate::{GroupError, Result};

/// `N_H(K)`.
pub fn normalizer(h: &SubgroupRef, k: &SubgroupRef) -> SubgroupRef {
    let g = h.ambient();
    let mut bits = FixedBitSet::with_capacity(g.n());
    for x in h.ids() {
        if k.generator_ids().iter().all(|&s| k.contains(g.conj(s, x))) {
            bits.insert(x as usize);
        }
    }
    SubgroupRef::from_element_set(g, bits)
}

/// A Sylow `p`-subgroup of `h`, trivial when `p` does not divide `|h|`.
///
/// Starts from the smallest `p`-element of largest order and grows inside
/// normalisers, always taking the smallest suitable element, so the result is
/// deterministic.
pub fn sylow_subgroup(h: &SubgroupRef, p: u64) -> Result<SubgroupRef> {
    arith::require_prime(p)?;
    let g = h.ambient();
    let target = arith::p_part(h.order(), p);
    let start = h
        .ids()
        .filter(|&x| arith::is_power_of(g.elem_order(x), p))
        .max_by_key(|&x| (g.elem_order(x), std::cmp::Reverse(x)))
        .unwrap_or(0);
    let mut sylow = SubgroupRef::generated(g, &[start]);
    while sylow.order() < target {
        let n = normalizer(h, &sylow);
        let y = n
            .ids()
            .find(|&y| !sylow.contains(y) && sylow.contains(g.pow(y, p)))
            .expect("a p-subgroup below Sylow order grows inside its normaliser");
        let mut gens = sylow.generator_ids().to_vec();
        gens.push(y);
        sylow = SubgroupRef::generated(g, &gens);
    }
    Ok(sylow)
}

/// A subgroup whose order is the `pi`-part of `|h|`, found by scanning the lattice.
pub fn hall_subgroup(h: &SubgroupRef, pi: &[u64]) -> Result<Option<SubgroupRef>> {
    for &p in pi {
        arith::require_prime(p)?;
    }
    let target = arith::pi_part(h.order(), pi);
    if target == h.order() {
        return Ok(Some(h.clone()));
    }
    if target == 1 {
        return h.ambient().trivial_subgroup().map(Some);
    }
    if let Some(p) = arith::prime_power_base(target) {
        return sylow_subgroup(h, p).map(Some);
    }
    Ok(all_subgroups(h)?.into_iter().find(|s| s.order() == target))
}

/// Every subgroup of `h` of order the `pi`-part of `|h|`.
pub fn hall_subgroups(h: &SubgroupRef, pi: &[u64]) -> Result<Vec<SubgroupRef>> {
    let target = arith::pi_part(h.order(), pi);
    Ok(all_subgroups(h)?
        .into_iter()
        .filter(|s| s.order() == target)
        .collect())
}

/// Largest normal subgroup of `h` inside `a`.
pub fn core_in(h: &SubgroupRef, a: &SubgroupRef) -> Result<SubgroupRef> {
    h.same_ambient(a)?;
    if !a.is_subgroup_of(h) {
        return Err(GroupError::NotSubgroup(format!("{a:?}")));
    }
    let mut core = a.clone();
    loop {
        let mut next = core.clone();
        for &x in h.generator_ids() {
            next = next.intersection(&core.conjugate(x));
        }
        if next.order() == core.order() {
            return Ok(core);
        }
        core = next;
    }
}

/// `O_p(H)`, the core of a Sylow `p`-subgroup.
pub fn p_core(h: &SubgroupRef, p: u64) -> Result<SubgroupRef> {
    let sylow = sylow_subgroup(h, p)?;
    core_in(h, &sylow)
}

/// `O_{p'}(H)`, the largest normal subgroup of order coprime to `p`.
pub fn p_prime_core(h: &SubgroupRef, p: u64) -> Result<SubgroupRef> {
    arith::require_prime(p)?;
    Ok(normal_subgroups(h)
        .into_iter()
        .filter(|n| n.order() % p != 0)
        .max_by_key(|n| n.order())
        .expect("the trivial subgroup is a normal p'-subgroup"))
}

/// `F(H)`, the join of the `p`-cores.
pub fn fitting(h: &SubgroupRef) -> SubgroupRef {
    let g = h.ambient();
    let mut gens: Vec<ElemId> = Vec::new();
    for p in arith::prime_divisors(h.order()) {
        let core = p_core(h, p).expect("prime divisor");
        gens.extend_from_slice(core.generator_ids());
    }
    SubgroupRef::generated(g, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn group(n: usize, gens: &[&str]) -> Arc<FiniteGroup> {
        FiniteGroup::from_cycle_strings(n, gens).unwrap()
    }

    fn sub(g: &Arc<FiniteGroup>, gens: &[&str]) -> SubgroupRef {
        let perms: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse(s, g.degree()).unwrap())
            .collect();
        g.subgroup(&perms).unwrap()
    }

    #[test]
    fn sylow_orders() {
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        let w = s4.whole().unwrap();
        assert_eq!(sylow_subgroup(&w, 2).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&w, 3).unwrap().order(), 3);
        assert!(sylow_subgroup(&w, 4).is_err());
        let c15 = group(15, &["(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15)"]);
        assert!(sylow_subgroup(&c15.whole().unwrap(), 7).unwrap().is_trivial());
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let w5 = a5.whole().unwrap();
        for (p, o) in [(2, 4), (3, 3), (5, 5)] {
            assert_eq!(sylow_subgroup(&w5, p).unwrap().order(), o);
        }
    }

    #[test]
    fn cores() {
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        let w = s4.whole().unwrap();
        let d8 = sylow_subgroup(&w, 2).unwrap();
        assert_eq!(core_in(&w, &d8).unwrap().order(), 4);
        let a4 = sub(&s4, &["(1 2 3)", "(1 2)(3 4)"]);
        assert_eq!(core_in(&w, &a4).unwrap(), a4);
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        let t = sub(&s3, &["(1 2)"]);
        assert!(core_in(&s3.whole().unwrap(), &t).unwrap().is_trivial());
        assert_eq!(p_core(&w, 2).unwrap().order(), 4);
        assert!(p_core(&w, 3).unwrap().is_trivial());
        assert_eq!(fitting(&w).order(), 4);
        assert!(p_prime_core(&w, 2).unwrap().is_trivial());
        assert_eq!(p_prime_core(&s3.whole().unwrap(), 2).unwrap().order(), 3);
    }

    #[test]
    fn fitting_of_nilpotent_and_dihedral() {
        let q8 = group(8, &["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"]);
        assert_eq!(fitting(&q8.whole().unwrap()).order(), 8);
        let d14 = group(7, &["(1 2 3 4 5 6 7)", "(2 7)(3 6)(4 5)"]);
        assert_eq!(fitting(&d14.whole().unwrap()).order(), 7);
    }

    #[test]
    fn hall() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(hall_subgroup(&s3.whole().unwrap(), &[3]).unwrap().unwrap().order(), 3);
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(hall_subgroup(&s4.whole().unwrap(), &[2, 3]).unwrap().unwrap().order(), 24);
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert!(hall_subgroup(&a5.whole().unwrap(), &[2, 5]).unwrap().is_none());
        assert_eq!(hall_subgroup(&a5.whole().unwrap(), &[2, 3]).unwrap().unwrap().order(), 12);
    }

    #[test]
    fn normalizer_of_sylow() {
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let w = a5.whole().unwrap();
        let p5 = sylow_subgroup(&w, 5).unwrap();
        assert_eq!(normalizer(&w, &p5).order(), 10);
    }
}
