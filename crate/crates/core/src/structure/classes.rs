//! Conjugacy classes and centralisers.

use std::collections::BTreeMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::group::{ElemId, FiniteGroup};
use crate::perm::Permutation;
use crate::subgroup::SubgroupRef;
use crate::{GroupError, Result};

/// One conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    /// Smallest element of the class in the ambient element order.
    pub representative: Permutation,
    pub representative_id: ElemId,
    pub size: u64,
    pub element_order: u64,
    /// p-regularity for every prime dividing the group order.
    pub is_p_regular: BTreeMap<u64, bool>,
    pub is_prime_power_order: bool,
}

/// Classes of a whole group plus the class index of each element.
pub(crate) struct ClassTable {
    pub(crate) classes: Vec<ClassData>,
    pub(crate) class_of: Vec<u32>,
}

/// Orbits of conjugation by the generators of `h`, restricted to `h`.
fn orbits(h: &SubgroupRef) -> (Vec<Vec<ElemId>>, Vec<u32>) {
    let g = h.ambient();
    let n = g.n();
    let mut class_of = vec![u32::MAX; n];
    let mut orbits = Vec::new();
    let conj_by: Vec<(ElemId, ElemId)> = h.generator_ids().iter().map(|&x| (x, g.inv(x))).collect();
    for start in h.ids() {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let idx = orbits.len() as u32;
        class_of[start as usize] = idx;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &(s, s_inv) in &conj_by {
                let y = g.mul(g.mul(s_inv, x), s);
                if class_of[y as usize] == u32::MAX {
                    class_of[y as usize] = idx;
                    orbit.push(y);
                }
            }
        }
        orbits.push(orbit);
    }
    (orbits, class_of)
}

fn class_list(h: &SubgroupRef) -> (Vec<ClassData>, Vec<u32>) {
    let g = h.ambient();
    let primes = arith::prime_divisors(h.order());
    let (orbits, class_of) = orbits(h);
    let mut classes: Vec<(ClassData, usize)> = orbits
        .iter()
        .enumerate()
        .map(|(i, orbit)| {
            let rep = *orbit.iter().min().unwrap();
            let ord = g.elem_order(rep);
            (
                ClassData {
                    representative: g.element(rep).clone(),
                    representative_id: rep,
                    size: orbit.len() as u64,
                    element_order: ord,
                    is_p_regular: primes.iter().map(|&p| (p, ord % p != 0)).collect(),
                    is_prime_power_order: arith::is_prime_power(ord),
                },
                i,
            )
        })
        .collect();
    classes.sort_by_key(|(c, _)| (c.size, c.representative_id));
    let mut remap = vec![0u32; classes.len()];
    for (new, (_, old)) in classes.iter().enumerate() {
        remap[*old] = new as u32;
    }
    let class_of = class_of
        .into_iter()
        .map(|c| if c == u32::MAX { c } else { remap[c as usize] })
        .collect();
    (classes.into_iter().map(|(c, _)| c).collect(), class_of)
}

pub(crate) fn whole_group_classes(g: &Arc<FiniteGroup>) -> Result<&ClassTable> {
    g.ensure_enumerable()?;
    Ok(g.class_cache().get_or_init(|| {
        let whole = g.whole().expect("enumerable");
        let (classes, class_of) = class_list(&whole);
        ClassTable { classes, class_of }
    }))
}

fn is_whole(h: &SubgroupRef) -> bool {
    h.order() as usize == h.ambient().n()
}

/// Conjugacy classes of `h`, sorted by size and then representative.
pub fn conjugacy_classes(h: &SubgroupRef) -> Vec<ClassData> {
    if is_whole(h) {
        return whole_group_classes(h.ambient()).expect("enumerable").classes.clone();
    }
    class_list(h).0
}

pub fn group_classes(g: &Arc<FiniteGroup>) -> Result<Vec<ClassData>> {
    Ok(whole_group_classes(g)?.classes.clone())
}

/// `C_H(x)`.
pub fn centralizer(h: &SubgroupRef, x: ElemId) -> Result<SubgroupRef> {
    if !h.contains(x) {
        return Err(GroupError::NotMember(h.ambient().element(x).to_string()));
    }
    Ok(centralizer_of_elements(h, &[x]))
}

/// Elements of `h` commuting with each of `xs`.
pub fn centralizer_of_elements(h: &SubgroupRef, xs: &[ElemId]) -> SubgroupRef {
    let g = h.ambient();
    let mut bits = FixedBitSet::with_capacity(g.n());
    for y in h.ids() {
        if xs.iter().all(|&x| g.mul(x, y) == g.mul(y, x)) {
            bits.insert(y as usize);
        }
    }
    SubgroupRef::from_element_set(g, bits)
}

/// `C_H(K)` for a subgroup `K` of the same ambient.
pub fn centralizer_of_subgroup(h: &SubgroupRef, k: &SubgroupRef) -> SubgroupRef {
    centralizer_of_elements(h, k.generator_ids())
}

/// `|x^H|`, with `x ∈ H`.
pub fn class_size(h: &SubgroupRef, x: ElemId) -> Result<u64> {
    if !h.contains(x) {
        return Err(GroupError::NotMember(h.ambient().element(x).to_string()));
    }
    if is_whole(h) {
        let t = whole_group_classes(h.ambient())?;
        return Ok(t.classes[t.class_of[x as usize] as usize].size);
    }
    let g = h.ambient();
    let count = h
        .ids()
        .filter(|&y| g.mul(x, y) == g.mul(y, x))
        .count() as u64;
    Ok(h.order() / count)
}

/// Class size of `x` in the whole ambient group, served from the cached class table.
pub fn class_size_in_group(g: &Arc<FiniteGroup>, x: ElemId) -> Result<u64> {
    let t = whole_group_classes(g)?;
    Ok(t.classes[t.class_of[x as usize] as usize].size)
}

/// `Z(H)`.
pub fn center(h: &SubgroupRef) -> SubgroupRef {
    centralizer_of_elements(h, h.generator_ids())
}

/// Sorted multiset of class sizes.
pub fn class_size_multiset(h: &SubgroupRef) -> Vec<u64> {
    let mut v: Vec<u64> = conjugacy_classes(h).iter().map(|c| c.size).collect();
    v.sort_unstable();
    v
}
