//! Subgroups of an enumerated ambient group, stored as element bitsets.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::group::{ElemId, FiniteGroup};
use crate::perm::Permutation;
use crate::{GroupError, Result};

/// A subgroup of an ambient [`FiniteGroup`].
///
/// The element set is kept as a bitset over the ambient's sorted element list.
/// The fingerprint is an FNV-1a hash of the sorted element images, so it does
/// not depend on how the ambient was enumerated.
#[derive(Clone)]
pub struct SubgroupRef {
    ambient: Arc<FiniteGroup>,
    gens: Vec<ElemId>,
    elements: FixedBitSet,
    order: u64,
    fingerprint: u64,
}

impl SubgroupRef {
    pub(crate) fn from_parts(ambient: Arc<FiniteGroup>, gens: Vec<ElemId>, elements: FixedBitSet) -> Self {
        let order = elements.count_ones(..) as u64;
        let fingerprint = fingerprint(&ambient, &elements);
        Self {
            ambient,
            gens,
            elements,
            order,
            fingerprint,
        }
    }

    /// Subgroup generated by element ids of `ambient`.
    pub fn generated(ambient: &Arc<FiniteGroup>, gens: &[ElemId]) -> Self {
        let mut kept = Vec::new();
        let mut set = singleton(ambient);
        for &g in gens {
            if !set.contains(g as usize) {
                kept.push(g);
                set = closure(ambient, &kept, None).expect("unbounded closure");
            }
        }
        Self::from_parts(ambient.clone(), kept, set)
    }

    /// Wraps a set already known to be a subgroup and picks a small generating set.
    pub fn from_element_set(ambient: &Arc<FiniteGroup>, elements: FixedBitSet) -> Self {
        let mut kept = Vec::new();
        let mut set = singleton(ambient);
        let target = elements.count_ones(..);
        for g in elements.ones() {
            if set.count_ones(..) == target {
                break;
            }
            if !set.contains(g) {
                kept.push(g as ElemId);
                set = closure(ambient, &kept, None).expect("unbounded closure");
            }
        }
        debug_assert_eq!(set, elements);
        Self::from_parts(ambient.clone(), kept, elements)
    }

    pub fn ambient(&self) -> &Arc<FiniteGroup> {
        &self.ambient
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.elements
    }

    pub fn generator_ids(&self) -> &[ElemId] {
        &self.gens
    }

    pub fn generators(&self) -> Vec<Permutation> {
        self.gens.iter().map(|&g| self.ambient.element(g).clone()).collect()
    }

    pub fn contains(&self, id: ElemId) -> bool {
        self.elements.contains(id as usize)
    }

    pub fn contains_perm(&self, p: &Permutation) -> bool {
        self.ambient.id_of(p).is_some_and(|id| self.contains(id))
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.elements.ones().map(|i| i as ElemId)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub(crate) fn same_ambient(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(GroupError::AmbientMismatch)
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.elements.clone();
        bits.intersect_with(&other.elements);
        Self::from_element_set(&self.ambient, bits)
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Self) -> Self {
        if other.is_subgroup_of(self) {
            return self.clone();
        }
        if self.is_subgroup_of(other) {
            return other.clone();
        }
        let mut gens = self.gens.clone();
        let mut set = self.elements.clone();
        for &g in &other.gens {
            if !set.contains(g as usize) {
                gens.push(g);
                set = closure(&self.ambient, &gens, None).expect("unbounded closure");
            }
        }
        Self::from_parts(self.ambient.clone(), gens, set)
    }

    /// `x⁻¹ H x`.
    pub fn conjugate(&self, x: ElemId) -> Self {
        let g = &self.ambient;
        let mut bits = FixedBitSet::with_capacity(g.n());
        for h in self.ids() {
            bits.insert(g.conj(h, x) as usize);
        }
        let gens = self.gens.iter().map(|&h| g.conj(h, x)).collect();
        Self::from_parts(g.clone(), gens, bits)
    }

    /// Invariant under conjugation by every generator of `over`.
    pub fn is_normalized_by(&self, over: &Self) -> bool {
        let g = &self.ambient;
        over.gens.iter().all(|&x| self.gens.iter().all(|&h| self.contains(g.conj(h, x))))
    }

    pub fn is_normal_in(&self, over: &Self) -> bool {
        self.is_subgroup_of(over) && self.is_normalized_by(over)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.ambient;
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// A standalone permutation group on the ambient's points with this subgroup's generators.
    pub fn to_group(&self) -> Result<Arc<FiniteGroup>> {
        FiniteGroup::with_limits(self.ambient.degree(), self.generators(), self.ambient.limits())
    }

    /// Product set size `|HK| = |H||K| / |H ∩ K|`.
    pub fn product_size(&self, other: &Self) -> u64 {
        let mut bits = self.elements.clone();
        bits.intersect_with(&other.elements);
        self.order * other.order / bits.count_ones(..) as u64
    }
}

fn singleton(g: &FiniteGroup) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(g.n());
    s.insert(0);
    s
}

/// Closure of `gens` under multiplication; returns `None` once more than
/// `limit` elements are found.
pub(crate) fn closure(g: &FiniteGroup, gens: &[ElemId], limit: Option<usize>) -> Option<FixedBitSet> {
    let mut set = singleton(g);
    let mut queue: Vec<ElemId> = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if !set.put(y as usize) {
                queue.push(y);
                if limit.is_some_and(|l| queue.len() > l) {
                    return None;
                }
            }
        }
    }
    Some(set)
}

fn fingerprint(g: &FiniteGroup, elements: &FixedBitSet) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    let mut feed = |v: u32| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(PRIME);
        }
    };
    feed(g.degree() as u32);
    for i in elements.ones() {
        for &img in g.element(i as ElemId).images0() {
            feed(img);
        }
    }
    h
}

impl PartialEq for SubgroupRef {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.ambient, &other.ambient) {
            self.elements == other.elements
        } else {
            self.order == other.order && self.fingerprint == other.fingerprint
        }
    }
}

impl Eq for SubgroupRef {}

impl Hash for SubgroupRef {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.fingerprint.hash(state);
    }
}

impl PartialOrd for SubgroupRef {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by `(order, fingerprint)`.
impl Ord for SubgroupRef {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.order, self.fingerprint).cmp(&(other.order, other.fingerprint))
    }
}

impl fmt::Debug for SubgroupRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens [", self.order)?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_and_lagrange() {
        let g = FiniteGroup::from_cycle_strings(4, &["(1 2)", "(1 2 3 4)"]).unwrap();
        let v4 = g
            .subgroup(&[
                Permutation::parse("(1 2)(3 4)", 4).unwrap(),
                Permutation::parse("(1 3)(2 4)", 4).unwrap(),
            ])
            .unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(24 % v4.order(), 0);
        let whole = g.whole().unwrap();
        assert!(v4.is_normal_in(&whole));
        let c2 = g.subgroup(&[Permutation::parse("(1 2)", 4).unwrap()]).unwrap();
        assert!(!c2.is_normal_in(&whole));
        assert_eq!(v4.join(&c2).order(), 8);
        assert_eq!(v4.intersection(&c2).order(), 1);
        assert_eq!(v4.product_size(&c2), 8);
    }

    #[test]
    fn fingerprint_independent_of_ambient() {
        let s4 = FiniteGroup::from_cycle_strings(4, &["(1 2)", "(1 2 3 4)"]).unwrap();
        let a4 = FiniteGroup::from_cycle_strings(4, &["(1 2 3)", "(1 2)(3 4)"]).unwrap();
        let gens = [Permutation::parse("(1 2)(3 4)", 4).unwrap(), Permutation::parse("(1 3)(2 4)", 4).unwrap()];
        let in_s4 = s4.subgroup(&gens).unwrap();
        let in_a4 = a4.subgroup(&gens).unwrap();
        assert_eq!(in_s4.fingerprint(), in_a4.fingerprint());
        assert_eq!(in_s4, in_a4);
    }

    #[test]
    fn non_member_generator_rejected() {
        let a4 = FiniteGroup::from_cycle_strings(4, &["(1 2 3)", "(1 2)(3 4)"]).unwrap();
        assert!(matches!(
            a4.subgroup(&[Permutation::parse("(1 2)", 4).unwrap()]),
            Err(GroupError::NotMember(_))
        ));
    }
}
