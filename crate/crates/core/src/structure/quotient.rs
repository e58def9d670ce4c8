//! Quotients by normal subgroups, realised as the action on right cosets.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::group::{ElemId, FiniteGroup};
use crate::perm::Permutation;
use crate::subgroup::SubgroupRef;
use crate::{GroupError, Result};

/// `H/N` as a permutation group on the right cosets of `N`, with the
/// projection and preimage maps.
pub struct Quotient {
    universe: SubgroupRef,
    kernel: SubgroupRef,
    group: Arc<FiniteGroup>,
    /// Coset index of every ambient element lying in the universe.
    coset_of: Vec<u32>,
    /// Quotient element id of each coset.
    coset_image: Vec<ElemId>,
}

impl Quotient {
    /// Builds `h/n`; `n` must be normal in `h` and of index at most the degree cap.
    pub fn new(h: &SubgroupRef, n: &SubgroupRef) -> Result<Self> {
        h.same_ambient(n)?;
        if !n.is_normal_in(h) {
            return Err(GroupError::NotNormal);
        }
        let g = h.ambient();
        let index = (h.order() / n.order()) as usize;
        let cap = g.limits().degree_cap;
        if index > cap {
            return Err(GroupError::IndexCap { index: index as u64, cap });
        }
        let mut coset_of = vec![u32::MAX; g.n()];
        let mut reps: Vec<ElemId> = Vec::with_capacity(index);
        for x in h.ids() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for y in n.ids() {
                coset_of[g.mul(y, x) as usize] = c;
            }
        }
        let act = |x: ElemId| -> Permutation {
            let images: Vec<u32> = reps.iter().map(|&r| coset_of[g.mul(r, x) as usize]).collect();
            Permutation::from_zero_based(images)
        };
        let gens: Vec<Permutation> = h.generator_ids().iter().map(|&s| act(s)).collect();
        let group = FiniteGroup::with_limits(index, gens, g.limits())?;
        group.ensure_enumerable()?;
        let coset_image = reps
            .iter()
            .map(|&r| group.id_of(&act(r)).expect("coset action lies in the quotient"))
            .collect();
        Ok(Self {
            universe: h.clone(),
            kernel: n.clone(),
            group,
            coset_of,
            coset_image,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn kernel(&self) -> &SubgroupRef {
        &self.kernel
    }

    pub fn universe(&self) -> &SubgroupRef {
        &self.universe
    }

    /// Image of an ambient element of the universe.
    pub fn project(&self, x: ElemId) -> Result<ElemId> {
        match self.coset_of.get(x as usize) {
            Some(&c) if c != u32::MAX => Ok(self.coset_image[c as usize]),
            _ => Err(GroupError::NotMember(
                self.universe.ambient().element(x).to_string(),
            )),
        }
    }

    /// `KN/N` for a subgroup `K` of the universe.
    pub fn image(&self, k: &SubgroupRef) -> Result<SubgroupRef> {
        let gens = k
            .generator_ids()
            .iter()
            .map(|&x| self.project(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubgroupRef::generated(&self.group, &gens))
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, s: &SubgroupRef) -> Result<SubgroupRef> {
        if !Arc::ptr_eq(s.ambient(), &self.group) {
            return Err(GroupError::AmbientMismatch);
        }
        let g = self.universe.ambient();
        let mut bits = FixedBitSet::with_capacity(g.n());
        for x in self.universe.ids() {
            if s.contains(self.coset_image[self.coset_of[x as usize] as usize]) {
                bits.insert(x as usize);
            }
        }
        Ok(SubgroupRef::from_element_set(g, bits))
    }
}
