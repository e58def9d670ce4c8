//! Finite permutation groups with lazily built stabilizer chains and element tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::chain::StabilizerChain;
use crate::perm::Permutation;
use crate::structure::classes::ClassTable;
use crate::subgroup::SubgroupRef;
use crate::{GroupError, Result};

/// Index of an element in its group's sorted element list. Index 0 is the identity.
pub type ElemId = u32;

/// Size limits applied to a group and everything derived from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub degree_cap: usize,
    pub enumeration_cap: usize,
    pub lattice_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            degree_cap: 4096,
            enumeration_cap: 200_000,
            lattice_cap: 2000,
        }
    }
}

/// Groups up to this order get a full multiplication table.
const TABLE_CAP: usize = 4608;

pub(crate) struct ElementTable {
    pub(crate) elements: Vec<Permutation>,
    index: HashMap<Permutation, ElemId>,
    table: Option<Vec<u16>>,
    inverses: Vec<ElemId>,
    orders: Vec<u32>,
}

impl ElementTable {
    fn build(mut elements: Vec<Permutation>, generators: &[Permutation]) -> Self {
        elements.sort_unstable();
        let n = elements.len();
        let index: HashMap<Permutation, ElemId> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as ElemId))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();

        let table = (n <= TABLE_CAP && n > 0).then(|| {
            let gens: Vec<&Permutation> = generators.iter().filter(|g| !g.is_identity()).collect();
            // right_mul[x * k + j] = x · g_j
            let k = gens.len();
            let mut right_mul = vec![0u16; n * k];
            for (x, p) in elements.iter().enumerate() {
                for (j, g) in gens.iter().enumerate() {
                    right_mul[x * k + j] = index[&p.compose_unchecked(g)] as u16;
                }
            }
            // Spanning tree of the Cayley graph: y = parent(y) · g_{via(y)}.
            let mut parent = vec![u16::MAX; n];
            let mut via = vec![0u16; n];
            let mut order = Vec::with_capacity(n);
            let mut seen = vec![false; n];
            seen[0] = true;
            order.push(0usize);
            let mut head = 0;
            while head < order.len() {
                let x = order[head];
                head += 1;
                for j in 0..k {
                    let y = right_mul[x * k + j] as usize;
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = x as u16;
                        via[y] = j as u16;
                        order.push(y);
                    }
                }
            }
            let mut table = vec![0u16; n * n];
            for x in 0..n {
                let row = &mut table[x * n..(x + 1) * n];
                row[0] = x as u16;
                for &y in &order[1..] {
                    let prev = row[parent[y] as usize] as usize;
                    row[y] = right_mul[prev * k + via[y] as usize];
                }
            }
            table
        });

        Self {
            elements,
            index,
            table,
            inverses,
            orders,
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize] as ElemId,
            None => {
                let p = self.elements[a as usize].compose_unchecked(&self.elements[b as usize]);
                self.index[&p]
            }
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }
}

/// A permutation group given by generators.
///
/// The stabilizer chain, sorted element list, multiplication table and
/// conjugacy classes are computed on first use and cached; the group is
/// immutable afterwards and can be shared across threads.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    limits: Limits,
    chain: StabilizerChain,
    table: OnceLock<Result<ElementTable, (u128, usize)>>,
    classes: OnceLock<ClassTable>,
    normals: OnceLock<Vec<SubgroupRef>>,
    lattice: OnceLock<Vec<SubgroupRef>>,
}

impl FiniteGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Arc<Self>> {
        Self::with_limits(degree, generators, Limits::default())
    }

    pub fn with_limits(
        degree: usize,
        generators: Vec<Permutation>,
        limits: Limits,
    ) -> Result<Arc<Self>> {
        if degree == 0 {
            return Err(GroupError::MalformedSpec("degree must be positive".into()));
        }
        let chain = StabilizerChain::build(degree, &generators, limits.degree_cap)?;
        Ok(Arc::new(Self {
            degree,
            generators,
            limits,
            chain,
            table: OnceLock::new(),
            classes: OnceLock::new(),
            normals: OnceLock::new(),
            lattice: OnceLock::new(),
        }))
    }

    /// Parses generators written in cycle notation.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Arc<Self>> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Arc<Self> {
        Self::new(degree, Vec::new()).expect("trivial group is always valid")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    /// Order as `u64`; every group whose elements we can enumerate fits.
    pub fn order_u64(&self) -> u64 {
        u64::try_from(self.order()).unwrap_or(u64::MAX)
    }

    pub fn member(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.chain.contains(p))
    }

    /// Smallest invariant set containing the 1-based `point`, ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point == 0 || point > self.degree {
            return Err(GroupError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        let mut stack = vec![point - 1];
        seen[point - 1] = true;
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply0(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        Ok((0..self.degree).filter(|&i| seen[i]).map(|i| i + 1).collect())
    }

    pub(crate) fn table(&self) -> Result<&ElementTable> {
        self.table
            .get_or_init(|| {
                let order = self.order();
                if order > self.limits.enumeration_cap as u128 {
                    return Err((order, self.limits.enumeration_cap));
                }
                Ok(ElementTable::build(self.chain.elements(), &self.generators))
            })
            .as_ref()
            .map_err(|&(order, cap)| GroupError::EnumerationCap { order, cap })
    }

    /// Fails when the order exceeds the enumeration cap.
    pub fn ensure_enumerable(&self) -> Result<()> {
        self.table().map(|_| ())
    }

    /// All elements, sorted lexicographically by image sequence.
    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(&self.table()?.elements)
    }

    /// Number of enumerated elements. Panics if the group was never enumerated.
    pub(crate) fn n(&self) -> usize {
        self.table().expect("group enumerated").len()
    }

    pub(crate) fn tbl(&self) -> &ElementTable {
        self.table().expect("group enumerated")
    }

    pub fn element(&self, id: ElemId) -> &Permutation {
        &self.tbl().elements[id as usize]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElemId> {
        self.table().ok()?.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.tbl().mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        self.tbl().inverses[a as usize]
    }

    #[inline]
    pub fn elem_order(&self, a: ElemId) -> u64 {
        self.tbl().orders[a as usize] as u64
    }

    /// `b⁻¹ a b`.
    #[inline]
    pub fn conj(&self, a: ElemId, b: ElemId) -> ElemId {
        let t = self.tbl();
        t.mul(t.mul(t.inverses[b as usize], a), b)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn comm(&self, a: ElemId, b: ElemId) -> ElemId {
        let t = self.tbl();
        let ab = t.mul(a, b);
        let ba = t.mul(b, a);
        t.mul(t.inverses[ba as usize], ab)
    }

    pub fn pow(&self, a: ElemId, e: u64) -> ElemId {
        let mut acc = 0;
        for _ in 0..(e % self.elem_order(a)) {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Ids of the generators (identity generators map to 0).
    pub fn generator_ids(&self) -> Vec<ElemId> {
        self.generators
            .iter()
            .map(|g| self.id_of(g).expect("generator is an element"))
            .collect()
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(self: &Arc<Self>) -> Result<SubgroupRef> {
        self.ensure_enumerable()?;
        let mut all = FixedBitSet::with_capacity(self.n());
        all.insert_range(..);
        let gens = self.generator_ids().into_iter().filter(|&g| g != 0).collect();
        Ok(SubgroupRef::from_parts(self.clone(), gens, all))
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Result<SubgroupRef> {
        self.ensure_enumerable()?;
        let mut one = FixedBitSet::with_capacity(self.n());
        one.insert(0);
        Ok(SubgroupRef::from_parts(self.clone(), Vec::new(), one))
    }

    /// Subgroup generated by the given permutations.
    pub fn subgroup(self: &Arc<Self>, gens: &[Permutation]) -> Result<SubgroupRef> {
        self.ensure_enumerable()?;
        let ids = gens
            .iter()
            .map(|g| {
                self.id_of(g)
                    .ok_or_else(|| GroupError::NotMember(g.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SubgroupRef::generated(self, &ids))
    }

    pub(crate) fn class_cache(&self) -> &OnceLock<ClassTable> {
        &self.classes
    }

    pub(crate) fn normal_cache(&self) -> &OnceLock<Vec<SubgroupRef>> {
        &self.normals
    }

    pub(crate) fn lattice_cache(&self) -> &OnceLock<Vec<SubgroupRef>> {
        &self.lattice
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field(
                "generators",
                &self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            )
            .finish()
    }
}
