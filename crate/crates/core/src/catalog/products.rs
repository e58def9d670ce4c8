//! Direct and semidirect products of permutation groups.

use std::sync::Arc;

use crate::group::{ElemId, FiniteGroup};
use crate::perm::Permutation;
use crate::subgroup::SubgroupRef;
use crate::{GroupError, Result};

/// A direct product acting on the disjoint union of the factors' point sets.
pub struct DirectProduct {
    pub group: Arc<FiniteGroup>,
    offsets: Vec<usize>,
    factor_gens: Vec<Vec<Permutation>>,
}

impl DirectProduct {
    /// Number of factors.
    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    /// Image of a permutation of factor `i` in the product.
    pub fn embed(&self, i: usize, p: &Permutation) -> Permutation {
        p.shifted(self.offsets[i], self.group.degree())
    }

    /// Embedded generators of factor `i`.
    pub fn factor_generators(&self, i: usize) -> &[Permutation] {
        &self.factor_gens[i]
    }

    /// The embedded copy of factor `i`.
    pub fn factor(&self, i: usize) -> Result<SubgroupRef> {
        self.group.subgroup(&self.factor_gens[i])
    }

    /// The subgroup generated by the embedded factors listed in `which`.
    pub fn factors(&self, which: &[usize]) -> Result<SubgroupRef> {
        let gens: Vec<Permutation> = which
            .iter()
            .flat_map(|&i| self.factor_gens[i].iter().cloned())
            .collect();
        self.group.subgroup(&gens)
    }
}

/// `G × H`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<DirectProduct> {
    direct_product_of(&[g, h])
}

/// Direct product of any number of factors; the limits of the first factor apply.
pub fn direct_product_of(factors: &[&FiniteGroup]) -> Result<DirectProduct> {
    let degree: usize = factors.iter().map(|f| f.degree()).sum::<usize>().max(1);
    let mut offsets = Vec::with_capacity(factors.len());
    let mut factor_gens = Vec::with_capacity(factors.len());
    let mut offset = 0;
    for f in factors {
        offsets.push(offset);
        factor_gens.push(
            f.generators()
                .iter()
                .map(|p| p.shifted(offset, degree))
                .collect::<Vec<_>>(),
        );
        offset += f.degree();
    }
    let limits = factors.first().map(|f| f.limits()).unwrap_or_default();
    let gens = factor_gens.iter().flatten().cloned().collect();
    let group = FiniteGroup::with_limits(degree, gens, limits)?;
    Ok(DirectProduct {
        group,
        offsets,
        factor_gens,
    })
}

/// `N ⋊ H` acting on a regular copy of `N` followed by the points of `H`.
pub struct SemidirectProduct {
    pub group: Arc<FiniteGroup>,
    normal_gens: Vec<Permutation>,
    complement_gens: Vec<Permutation>,
    normal_factor: Arc<FiniteGroup>,
}

impl SemidirectProduct {
    /// Images of `N`'s generators.
    pub fn normal_generators(&self) -> &[Permutation] {
        &self.normal_gens
    }

    /// Images of `H`'s generators, in the order `H` lists them.
    pub fn complement_generators(&self) -> &[Permutation] {
        &self.complement_gens
    }

    pub fn normal(&self) -> Result<SubgroupRef> {
        self.group.subgroup(&self.normal_gens)
    }

    pub fn complement(&self) -> Result<SubgroupRef> {
        self.group.subgroup(&self.complement_gens)
    }

    /// Image of an element of `N`.
    pub fn embed_normal(&self, p: &Permutation) -> Result<Permutation> {
        let id = self
            .normal_factor
            .id_of(p)
            .ok_or_else(|| GroupError::NotMember(p.to_string()))?;
        Ok(regular(&self.normal_factor, id, self.group.degree()))
    }
}

/// Builds `N ⋊ H` where conjugation by the `i`-th generator of `H` sends the
/// `j`-th generator of `N` to `action[i][j]`.
///
/// The action is checked to extend to automorphisms of `N` and to define an
/// action of `H`; anything else is reported as [`GroupError::InvalidAction`].
pub fn semidirect_product(
    n: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    action: &[Vec<Permutation>],
) -> Result<SemidirectProduct> {
    n.ensure_enumerable()?;
    let m = n.n();
    let n_gens = n.generator_ids();
    if action.len() != h.generators().len() {
        return Err(GroupError::InvalidAction(format!(
            "{} action tables for {} generators",
            action.len(),
            h.generators().len()
        )));
    }
    let degree = m + h.degree();
    let mut complement_gens = Vec::with_capacity(action.len());
    for (i, table) in action.iter().enumerate() {
        if table.len() != n_gens.len() {
            return Err(GroupError::InvalidAction(format!(
                "generator {} of the acting group gives {} images for {} generators",
                i + 1,
                table.len(),
                n_gens.len()
            )));
        }
        let images = table
            .iter()
            .map(|p| {
                n.id_of(p).ok_or_else(|| {
                    GroupError::InvalidAction(format!("image {p} is not in the normal subgroup"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let phi = extend_to_automorphism(n, &n_gens, &images)?;
        let mut perm = phi;
        perm.extend(h.generators()[i].images0().iter().map(|&v| v + m as u32));
        complement_gens.push(Permutation::from_zero_based(perm));
    }
    let normal_gens: Vec<Permutation> = n_gens.iter().map(|&s| regular(n, s, degree)).collect();
    let gens = normal_gens.iter().chain(&complement_gens).cloned().collect();
    let group = FiniteGroup::with_limits(degree, gens, n.limits())?;
    let expected = n.order() * h.order();
    if group.order() != expected {
        return Err(GroupError::InvalidAction(format!(
            "the action tables do not respect the relations of the acting group \
             (order {} instead of {expected})",
            group.order()
        )));
    }
    Ok(SemidirectProduct {
        group,
        normal_gens,
        complement_gens,
        normal_factor: n.clone(),
    })
}

/// Right regular image of `s`, padded to `degree` points.
fn regular(n: &FiniteGroup, s: ElemId, degree: usize) -> Permutation {
    let m = n.n();
    let mut images: Vec<u32> = (0..m as u32).map(|x| n.mul(x, s)).collect();
    images.extend(m as u32..degree as u32);
    Permutation::from_zero_based(images)
}

/// Extends generator images to a map on all of `N`, checking that it is a
/// well-defined bijective homomorphism.
fn extend_to_automorphism(n: &FiniteGroup, gens: &[ElemId], images: &[ElemId]) -> Result<Vec<ElemId>> {
    let m = n.n();
    let mut phi = vec![u32::MAX; m];
    phi[0] = 0;
    let mut queue = vec![0u32];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = n.mul(x, s);
            let image = n.mul(phi[x as usize], t);
            match phi[y as usize] {
                u32::MAX => {
                    phi[y as usize] = image;
                    queue.push(y);
                }
                old if old != image => {
                    return Err(GroupError::InvalidAction(
                        "generator images do not define a homomorphism".into(),
                    ))
                }
                _ => {}
            }
        }
    }
    let mut seen = vec![false; m];
    for &v in &phi {
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(GroupError::InvalidAction("map is not bijective".into()));
        }
    }
    Ok(phi)
}
