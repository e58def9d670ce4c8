//! Products of subgroups, permutability and mutually permutable factorisations.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU8, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::structure::{all_subgroups, hall_subgroups};
use crate::subgroup::{closure, SubgroupRef};
use crate::{GroupError, Result};

/// `H = AB` as sets, for subgroups `A`, `B` of `H`.
pub fn is_product(h: &SubgroupRef, a: &SubgroupRef, b: &SubgroupRef) -> Result<bool> {
    h.same_ambient(a)?;
    h.same_ambient(b)?;
    if !a.is_subgroup_of(h) || !b.is_subgroup_of(h) {
        return Err(GroupError::NotSubgroup("factor".into()));
    }
    Ok(a.product_size(b) == h.order())
}

/// `AH = HA`, i.e. the product set `AH` is a subgroup.
pub fn permutes(a: &SubgroupRef, h: &SubgroupRef) -> Result<bool> {
    a.same_ambient(h)?;
    Ok(permutes_unchecked(a, h))
}

fn permutes_unchecked(a: &SubgroupRef, h: &SubgroupRef) -> bool {
    if a.is_subgroup_of(h) || h.is_subgroup_of(a) {
        return true;
    }
    let g = a.ambient();
    let m = a.product_size(h);
    if m as usize == g.n() {
        return true;
    }
    if g.order_u64() % m != 0 {
        return false;
    }
    if h.is_normalized_by(a) || a.is_normalized_by(h) {
        return true;
    }
    let mut gens = a.generator_ids().to_vec();
    gens.extend_from_slice(h.generator_ids());
    closure(g, &gens, Some(m as usize)).is_some()
}

/// A subgroup of one factor that fails to permute with the other factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutabilityWitness {
    /// The factor containing the subgroup (`"A"` or `"B"`).
    pub inside: String,
    /// Generators of the subgroup, in cycle notation.
    pub subgroup: Vec<String>,
    pub subgroup_order: u64,
    /// `|XU|` for the other factor `X` and the subgroup `U`.
    pub product_size: u64,
}

/// Outcome of [`mutually_permutable`].
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationCertificate {
    #[serde(skip)]
    pub a: SubgroupRef,
    #[serde(skip)]
    pub b: SubgroupRef,
    pub a_order: u64,
    pub b_order: u64,
    pub is_product: bool,
    pub mutually_permutable: bool,
    pub witness: Option<PermutabilityWitness>,
}

fn witness(inside: &str, other: &SubgroupRef, u: &SubgroupRef) -> PermutabilityWitness {
    PermutabilityWitness {
        inside: inside.into(),
        subgroup: u.generators().iter().map(|p| p.to_string()).collect(),
        subgroup_order: u.order(),
        product_size: other.product_size(u),
    }
}

/// Checks `H = AB` and that `A` permutes with every subgroup of `B` and `B`
/// with every subgroup of `A`.
pub fn mutually_permutable(h: &SubgroupRef, a: &SubgroupRef, b: &SubgroupRef) -> Result<FactorizationCertificate> {
    let is_product = is_product(h, a, b)?;
    let mut cert = FactorizationCertificate {
        a: a.clone(),
        b: b.clone(),
        a_order: a.order(),
        b_order: b.order(),
        is_product,
        mutually_permutable: true,
        witness: None,
    };
    // A normal factor permutes with every subgroup.
    let a_normal = a.is_normal_in(h);
    let b_normal = b.is_normal_in(h);
    if !b_normal && !a.is_subgroup_of(b) {
        if let Some(u) = all_subgroups(a)?.into_iter().find(|u| !permutes_unchecked(b, u)) {
            cert.mutually_permutable = false;
            cert.witness = Some(witness("A", b, &u));
            return Ok(cert);
        }
    }
    if !a_normal && !b.is_subgroup_of(a) {
        if let Some(u) = all_subgroups(b)?.into_iter().find(|u| !permutes_unchecked(a, u)) {
            cert.mutually_permutable = false;
            cert.witness = Some(witness("B", a, &u));
        }
    }
    Ok(cert)
}

/// Options for [`find_mp_factorizations`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorizationOptions {
    /// Exclude factorisations in which a factor is the whole group.
    pub proper: bool,
    /// Also report `H = H·H`.
    pub include_whole: bool,
    /// Keep one pair per orbit of simultaneous conjugation.
    pub dedupe_conjugates: bool,
}

impl Default for FactorizationOptions {
    fn default() -> Self {
        Self {
            proper: true,
            include_whole: false,
            dedupe_conjugates: false,
        }
    }
}

/// Memo of `permutes(L[i], L[j])` over the subgroup lattice `L`.
struct PermuteMemo<'a> {
    lattice: &'a [SubgroupRef],
    cells: Vec<AtomicU8>,
}

impl<'a> PermuteMemo<'a> {
    fn new(lattice: &'a [SubgroupRef]) -> Self {
        let n = lattice.len();
        Self {
            lattice,
            cells: (0..n * n).map(|_| AtomicU8::new(0)).collect(),
        }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        let (i, j) = (i.min(j), i.max(j));
        let cell = &self.cells[i * self.lattice.len() + j];
        match cell.load(Ordering::Relaxed) {
            1 => false,
            2 => true,
            _ => {
                let v = permutes_unchecked(&self.lattice[i], &self.lattice[j]);
                cell.store(if v { 2 } else { 1 }, Ordering::Relaxed);
                v
            }
        }
    }
}

/// All factorisations `H = AB` with `A`, `B` mutually permutable, as
/// unordered pairs oriented so that `|A| ≥ |B|`, sorted by `(|A|, |B|)`
/// descending.
pub fn find_mp_factorizations(h: &SubgroupRef, options: FactorizationOptions) -> Result<Vec<FactorizationCertificate>> {
    factorizations(h, options, true)
}

/// Every factorisation `H = AB` in the same order as
/// [`find_mp_factorizations`], each marked with its mutual permutability.
pub fn find_factorizations(h: &SubgroupRef, options: FactorizationOptions) -> Result<Vec<FactorizationCertificate>> {
    factorizations(h, options, false)
}

fn factorizations(h: &SubgroupRef, options: FactorizationOptions, mp_only: bool) -> Result<Vec<FactorizationCertificate>> {
    let lattice = all_subgroups(h)?;
    let n = lattice.len();
    let order = h.order();
    let index: HashMap<&fixedbitset::FixedBitSet, usize> =
        lattice.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
    // below[i]: indices of the subgroups of L[i].
    let below: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| (0..=i).filter(|&j| lattice[j].is_subgroup_of(&lattice[i])).collect())
        .collect();
    let normal: Vec<bool> = lattice.par_iter().map(|s| s.is_normal_in(h)).collect();
    let whole = n - 1;

    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..=i {
            let (a, b) = (&lattice[i], &lattice[j]);
            if order % a.order() != 0 || a.product_size(b) != order {
                continue;
            }
            let has_whole = i == whole || j == whole;
            let keep = if i == whole && j == whole {
                options.include_whole || !options.proper
            } else {
                !(options.proper && has_whole)
            };
            if keep {
                pairs.push((i, j));
            }
        }
    }
    if options.dedupe_conjugates {
        // Conjugation by each generator of H as a permutation of the lattice.
        let actions: Vec<Vec<usize>> = h
            .generator_ids()
            .iter()
            .map(|&x| lattice.iter().map(|s| index[s.conjugate(x).bits()]).collect())
            .collect();
        let mut seen = std::collections::HashSet::new();
        pairs.retain(|&pair| {
            if seen.contains(&pair) {
                return false;
            }
            seen.insert(pair);
            let mut stack = vec![pair];
            while let Some((i, j)) = stack.pop() {
                for act in &actions {
                    let next = (act[i].max(act[j]), act[i].min(act[j]));
                    if seen.insert(next) {
                        stack.push(next);
                    }
                }
            }
            true
        });
    }

    let memo = PermuteMemo::new(&lattice);
    let mut out: Vec<FactorizationCertificate> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let fails_a = if normal[j] { None } else { below[i].iter().find(|&&u| !memo.get(j, u)) };
            let fails_b = if normal[i] || fails_a.is_some() {
                None
            } else {
                below[j].iter().find(|&&u| !memo.get(i, u))
            };
            let mp = fails_a.is_none() && fails_b.is_none();
            let witness = match (fails_a, fails_b) {
                (Some(&u), _) => Some(witness("A", &lattice[j], &lattice[u])),
                (_, Some(&u)) => Some(witness("B", &lattice[i], &lattice[u])),
                _ => None,
            };
            (mp || !mp_only).then(|| FactorizationCertificate {
                a: lattice[i].clone(),
                b: lattice[j].clone(),
                a_order: lattice[i].order(),
                b_order: lattice[j].order(),
                is_product: true,
                mutually_permutable: mp,
                witness,
            })
        })
        .collect();
    out.sort_by(|x, y| {
        (y.a_order, y.b_order, x.a.fingerprint(), x.b.fingerprint())
            .cmp(&(x.a_order, x.b_order, y.a.fingerprint(), y.b.fingerprint()))
    });
    Ok(out)
}

/// A Hall `π`-subgroup `H` of `G = AB` with `H = (H ∩ A)(H ∩ B)`.
#[derive(Clone, Debug)]
pub struct HallFactorization {
    pub hall: SubgroupRef,
    pub hall_a: SubgroupRef,
    pub hall_b: SubgroupRef,
}

/// Searches the Hall `π`-subgroups of `g` for one that is the product of its
/// intersections with `A` and `B`. `None` means there is no such subgroup.
pub fn hall_factorization(
    g: &SubgroupRef,
    a: &SubgroupRef,
    b: &SubgroupRef,
    pi: &[u64],
) -> Result<Option<HallFactorization>> {
    for &p in pi {
        arith::require_prime(p)?;
    }
    if !is_product(g, a, b)? {
        return Err(GroupError::MalformedSpec("G is not the product AB".into()));
    }
    for hall in hall_subgroups(g, pi)? {
        let ha = hall.intersection(a);
        let hb = hall.intersection(b);
        if ha.order() == arith::pi_part(a.order(), pi)
            && hb.order() == arith::pi_part(b.order(), pi)
            && ha.product_size(&hb) == hall.order()
        {
            return Ok(Some(HallFactorization {
                hall,
                hall_a: ha,
                hall_b: hb,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_example, cyclic, symmetric};
    use crate::perm::Permutation;

    #[test]
    fn transpositions_do_not_permute() {
        let s3 = symmetric(3).unwrap();
        let a = s3.subgroup(&[Permutation::parse("(1 2)", 3).unwrap()]).unwrap();
        let b = s3.subgroup(&[Permutation::parse("(1 3)", 3).unwrap()]).unwrap();
        assert!(!permutes(&a, &b).unwrap());
        let c3 = s3.subgroup(&[Permutation::parse("(1 2 3)", 3).unwrap()]).unwrap();
        assert!(permutes(&a, &c3).unwrap());
    }

    #[test]
    fn cyclic_prime_factorizations() {
        let c5 = cyclic(5).unwrap().whole().unwrap();
        assert!(find_mp_factorizations(&c5, FactorizationOptions::default()).unwrap().is_empty());
        let all = FactorizationOptions {
            proper: false,
            ..Default::default()
        };
        let found = find_mp_factorizations(&c5, all).unwrap();
        let orders: Vec<(u64, u64)> = found.iter().map(|c| (c.a_order, c.b_order)).collect();
        assert_eq!(orders, vec![(5, 5), (5, 1)]);
    }

    #[test]
    fn sym3_factorizations() {
        let s3 = symmetric(3).unwrap().whole().unwrap();
        let all = find_factorizations(&s3, FactorizationOptions::default()).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|c| c.mutually_permutable));
        let found = find_mp_factorizations(&s3, FactorizationOptions::default()).unwrap();
        // C3 with each of the three C2.
        assert_eq!(found.len(), 3);
        assert!(found.iter().all(|c| (c.a_order, c.b_order) == (3, 2)));
        let deduped = find_mp_factorizations(
            &s3,
            FactorizationOptions {
                dedupe_conjugates: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(deduped.len(), 1);
    }

    #[test]
    fn fixtures_mutually_permutable() {
        for id in ["s3_x_s3", "q8_x_d8", "sg300_25", "sg32_35"] {
            let f = builtin_example(id).unwrap();
            let cert = mutually_permutable(&f.group.whole().unwrap(), &f.a, &f.b).unwrap();
            assert!(cert.is_product && cert.mutually_permutable, "{id}");
        }
        // Alt(4) is normal in Sym(4), so it permutes with every subgroup.
        let f = builtin_example("s4_a4_sylow2").unwrap();
        let cert = mutually_permutable(&f.group.whole().unwrap(), &f.a, &f.b).unwrap();
        assert!(cert.is_product && cert.mutually_permutable);
        let s3 = symmetric(3).unwrap();
        let t = |s: &str| s3.subgroup(&[Permutation::parse(s, 3).unwrap()]).unwrap();
        let cert = mutually_permutable(&s3.whole().unwrap(), &t("(1 2)"), &t("(1 3)")).unwrap();
        assert!(!cert.is_product);
    }

    #[test]
    fn hall_factorization_sym4() {
        let f = builtin_example("s4_a4_sylow2").unwrap();
        let g = f.group.whole().unwrap();
        let h = hall_factorization(&g, &f.a, &f.b, &[2]).unwrap().unwrap();
        assert_eq!(h.hall.order(), 8);
        assert_eq!(h.hall_a.order() * h.hall_b.order() / h.hall_a.intersection(&h.hall_b).order(), 8);
        let h3 = hall_factorization(&g, &f.a, &f.b, &[3]).unwrap().unwrap();
        assert_eq!(h3.hall.order(), 3);
    }
}
