//! Group-class predicates and the class-size hypotheses over factorised groups.

use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::arith;
use crate::catalog::FactorizedFixture;
use crate::factorization;
use crate::structure::{self, classes::whole_group_classes};
use crate::subgroup::SubgroupRef;
use crate::{GroupError, Result};

pub use crate::arith::is_square_free;

/// Derived series reaches 1.
pub fn is_soluble(h: &SubgroupRef) -> bool {
    structure::derived_series(h).last().unwrap().is_trivial()
}

/// Lower central series reaches 1.
pub fn is_nilpotent(h: &SubgroupRef) -> bool {
    structure::nilpotent_residual(h).is_trivial()
}

/// The subgroup generated by all `p'`-elements of `h`.
///
/// It is normal, and it is a normal `p`-complement exactly when `h` is `p`-nilpotent.
pub fn p_prime_residual(h: &SubgroupRef, p: u64) -> SubgroupRef {
    let g = h.ambient();
    let mut cur = g.trivial_subgroup().expect("enumerable");
    for x in h.ids() {
        if g.elem_order(x) % p != 0 && !cur.contains(x) {
            let mut gens = cur.generator_ids().to_vec();
            gens.push(x);
            cur = SubgroupRef::generated(g, &gens);
        }
    }
    cur
}

/// `h` has a normal `p`-complement.
pub fn is_p_nilpotent(h: &SubgroupRef, p: u64) -> Result<bool> {
    arith::require_prime(p)?;
    let complement = h.order() / arith::p_part(h.order(), p);
    Ok(p_prime_residual(h, p).order() == complement)
}

/// Every chief factor is a `p`-group or a `p'`-group.
pub fn is_p_soluble(h: &SubgroupRef, p: u64) -> Result<bool> {
    arith::require_prime(p)?;
    Ok(structure::chief_series(h).p_soluble(p))
}

/// Every chief factor has prime order.
pub fn is_supersoluble(h: &SubgroupRef) -> bool {
    structure::chief_series(h).all_prime()
}

/// Every chief factor of order divisible by `p` has order `p`.
pub fn is_p_supersoluble(h: &SubgroupRef, p: u64) -> Result<bool> {
    arith::require_prime(p)?;
    Ok(structure::chief_series(h).p_supersoluble(p))
}

/// Abelian with all non-identity elements of one prime order. The trivial
/// group counts as elementary abelian.
pub fn is_elementary_abelian(h: &SubgroupRef) -> bool {
    h.is_trivial() || elementary_abelian_prime(h).is_some()
}

/// The prime `p` when `h` is a non-trivial elementary abelian `p`-group.
pub fn elementary_abelian_prime(h: &SubgroupRef) -> Option<u64> {
    let p = arith::prime_power_base(h.order())?;
    let g = h.ambient();
    (h.is_abelian() && h.generator_ids().iter().all(|&x| g.elem_order(x) == p)).then_some(p)
}

/// Order not divisible by `p`.
pub fn is_p_regular(order: u64, p: u64) -> bool {
    order % p != 0
}

/// Order a power of `p` (including 1).
pub fn is_p_element(order: u64, p: u64) -> bool {
    arith::is_power_of(order, p)
}

/// Order 1 or a prime power.
pub fn is_prime_power_order(order: u64) -> bool {
    arith::is_prime_power(order)
}

/// The class-size hypotheses, one per theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HypothesisVariant {
    /// `G` a `p`-group with `p² ∤ |x^G|` for all `x ∈ A ∪ B`.
    Knoche(u64),
    /// Mutually permutable, `gcd(p-1, |G|) = 1`, `p² ∤ |x^G|` for `p`-regular
    /// `x ∈ A ∪ B` of prime power order.
    ThmA(u64),
    /// Mutually permutable, `G` `p`-soluble, same element condition as `ThmA`.
    ThmB(u64),
    /// Mutually permutable; for every prime `p`, `p² ∤ |x^G|` for `p`-regular
    /// `x ∈ A ∪ B` of prime power order.
    ThmCAllP,
    /// `G = AB` supersoluble; `|x^G|` square-free for `x ∈ A ∪ B` of prime power order.
    ThmDSqFree,
    /// Mutually permutable; for every prime `p`, `p² ∤ |x^G|` for all
    /// `p`-regular `x ∈ A ∪ B`.
    ThmEAllPReg,
    /// Mutually permutable; `|x^G|` square-free for all `x ∈ A ∪ B`.
    CorSqFreeAll,
    /// Mutually permutable, `G` soluble and `p`-nilpotent, element condition as `ThmA`.
    Elementary(u64),
    /// `G = AB` `p`-nilpotent; `p² ∤ |x^G|` for `p`-elements `x ∈ A ∪ B`.
    PNilpotent(u64),
    /// `p | |G|`, no prime divisor of `|G|` divides `p - 1`, and no class size
    /// of `G` is divisible by `p²`.
    Cw(u64),
}

impl HypothesisVariant {
    pub fn prime(&self) -> Option<u64> {
        match *self {
            Self::Knoche(p)
            | Self::ThmA(p)
            | Self::ThmB(p)
            | Self::Elementary(p)
            | Self::PNilpotent(p)
            | Self::Cw(p) => Some(p),
            _ => None,
        }
    }

    fn needs_mutual_permutability(&self) -> bool {
        !matches!(
            self,
            Self::Knoche(_) | Self::ThmDSqFree | Self::PNilpotent(_) | Self::Cw(_)
        )
    }
}

impl fmt::Display for HypothesisVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Knoche(p) => write!(f, "KNOCHE({p})"),
            Self::ThmA(p) => write!(f, "THM_A({p})"),
            Self::ThmB(p) => write!(f, "THM_B({p})"),
            Self::ThmCAllP => f.write_str("THM_C_ALLP"),
            Self::ThmDSqFree => f.write_str("THM_D_SQFREE"),
            Self::ThmEAllPReg => f.write_str("THM_E_ALLP_REG"),
            Self::CorSqFreeAll => f.write_str("COR_SQFREE_ALL"),
            Self::Elementary(p) => write!(f, "ELEM({p})"),
            Self::PNilpotent(p) => write!(f, "PNILP({p})"),
            Self::Cw(p) => write!(f, "CW({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideCondition {
    pub clause: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementFailure {
    /// Cycle notation.
    pub element: String,
    /// `"A"`, `"B"`, `"A and B"`, or `"G"` for conditions over the whole group.
    pub factor: String,
    pub class_size: u64,
    pub clause: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisOutcome {
    pub satisfied: bool,
    pub side_conditions: Vec<SideCondition>,
    pub failures: Vec<ElementFailure>,
}

/// Extra inputs for [`check_hypothesis_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct HypothesisOptions {
    /// Mutual permutability of the fixture, when the caller already knows it.
    pub mutually_permutable: Option<bool>,
}

pub fn check_hypothesis(fixture: &FactorizedFixture, variant: HypothesisVariant) -> Result<HypothesisOutcome> {
    check_hypothesis_with(fixture, variant, HypothesisOptions::default())
}

/// Evaluates the hypotheses of `variant` on `fixture`.
///
/// Arithmetic side conditions come first; if one fails the element scan is
/// skipped. Structural side conditions (solubility and the like, mutual
/// permutability) are only evaluated once the element scan has passed.
pub fn check_hypothesis_with(
    fixture: &FactorizedFixture,
    variant: HypothesisVariant,
    options: HypothesisOptions,
) -> Result<HypothesisOutcome> {
    use HypothesisVariant as V;
    if let Some(p) = variant.prime() {
        arith::require_prime(p)?;
    }
    let g = &fixture.group;
    let order = fixture.order();
    let whole = g.whole()?;
    let mut side = Vec::new();
    let push_side = |clause: String, holds: bool, side: &mut Vec<SideCondition>| {
        side.push(SideCondition { clause, holds });
        holds
    };

    let arithmetic_ok = match variant {
        V::Knoche(p) => push_side(format!("G is a {p}-group"), arith::is_power_of(order, p), &mut side),
        V::ThmA(p) => {
            let d = arith::gcd(p - 1, order);
            push_side(format!("gcd(p - 1, |G|) = 1 (gcd({}, {order}) = {d})", p - 1), d == 1, &mut side)
        }
        V::Cw(p) => {
            let divides = push_side(format!("{p} divides |G| = {order}"), order % p == 0, &mut side);
            let bad: Vec<u64> = arith::prime_divisors(order)
                .into_iter()
                .filter(|q| (p - 1) % q == 0)
                .collect();
            let clause = if bad.is_empty() {
                format!("no prime divisor of |G| divides p - 1 = {}", p - 1)
            } else {
                format!("no prime divisor of |G| divides p - 1 = {} (violated by {bad:?})", p - 1)
            };
            push_side(clause, bad.is_empty(), &mut side) && divides
        }
        _ => true,
    };
    if !arithmetic_ok {
        return Ok(HypothesisOutcome {
            satisfied: false,
            side_conditions: side,
            failures: Vec::new(),
        });
    }

    let table = whole_group_classes(g)?;
    let class_size = |x: u32| table.classes[table.class_of[x as usize] as usize].size;
    let primes = arith::prime_divisors(order);

    // (element filter, divisibility test) pairs; each returns the violated clause.
    let check_element = |ord: u64, size: u64| -> Vec<String> {
        let p2_for = |p: u64| size % (p * p) == 0;
        match variant {
            V::Knoche(p) => p2_for(p)
                .then(|| format!("{p}^2 does not divide |x^G|"))
                .into_iter()
                .collect(),
            V::ThmA(p) | V::ThmB(p) | V::Elementary(p) => (is_p_regular(ord, p)
                && is_prime_power_order(ord)
                && p2_for(p))
            .then(|| format!("{p}^2 does not divide |x^G| for {p}-regular x of prime power order"))
            .into_iter()
            .collect(),
            V::PNilpotent(p) => (is_p_element(ord, p) && p2_for(p))
                .then(|| format!("{p}^2 does not divide |x^G| for {p}-elements x"))
                .into_iter()
                .collect(),
            V::ThmCAllP => primes
                .iter()
                .filter(|&&p| is_p_regular(ord, p) && is_prime_power_order(ord) && p2_for(p))
                .map(|p| format!("{p}^2 does not divide |x^G| for {p}-regular x of prime power order"))
                .collect(),
            V::ThmEAllPReg => primes
                .iter()
                .filter(|&&p| is_p_regular(ord, p) && p2_for(p))
                .map(|p| format!("{p}^2 does not divide |x^G| for {p}-regular x"))
                .collect(),
            V::ThmDSqFree => (is_prime_power_order(ord) && !is_square_free(size))
                .then(|| "|x^G| square-free for x of prime power order".to_string())
                .into_iter()
                .collect(),
            V::CorSqFreeAll => (!is_square_free(size))
                .then(|| "|x^G| square-free".to_string())
                .into_iter()
                .collect(),
            V::Cw(p) => p2_for(p)
                .then(|| format!("no class size of G is divisible by {p}^2"))
                .into_iter()
                .collect(),
        }
    };

    let mut failures = Vec::new();
    if let V::Cw(_) = variant {
        for c in &table.classes {
            for clause in check_element(c.element_order, c.size) {
                failures.push(ElementFailure {
                    element: c.representative.to_string(),
                    factor: "G".into(),
                    class_size: c.size,
                    clause,
                });
            }
        }
    } else {
        let mut union = FixedBitSet::with_capacity(g.n());
        union.union_with(fixture.a.bits());
        union.union_with(fixture.b.bits());
        for x in union.ones() {
            let x = x as u32;
            let size = class_size(x);
            for clause in check_element(g.elem_order(x), size) {
                let factor = match (fixture.a.contains(x), fixture.b.contains(x)) {
                    (true, true) => "A and B",
                    (true, false) => "A",
                    _ => "B",
                };
                failures.push(ElementFailure {
                    element: g.element(x).to_string(),
                    factor: factor.into(),
                    class_size: size,
                    clause,
                });
            }
        }
    }
    if !failures.is_empty() {
        return Ok(HypothesisOutcome {
            satisfied: false,
            side_conditions: side,
            failures,
        });
    }

    let mut structural_ok = true;
    match variant {
        V::ThmB(p) => {
            structural_ok &= push_side(format!("G is {p}-soluble"), is_p_soluble(&whole, p)?, &mut side);
        }
        V::ThmDSqFree => {
            structural_ok &= push_side("G is supersoluble".into(), is_supersoluble(&whole), &mut side);
        }
        V::Elementary(p) => {
            structural_ok &= push_side("G is soluble".into(), is_soluble(&whole), &mut side);
            structural_ok &= push_side(format!("G is {p}-nilpotent"), is_p_nilpotent(&whole, p)?, &mut side);
        }
        V::PNilpotent(p) => {
            structural_ok &= push_side(format!("G is {p}-nilpotent"), is_p_nilpotent(&whole, p)?, &mut side);
        }
        _ => {}
    }
    if variant.needs_mutual_permutability() && structural_ok {
        let mp = match options.mutually_permutable {
            Some(known) => known,
            None => factorization::mutually_permutable(&whole, &fixture.a, &fixture.b)?.mutually_permutable,
        };
        structural_ok &= push_side("A and B are mutually permutable".into(), mp, &mut side);
    }
    Ok(HypothesisOutcome {
        satisfied: structural_ok,
        side_conditions: side,
        failures,
    })
}

/// Class sizes of the elements of `A ∪ B`, keyed by element id, for reports.
pub fn factor_class_sizes(fixture: &FactorizedFixture) -> Result<BTreeMap<u32, u64>> {
    let table = whole_group_classes(&fixture.group)?;
    let mut out = BTreeMap::new();
    for x in fixture.a.ids().chain(fixture.b.ids()) {
        out.insert(x, table.classes[table.class_of[x as usize] as usize].size);
    }
    Ok(out)
}

/// Rejects a fixture whose subgroups do not belong to its group.
pub fn validate_fixture(fixture: &FactorizedFixture) -> Result<()> {
    fixture.a.same_ambient(&fixture.b)?;
    if !std::sync::Arc::ptr_eq(fixture.a.ambient(), &fixture.group) {
        return Err(GroupError::AmbientMismatch);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_example, alternating, dicyclic, dihedral, symmetric};

    #[test]
    fn class_predicates() {
        let a5 = alternating(5).unwrap().whole().unwrap();
        assert!(!is_soluble(&a5));
        assert!(!is_p_soluble(&a5, 5).unwrap());
        let s4 = symmetric(4).unwrap().whole().unwrap();
        assert!(is_soluble(&s4) && !is_nilpotent(&s4));
        assert!(!is_supersoluble(&s4));
        assert!(is_p_supersoluble(&s4, 3).unwrap());
        let q8 = dicyclic(8).unwrap().whole().unwrap();
        assert!(is_soluble(&q8) && is_nilpotent(&q8));
        let s3 = symmetric(3).unwrap().whole().unwrap();
        assert!(is_p_nilpotent(&s3, 2).unwrap());
        assert!(!is_p_nilpotent(&s3, 3).unwrap());
        let s3s3 = builtin_example("s3_x_s3").unwrap();
        assert!(is_supersoluble(&s3s3.group.whole().unwrap()));
        let d8c5c4 = builtin_example("d8_x_c5c4").unwrap();
        assert!(is_p_nilpotent(&d8c5c4.group.whole().unwrap(), 2).unwrap());
    }

    #[test]
    fn elementary_abelian() {
        let v4 = dihedral(4).unwrap().whole().unwrap();
        assert_eq!(elementary_abelian_prime(&v4), Some(2));
        let c4 = crate::catalog::cyclic(4).unwrap().whole().unwrap();
        assert!(!is_elementary_abelian(&c4));
        assert!(is_elementary_abelian(&crate::catalog::cyclic(1).unwrap().whole().unwrap()));
    }

    #[test]
    fn element_filters() {
        assert!(is_p_regular(6, 5));
        assert!(!is_prime_power_order(12));
        assert!(!is_square_free(12));
        assert!(is_square_free(30));
    }

    #[test]
    fn paper_hypotheses() {
        let s3s3 = builtin_example("s3_x_s3").unwrap();
        assert!(check_hypothesis(&s3s3, HypothesisVariant::ThmA(2)).unwrap().satisfied);
        let q8d8 = builtin_example("q8_x_d8").unwrap();
        assert!(check_hypothesis(&q8d8, HypothesisVariant::CorSqFreeAll).unwrap().satisfied);
        let a5 = builtin_example("a5").unwrap();
        let out = check_hypothesis(&a5, HypothesisVariant::ThmA(3)).unwrap();
        assert!(!out.satisfied);
        assert!(out.side_conditions.iter().any(|c| !c.holds && c.clause.starts_with("gcd")));
        let big = builtin_example("s3_x_s3xd10").unwrap();
        let out = check_hypothesis(&big, HypothesisVariant::ThmEAllPReg).unwrap();
        assert!(!out.satisfied);
        assert!(out.failures.iter().any(|f| f.factor == "B" && f.class_size % 4 == 0));
        assert!(check_hypothesis(&big, HypothesisVariant::ThmCAllP).unwrap().satisfied);
    }
}
