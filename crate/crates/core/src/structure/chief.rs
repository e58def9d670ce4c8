//! Chief series.

use serde::Serialize;

use super::lattice::normal_subgroups;
use crate::arith;
use crate::subgroup::SubgroupRef;

/// `1 = G₀ < G₁ < … < Gₖ = H`, each term normal in `H` and each factor a
/// minimal normal subgroup of the corresponding quotient.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub terms: Vec<SubgroupRef>,
    pub factors: Vec<ChiefFactor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiefFactor {
    pub order: u64,
    pub is_prime: bool,
    /// Prime when the factor is an elementary abelian `p`-group.
    pub prime_power_of: Option<u64>,
}

impl ChiefSeries {
    pub fn factor_orders(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.order).collect()
    }

    /// Every chief factor has prime order.
    pub fn all_prime(&self) -> bool {
        self.factors.iter().all(|f| f.is_prime)
    }

    /// Every factor of order divisible by `p` has order exactly `p`.
    pub fn p_supersoluble(&self, p: u64) -> bool {
        self.factors.iter().all(|f| f.order % p != 0 || f.order == p)
    }

    /// Every factor is a `p`-group or a `p'`-group.
    pub fn p_soluble(&self, p: u64) -> bool {
        self.factors
            .iter()
            .all(|f| f.order % p != 0 || arith::is_power_of(f.order, p))
    }
}

/// Chief series of `h`, built bottom-up. At each step the minimal normal
/// subgroup above the current term with the smallest fingerprint is chosen.
pub fn chief_series(h: &SubgroupRef) -> ChiefSeries {
    let normals = normal_subgroups(h);
    let mut cur = normals[0].clone();
    let mut terms = vec![cur.clone()];
    let mut factors = Vec::new();
    while cur.order() < h.order() {
        let above: Vec<&SubgroupRef> = normals
            .iter()
            .filter(|n| n.order() > cur.order() && cur.is_subgroup_of(n))
            .collect();
        let next = above
            .iter()
            .filter(|n| {
                !above
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
            })
            .min_by_key(|n| n.fingerprint())
            .expect("h itself lies above every proper term");
        let order = next.order() / cur.order();
        factors.push(ChiefFactor {
            order,
            is_prime: arith::is_prime(order),
            prime_power_of: arith::prime_power_base(order),
        });
        cur = (*next).clone();
        terms.push(cur.clone());
    }
    ChiefSeries { terms, factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn sym4() {
        let s4 = FiniteGroup::from_cycle_strings(4, &["(1 2)", "(1 2 3 4)"]).unwrap();
        let cs = chief_series(&s4.whole().unwrap());
        assert_eq!(cs.factor_orders(), vec![4, 3, 2]);
        assert!(!cs.all_prime());
        assert!(cs.p_supersoluble(3));
        assert!(!cs.p_supersoluble(2));
        assert!(cs.p_soluble(2) && cs.p_soluble(3));
    }

    #[test]
    fn small_cases() {
        let c5 = FiniteGroup::from_cycle_strings(5, &["(1 2 3 4 5)"]).unwrap();
        assert_eq!(chief_series(&c5.whole().unwrap()).factor_orders(), vec![5]);
        let s3 = FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).unwrap();
        assert_eq!(chief_series(&s3.whole().unwrap()).factor_orders(), vec![3, 2]);
        let a5 = FiniteGroup::from_cycle_strings(5, &["(1 2 3)", "(1 2 3 4 5)"]).unwrap();
        let cs = chief_series(&a5.whole().unwrap());
        assert_eq!(cs.factor_orders(), vec![60]);
        assert!(!cs.p_soluble(5));
        let one = FiniteGroup::trivial(1);
        assert!(chief_series(&one.whole().unwrap()).factors.is_empty());
    }
}
