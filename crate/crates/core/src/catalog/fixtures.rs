//! Factorised groups `G = AB`, including the bundled examples.

use std::sync::Arc;

use super::products::{direct_product_of, semidirect_product};
use super::spec::{alternating, cyclic, dicyclic, dihedral, semidirect_cyclic, symmetric};
use crate::arith;
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::subgroup::SubgroupRef;
use crate::{GroupError, Result};

/// A group together with subgroups `A`, `B` such that `G = AB`.
#[derive(Clone, Debug)]
pub struct FactorizedFixture {
    pub label: String,
    pub group: Arc<FiniteGroup>,
    pub a: SubgroupRef,
    pub b: SubgroupRef,
    /// Free-form description of where the fixture comes from.
    pub notes: String,
}

impl FactorizedFixture {
    /// Checks that `A` and `B` generate subgroups with `AB = G`.
    pub fn new(
        label: &str,
        group: Arc<FiniteGroup>,
        a_gens: &[Permutation],
        b_gens: &[Permutation],
        notes: &str,
    ) -> Result<Self> {
        let a = group.subgroup(a_gens)?;
        let b = group.subgroup(b_gens)?;
        Self::from_subgroups(label, a, b, notes)
    }

    pub fn from_subgroups(label: &str, a: SubgroupRef, b: SubgroupRef, notes: &str) -> Result<Self> {
        a.same_ambient(&b)?;
        let group = a.ambient().clone();
        if a.product_size(&b) != group.order_u64() {
            return Err(GroupError::MalformedSpec(format!(
                "{label}: |AB| = {} but |G| = {}",
                a.product_size(&b),
                group.order()
            )));
        }
        Ok(Self {
            label: label.to_string(),
            group,
            a,
            b,
            notes: notes.to_string(),
        })
    }

    /// `G = G·G`.
    pub fn whole(label: &str, group: Arc<FiniteGroup>, notes: &str) -> Result<Self> {
        let w = group.whole()?;
        Self::from_subgroups(label, w.clone(), w, notes)
    }

    pub fn order(&self) -> u64 {
        self.group.order_u64()
    }
}

/// Ids accepted by [`builtin_example`], besides `dihedral_chain(p1,...,pn)`.
pub const BUILTIN_IDS: &[&str] = &[
    "q8_x_d8",
    "sg32_35",
    "sg300_25",
    "s4_a4_sylow2",
    "s3_x_s3",
    "d14_x_294_9",
    "d8_x_c5c4",
    "s3_x_s3xd10",
    "a5",
];

/// Splits a direct product of `factors` into `A` = the factors listed in
/// `a_parts` and `B` = the rest.
fn split_direct(
    label: &str,
    factors: &[Arc<FiniteGroup>],
    a_parts: &[usize],
    notes: &str,
) -> Result<FactorizedFixture> {
    let refs: Vec<&FiniteGroup> = factors.iter().map(|g| g.as_ref()).collect();
    let dp = direct_product_of(&refs)?;
    let b_parts: Vec<usize> = (0..factors.len()).filter(|i| !a_parts.contains(i)).collect();
    FactorizedFixture::from_subgroups(label, dp.factors(a_parts)?, dp.factors(&b_parts)?, notes)
}

/// `C4 ⋊ Q8`: the element `i` of `Q8` centralises `C4` and `j` inverts it.
/// `A` is the `C4`, `B` the `Q8`.
fn sg32_35() -> Result<FactorizedFixture> {
    let c4 = cyclic(4)?;
    let q8 = dicyclic(8)?;
    let c = c4.generators()[0].clone();
    let sp = semidirect_product(&c4, &q8, &[vec![c.clone()], vec![c.inverse()]])?;
    FactorizedFixture::new(
        "sg32_35",
        sp.group.clone(),
        sp.normal_generators(),
        sp.complement_generators(),
        "order 32 product of C4 and Q8 with P' = Phi(P) = Z(P) = C2 x C2",
    )
}

/// `[C5 × C5](Sym(3) × C2)` of order 300, factorised as
/// `A = D10 × D10` and `B = [C5 × C5]C3`.
///
/// Writing `C5 × C5` additively as `F5²`, the transposition of `Sym(3)` acts as
/// `diag(-1, 1)`, the 3-cycle as `[[2, 1], [3, 2]]` (columns are the images of
/// the basis vectors) and the `C2` as `-I`.
fn sg300_25() -> Result<FactorizedFixture> {
    let c5 = cyclic(5)?;
    let n = direct_product_of(&[&c5, &c5])?;
    let n_group = n.group.clone();
    let (a, b) = (n_group.generators()[0].clone(), n_group.generators()[1].clone());
    let h = direct_product_of(&[&*symmetric(3)?, &*cyclic(2)?])?.group;
    let word = |i: i64, j: i64| &a.pow(i) * &b.pow(j);
    let action = vec![
        vec![word(-1, 0), word(0, 1)],
        vec![word(2, 3), word(1, 2)],
        vec![word(-1, 0), word(0, -1)],
    ];
    let sp = semidirect_product(&n_group, &h, &action)?;
    let normal = sp.normal_generators();
    let hat = sp.complement_generators();
    let a_gens = vec![normal[0].clone(), normal[1].clone(), hat[0].clone(), &hat[0] * &hat[2]];
    let b_gens = vec![normal[0].clone(), normal[1].clone(), hat[1].clone()];
    FactorizedFixture::new(
        "sg300_25",
        sp.group.clone(),
        &a_gens,
        &b_gens,
        "[C5 x C5](Sym(3) x C2) of order 300 with A = D10 x D10 and B = [C5 x C5]C3",
    )
}

fn parse_chain(id: &str) -> Option<Result<Vec<u64>>> {
    let inner = id
        .strip_prefix("dihedral_chain")?
        .trim()
        .strip_prefix(['(', ':'])?
        .trim_end_matches(')');
    let primes: std::result::Result<Vec<u64>, _> =
        inner.split(',').map(|t| t.trim().parse::<u64>()).collect();
    Some(match primes {
        Ok(ps) if !ps.is_empty() => {
            let mut sorted = ps.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != ps.len() || ps.iter().any(|&p| p == 2 || !arith::is_prime(p)) {
                Err(GroupError::MalformedSpec(format!(
                    "dihedral_chain needs distinct odd primes, got {inner}"
                )))
            } else {
                Ok(ps)
            }
        }
        _ => Err(GroupError::MalformedSpec(format!("bad prime list in {id:?}"))),
    })
}

/// One of the bundled factorised groups.
///
/// `dihedral_chain(p1,...,pn)` builds `D_{2p1} × ... × D_{2pn}` with
/// `A = D_{2p1}` and `B` the product of the others.
pub fn builtin_example(id: &str) -> Result<FactorizedFixture> {
    if let Some(primes) = parse_chain(id) {
        let primes = primes?;
        let factors = primes
            .iter()
            .map(|&p| dihedral(2 * p as usize))
            .collect::<Result<Vec<_>>>()?;
        let label = format!(
            "dihedral_chain({})",
            primes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        );
        return split_direct(&label, &factors, &[0], "direct product of dihedral groups of order 2p");
    }
    match id {
        "q8_x_d8" => split_direct("q8_x_d8", &[dicyclic(8)?, dihedral(8)?], &[0], "Q8 x D8"),
        "sg32_35" => sg32_35(),
        "sg300_25" => sg300_25(),
        "s4_a4_sylow2" => {
            let s4 = symmetric(4)?;
            let p = |s: &str| Permutation::parse(s, 4).expect("valid");
            FactorizedFixture::new(
                "s4_a4_sylow2",
                s4,
                &[p("(1 2 3)"), p("(1 2)(3 4)")],
                &[p("(1 2 3 4)"), p("(1 3)")],
                "Sym(4) = Alt(4) D8",
            )
        }
        "s3_x_s3" => split_direct("s3_x_s3", &[symmetric(3)?, symmetric(3)?], &[0], "Sym(3) x Sym(3)"),
        "d14_x_294_9" => split_direct(
            "d14_x_294_9",
            &[dihedral(14)?, dihedral(14)?, semidirect_cyclic(7, 3, 2)?],
            &[0],
            "D14 x (D14 x [C7]C3), the second factor of order 294",
        ),
        "d8_x_c5c4" => split_direct(
            "d8_x_c5c4",
            &[dihedral(8)?, semidirect_cyclic(5, 4, 4)?],
            &[0],
            "D8 x [C5]C4",
        ),
        "s3_x_s3xd10" => split_direct(
            "s3_x_s3xd10",
            &[symmetric(3)?, symmetric(3)?, dihedral(10)?],
            &[0],
            "Sym(3) x (Sym(3) x D10)",
        ),
        "a5" => FactorizedFixture::whole("a5", alternating(5)?, "Alt(5) = Alt(5) Alt(5)"),
        other => Err(GroupError::UnknownExample(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let expect = [
            ("q8_x_d8", 64, 8, 8),
            ("sg32_35", 32, 4, 8),
            ("sg300_25", 300, 100, 75),
            ("s4_a4_sylow2", 24, 12, 8),
            ("s3_x_s3", 36, 6, 6),
            ("d14_x_294_9", 4116, 14, 294),
            ("d8_x_c5c4", 160, 8, 20),
            ("s3_x_s3xd10", 360, 6, 60),
            ("a5", 60, 60, 60),
            ("dihedral_chain(3,5,7)", 840, 6, 140),
        ];
        for (id, g, a, b) in expect {
            let f = builtin_example(id).unwrap();
            assert_eq!((f.order(), f.a.order(), f.b.order()), (g, a, b), "{id}");
        }
    }

    #[test]
    fn unknown_and_malformed() {
        assert!(matches!(builtin_example("nope"), Err(GroupError::UnknownExample(_))));
        assert!(builtin_example("dihedral_chain(3,3)").is_err());
        assert!(builtin_example("dihedral_chain(2,3)").is_err());
        assert!(builtin_example("dihedral_chain(9)").is_err());
        assert_eq!(builtin_example("dihedral_chain:3,5").unwrap().order(), 60);
    }

    #[test]
    fn non_product_rejected() {
        let s3 = symmetric(3).unwrap();
        let t = Permutation::parse("(1 2)", 3).unwrap();
        assert!(FactorizedFixture::new("x", s3, std::slice::from_ref(&t), std::slice::from_ref(&t), "").is_err());
    }
}
