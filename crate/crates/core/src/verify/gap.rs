//! The `p²`-class-size bound that fails for `|G/O_p(G)|_p`, and the checker for
//! minimal normal `p'`-subgroups.

use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use super::conclusions::{self, Conclusion};
use super::Verdict;
use crate::arith;
use crate::catalog::FactorizedFixture;
use crate::group::FiniteGroup;
use crate::predicates::{check_hypothesis, is_p_nilpotent, HypothesisOutcome, HypothesisVariant, SideCondition};
use crate::structure::{
    centralizer_of_subgroup, class_size_in_group, derived_subgroup, minimal_normal_subgroups, p_core,
    sylow_subgroup, Quotient,
};
use crate::subgroup::SubgroupRef;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CwGapReport {
    pub group_label: String,
    pub group_order: u64,
    pub prime: u64,
    pub hypotheses: HypothesisOutcome,
    /// `|G/O_p(G)|_p ≤ p`, evaluated only when the hypotheses hold.
    pub claim: Option<Conclusion>,
    pub claim_fails: bool,
    /// The remaining assertions, which are expected to hold.
    pub clauses: Vec<Conclusion>,
}

/// Evaluates the hypotheses "`p | |G|`, no prime divisor of `|G|` divides
/// `p - 1`, no class size divisible by `p²`" and, when they hold, the claim
/// `|G/O_p(G)|_p ≤ p` together with the companion assertions.
pub fn check_cw_gap(g: &Arc<FiniteGroup>, p: u64, label: &str) -> Result<CwGapReport> {
    arith::require_prime(p)?;
    let fixture = FactorizedFixture::whole(label, g.clone(), "")?;
    let hypotheses = check_hypothesis(&fixture, HypothesisVariant::Cw(p))?;
    let mut report = CwGapReport {
        group_label: label.to_string(),
        group_order: g.order_u64(),
        prime: p,
        hypotheses,
        claim: None,
        claim_fails: false,
        clauses: Vec::new(),
    };
    if !report.hypotheses.satisfied {
        return Ok(report);
    }
    let whole = g.whole()?;
    let sylow = sylow_subgroup(&whole, p)?;
    let core = p_core(&whole, p)?;
    let quotient_part = sylow.order() / core.order();
    let claim = Conclusion::new(
        format!("|G/O_{p}(G)|_{p} <= {p}"),
        quotient_part <= p,
        json!({
            "o_p_order": core.order(),
            "sylow_order": sylow.order(),
            "quotient_p_part": quotient_part,
        }),
    );
    report.claim_fails = !claim.holds;
    report.claim = Some(claim);
    let d = derived_subgroup(&sylow);
    report.clauses = vec![
        conclusions::soluble(&whole),
        conclusions::p_nilpotent(&whole, p)?,
        Conclusion::new(format!("|P'| <= {p}"), d.order() <= p, json!({ "derived_order": d.order() })),
        Conclusion::new(
            format!("O_{p}(G) is abelian when P != O_{p}(G)"),
            sylow == core || core.is_abelian(),
            json!({ "o_p_order": core.order(), "o_p_abelian": core.is_abelian(), "sylow_order": sylow.order() }),
        ),
    ];
    Ok(report)
}

/// One part of [`check_proposition`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartOutcome {
    pub applicable: bool,
    pub hypotheses: Vec<SideCondition>,
    pub holds: Option<bool>,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropositionReport {
    pub prime: u64,
    pub group_order: u64,
    pub n_order: u64,
    pub preconditions: Vec<SideCondition>,
    pub part1: Option<PartOutcome>,
    pub part2: Option<PartOutcome>,
    pub verdict: Verdict,
}

fn cond(clause: impl Into<String>, holds: bool) -> SideCondition {
    SideCondition {
        clause: clause.into(),
        holds,
    }
}

/// For an abelian minimal normal `p'`-subgroup `N` of `G`:
///
/// 1. if `G` is `p`-nilpotent and `p² ∤ |x^G|` for all `x ∈ N`, then
///    `|O_p(G/N·O_p(G))| ≤ p`;
/// 2. if `K/N·O_p(G) = O_p(G/N·O_p(G))` has order `p` and `P` is a Sylow
///    `p`-subgroup of `K`, then `C_N(P) = 1`.
pub fn check_proposition(g: &Arc<FiniteGroup>, n: &SubgroupRef, p: u64) -> Result<PropositionReport> {
    arith::require_prime(p)?;
    let whole = g.whole()?;
    whole.same_ambient(n)?;
    let normal = n.is_normal_in(&whole);
    let minimal = normal && minimal_normal_subgroups(&whole).iter().any(|m| m == n);
    let preconditions = vec![
        cond("N is a minimal normal subgroup of G", minimal),
        cond("N is abelian", n.is_abelian()),
        cond(format!("N is a {p}'-group"), n.order() % p != 0),
    ];
    let mut report = PropositionReport {
        prime: p,
        group_order: g.order_u64(),
        n_order: n.order(),
        preconditions,
        part1: None,
        part2: None,
        verdict: Verdict::Vacuous,
    };
    if report.preconditions.iter().any(|c| !c.holds) {
        return Ok(report);
    }

    let core = p_core(&whole, p)?;
    let m = n.join(&core);
    let quotient = Quotient::new(&whole, &m)?;
    let q_core = p_core(&quotient.group().whole()?, p)?;

    let mut bad = Vec::new();
    for x in n.ids() {
        let size = class_size_in_group(g, x)?;
        if size % (p * p) == 0 {
            bad.push(json!({ "element": g.element(x).to_string(), "class_size": size }));
        }
    }
    let hyps = vec![
        cond(format!("G is {p}-nilpotent"), is_p_nilpotent(&whole, p)?),
        cond(format!("{p}^2 does not divide |x^G| for x in N"), bad.is_empty()),
    ];
    let applicable = hyps.iter().all(|c| c.holds);
    report.part1 = Some(PartOutcome {
        applicable,
        hypotheses: hyps,
        holds: applicable.then_some(q_core.order() <= p),
        witness: json!({
            "o_p_order": core.order(),
            "n_o_p_order": m.order(),
            "quotient_o_p_order": q_core.order(),
            "class_size_violations": bad,
        }),
    });

    let applicable = q_core.order() == p;
    let mut witness = json!({ "quotient_o_p_order": q_core.order() });
    let mut holds = None;
    if applicable {
        let k = quotient.preimage(&q_core)?;
        let sylow = sylow_subgroup(&k, p)?;
        let c = centralizer_of_subgroup(n, &sylow);
        holds = Some(c.is_trivial());
        witness = json!({
            "quotient_o_p_order": q_core.order(),
            "k_order": k.order(),
            "sylow_generators": sylow.generators().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "centralizer_order": c.order(),
        });
    }
    report.part2 = Some(PartOutcome {
        applicable,
        hypotheses: vec![cond(
            format!("|O_{p}(G/N O_{p}(G))| = {p}"),
            applicable,
        )],
        holds,
        witness,
    });

    let outcomes: Vec<bool> = [&report.part1, &report.part2]
        .into_iter()
        .flatten()
        .filter_map(|part| part.holds)
        .collect();
    report.verdict = if outcomes.is_empty() {
        Verdict::Vacuous
    } else if outcomes.iter().all(|&h| h) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_example, cyclic, dihedral, symmetric};

    #[test]
    fn cw_gap_on_documented_groups() {
        let f = builtin_example("sg300_25").unwrap();
        let r = check_cw_gap(&f.group, 2, "sg300_25").unwrap();
        assert!(r.hypotheses.satisfied);
        assert!(r.claim_fails);
        assert!(r.clauses.iter().all(|c| c.holds), "{:?}", r.clauses);

        let r = check_cw_gap(&symmetric(3).unwrap(), 2, "S3").unwrap();
        assert!(r.hypotheses.satisfied && !r.claim_fails);
        let r = check_cw_gap(&cyclic(4).unwrap(), 2, "C4").unwrap();
        assert!(r.hypotheses.satisfied && !r.claim_fails);
        // 3 - 1 = 2 divides |Sym(3)|.
        let r = check_cw_gap(&symmetric(3).unwrap(), 3, "S3").unwrap();
        assert!(!r.hypotheses.satisfied && r.claim.is_none());
    }

    #[test]
    fn proposition_on_dihedral_groups() {
        for q in [3usize, 5, 7] {
            let g = dihedral(2 * q).unwrap();
            let whole = g.whole().unwrap();
            let n = crate::structure::sylow_subgroup(&whole, q as u64).unwrap();
            let r = check_proposition(&g, &n, 2).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
            assert!(r.part1.as_ref().unwrap().applicable);
            assert_eq!(r.part2.as_ref().unwrap().holds, Some(true));
        }
    }

    #[test]
    fn proposition_abelian_and_invalid() {
        let g = cyclic(6).unwrap();
        let whole = g.whole().unwrap();
        let n = crate::structure::sylow_subgroup(&whole, 3).unwrap();
        let r = check_proposition(&g, &n, 2).unwrap();
        assert_eq!(r.part1.as_ref().unwrap().holds, Some(true));
        assert!(!r.part2.as_ref().unwrap().applicable);
        // N of even order is not a 2'-group.
        let n2 = crate::structure::sylow_subgroup(&whole, 2).unwrap();
        assert_eq!(check_proposition(&g, &n2, 2).unwrap().verdict, Verdict::Vacuous);
    }
}
