//! Conclusion evaluators shared by the theorem verifiers and the gap checker.

use serde_json::{json, Value};

use crate::arith;
use crate::predicates::{is_elementary_abelian, is_p_nilpotent, is_soluble, p_prime_residual};
use crate::structure::{
    center, chief_series, derived_series, derived_subgroup, fitting, frattini_of_p_group, p_core,
    sylow_subgroup,
};
use crate::subgroup::SubgroupRef;
use crate::Result;

/// One evaluated conclusion.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct Conclusion {
    pub name: String,
    pub holds: bool,
    pub witness: Value,
}

impl Conclusion {
    pub fn new(name: impl Into<String>, holds: bool, witness: Value) -> Self {
        Self {
            name: name.into(),
            holds,
            witness,
        }
    }
}

fn gens_of(h: &SubgroupRef) -> Vec<String> {
    h.generators().iter().map(|p| p.to_string()).collect()
}

pub(crate) fn soluble(g: &SubgroupRef) -> Conclusion {
    let orders: Vec<u64> = derived_series(g).iter().map(|s| s.order()).collect();
    Conclusion::new("G is soluble", is_soluble(g), json!({ "derived_series_orders": orders }))
}

pub(crate) fn p_nilpotent(g: &SubgroupRef, p: u64) -> Result<Conclusion> {
    let residual = p_prime_residual(g, p);
    Ok(Conclusion::new(
        format!("G is {p}-nilpotent"),
        is_p_nilpotent(g, p)?,
        json!({
            "p_prime_generated_order": residual.order(),
            "p_complement_order": g.order() / arith::p_part(g.order(), p),
        }),
    ))
}

/// Shape of a Sylow `p`-subgroup of `G/O_p(G)`, computed as `P/O_p(G)` for a
/// Sylow `P` of `G`.
pub(crate) struct SylowModCore {
    pub order: u64,
    pub core_order: u64,
    pub abelian: bool,
    pub exponent_p: bool,
}

impl SylowModCore {
    pub fn elementary_abelian(&self) -> bool {
        self.abelian && self.exponent_p
    }

    pub fn witness(&self) -> Value {
        json!({
            "quotient_sylow_order": self.order,
            "o_p_order": self.core_order,
            "abelian": self.abelian,
            "exponent_p": self.exponent_p,
        })
    }
}

pub(crate) fn sylow_mod_core(g: &SubgroupRef, p: u64) -> Result<SylowModCore> {
    let amb = g.ambient();
    let sylow = sylow_subgroup(g, p)?;
    let core = p_core(g, p)?;
    let gens = sylow.generator_ids();
    let abelian = gens
        .iter()
        .all(|&x| gens.iter().all(|&y| core.contains(amb.comm(x, y))));
    let exponent_p = sylow.ids().all(|x| core.contains(amb.pow(x, p)));
    Ok(SylowModCore {
        order: sylow.order() / core.order(),
        core_order: core.order(),
        abelian,
        exponent_p,
    })
}

pub(crate) fn quotient_sylow_elementary(g: &SubgroupRef, p: u64) -> Result<Conclusion> {
    let s = sylow_mod_core(g, p)?;
    Ok(Conclusion::new(
        format!("Sylow {p}-subgroups of G/O_{p}(G) are elementary abelian"),
        s.elementary_abelian(),
        s.witness(),
    ))
}

pub(crate) fn p_supersoluble(g: &SubgroupRef, p: u64) -> Conclusion {
    let cs = chief_series(g);
    Conclusion::new(
        format!("G is {p}-supersoluble"),
        cs.p_supersoluble(p),
        json!({ "chief_factor_orders": cs.factor_orders() }),
    )
}

pub(crate) fn supersoluble(g: &SubgroupRef) -> Conclusion {
    let cs = chief_series(g);
    Conclusion::new(
        "G is supersoluble",
        cs.all_prime(),
        json!({ "chief_factor_orders": cs.factor_orders() }),
    )
}

pub(crate) fn fitting_quotient_elementary(g: &SubgroupRef) -> Result<Conclusion> {
    let f = fitting(g);
    let mut per_prime = serde_json::Map::new();
    let mut holds = true;
    for p in arith::prime_divisors(g.order()) {
        let s = sylow_mod_core(g, p)?;
        holds &= s.elementary_abelian();
        per_prime.insert(p.to_string(), s.witness());
    }
    Ok(Conclusion::new(
        "Sylow subgroups of G/F(G) are elementary abelian",
        holds,
        json!({ "fitting_order": f.order(), "quotient_order": g.order() / f.order(), "per_prime": per_prime }),
    ))
}

pub(crate) fn fitting_quotient_bounded(g: &SubgroupRef) -> Conclusion {
    let f = fitting(g);
    let q = g.order() / f.order();
    let parts: serde_json::Map<String, Value> = arith::prime_divisors(q)
        .into_iter()
        .map(|p| (p.to_string(), json!(arith::p_part(q, p))))
        .collect();
    let holds = arith::prime_divisors(q).into_iter().all(|p| arith::p_part(q, p) <= p * p);
    Conclusion::new(
        "|G/F(G)|_p <= p^2 for every prime p",
        holds,
        json!({ "fitting_order": f.order(), "quotient_order": q, "p_parts": parts }),
    )
}

/// The three conclusions about `G'` and `F(G)'`.
pub(crate) fn derived_conclusions(g: &SubgroupRef) -> Result<Vec<Conclusion>> {
    let d = derived_subgroup(g);
    let mut sylows = serde_json::Map::new();
    let mut sylow_ea = true;
    for p in arith::prime_divisors(d.order()) {
        let s = sylow_subgroup(&d, p)?;
        let ea = is_elementary_abelian(&s);
        sylow_ea &= ea;
        sylows.insert(p.to_string(), json!({ "order": s.order(), "elementary_abelian": ea }));
    }
    let f = fitting(g);
    let fd = derived_subgroup(&f);
    let bounded = arith::prime_divisors(fd.order())
        .into_iter()
        .all(|p| arith::p_part(fd.order(), p) <= p * p);
    Ok(vec![
        Conclusion::new(
            "G' is abelian",
            d.is_abelian(),
            json!({ "derived_order": d.order(), "derived_generators": gens_of(&d) }),
        ),
        Conclusion::new(
            "Sylow subgroups of G' are elementary abelian",
            sylow_ea,
            json!({ "derived_order": d.order(), "sylows": sylows }),
        ),
        Conclusion::new(
            "Sylow p-subgroups of F(G)' have order at most p^2",
            bounded,
            json!({ "fitting_order": f.order(), "fitting_derived_order": fd.order() }),
        ),
    ])
}

/// `P' ≤ Φ(P) ≤ Z(P)`, `P'` elementary abelian, `|P'| ≤ p²` for a `p`-group `P`.
pub(crate) fn p_group_derived_conclusions(pg: &SubgroupRef, p: u64) -> Vec<Conclusion> {
    let d = derived_subgroup(pg);
    let phi = frattini_of_p_group(pg).expect("p-group");
    let z = center(pg);
    let base = json!({
        "p_order": pg.order(),
        "derived_order": d.order(),
        "frattini_order": phi.order(),
        "center_order": z.order(),
    });
    vec![
        Conclusion::new("P' <= Phi(P)", d.is_subgroup_of(&phi), base.clone()),
        Conclusion::new("Phi(P) <= Z(P)", phi.is_subgroup_of(&z), base.clone()),
        Conclusion::new(
            "P' is elementary abelian",
            is_elementary_abelian(&d),
            json!({ "derived_order": d.order(), "derived_generators": gens_of(&d) }),
        ),
        Conclusion::new(format!("|P'| <= {p}^2"), d.order() <= p * p, json!({ "derived_order": d.order() })),
    ]
}
