//! Commutator subgroups and the derived and lower central series.

use crate::group::ElemId;
use crate::subgroup::SubgroupRef;

/// Normal closure in `h` of the subgroup generated by `xs`.
pub fn normal_closure(h: &SubgroupRef, xs: &[ElemId]) -> SubgroupRef {
    let g = h.ambient();
    let mut cur = SubgroupRef::generated(g, xs);
    loop {
        let mut missing = None;
        'scan: for &s in cur.generator_ids() {
            for &x in h.generator_ids() {
                let c = g.conj(s, x);
                if !cur.contains(c) {
                    missing = Some(c);
                    break 'scan;
                }
            }
        }
        match missing {
            Some(c) => {
                let mut gens = cur.generator_ids().to_vec();
                gens.push(c);
                cur = SubgroupRef::generated(g, &gens);
            }
            None => return cur,
        }
    }
}

/// `[N, K]` for subgroups normalised by `h`: the normal closure in `h` of the
/// commutators of generators.
pub fn commutator_subgroup(h: &SubgroupRef, n: &SubgroupRef, k: &SubgroupRef) -> SubgroupRef {
    let g = h.ambient();
    let comms: Vec<ElemId> = n
        .generator_ids()
        .iter()
        .flat_map(|&a| k.generator_ids().iter().map(move |&b| g.comm(a, b)))
        .filter(|&c| c != 0)
        .collect();
    normal_closure(h, &comms)
}

/// `H'`.
pub fn derived_subgroup(h: &SubgroupRef) -> SubgroupRef {
    commutator_subgroup(h, h, h)
}

/// `H ≥ H' ≥ H'' ≥ …` down to its terminal member.
pub fn derived_series(h: &SubgroupRef) -> Vec<SubgroupRef> {
    let mut out = vec![h.clone()];
    loop {
        let next = derived_subgroup(out.last().unwrap());
        if next.order() == out.last().unwrap().order() {
            return out;
        }
        out.push(next);
    }
}

/// `γ₁ = H, γ_{i+1} = [γ_i, H]` until it stabilises.
pub fn lower_central_series(h: &SubgroupRef) -> Vec<SubgroupRef> {
    let mut out = vec![h.clone()];
    loop {
        let next = commutator_subgroup(h, out.last().unwrap(), h);
        if next.order() == out.last().unwrap().order() {
            return out;
        }
        out.push(next);
    }
}

/// Smallest normal subgroup with nilpotent quotient.
pub fn nilpotent_residual(h: &SubgroupRef) -> SubgroupRef {
    lower_central_series(h).pop().unwrap()
}
