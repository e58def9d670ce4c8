//! Property checks shared by the acceptance harness and the proptest suites.
//! Each returns the list of violations found, empty when the property holds.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use grouplab::arith;
use grouplab::catalog::{builtin_example, sweep_catalog, FactorizedFixture, GroupSpec, BUILTIN_IDS};
use grouplab::factorization::{find_mp_factorizations, mutually_permutable, permutes, FactorizationOptions};
use grouplab::predicates::elementary_abelian_prime;
use grouplab::structure::{
    all_subgroups, center, centralizer, centralizer_of_elements, class_size_in_group, centralizer_of_subgroup, conjugacy_classes, core_in,
    derived_subgroup, normal_subgroups, sylow_subgroup, Quotient,
};
use grouplab::{FiniteGroup, Permutation, SubgroupRef};

/// A catalog group, with the bundled factorisation when it has one.
pub struct Sample {
    pub label: String,
    pub group: Arc<FiniteGroup>,
    pub fixture: Option<FactorizedFixture>,
}

/// Every group of the sweep catalog up to `max_order`, plus every bundled
/// fixture of order at most `fixture_cap`.
pub fn catalog(max_order: u64, fixture_cap: u64) -> Vec<Sample> {
    let mut out = Vec::new();
    for entry in sweep_catalog(max_order) {
        if let GroupSpec::Builtin(_) = entry.spec {
            continue;
        }
        out.push(Sample {
            label: entry.label(),
            group: entry.spec.construct().expect("catalog group"),
            fixture: None,
        });
    }
    let mut ids: Vec<String> = BUILTIN_IDS.iter().map(|s| s.to_string()).collect();
    ids.push("dihedral_chain(3,5,7)".into());
    for id in ids {
        let f = builtin_example(&id).expect("builtin");
        if f.order() <= fixture_cap {
            out.push(Sample {
                label: id,
                group: f.group.clone(),
                fixture: Some(f),
            });
        }
    }
    out
}

/// Mutually permutable factorisations of `g`, one per conjugacy orbit, plus
/// the bundled one when it is mutually permutable.
pub fn mp_factorizations(sample: &Sample) -> Vec<(SubgroupRef, SubgroupRef)> {
    let whole = sample.group.whole().unwrap();
    let opts = FactorizationOptions {
        dedupe_conjugates: true,
        ..Default::default()
    };
    let mut out: Vec<(SubgroupRef, SubgroupRef)> = find_mp_factorizations(&whole, opts)
        .unwrap()
        .into_iter()
        .map(|c| (c.a, c.b))
        .collect();
    if let Some(f) = &sample.fixture {
        if mutually_permutable(&whole, &f.a, &f.b).unwrap().mutually_permutable {
            out.push((f.a.clone(), f.b.clone()));
        }
    }
    out
}

fn is_p_power(n: u64, p: u64) -> bool {
    arith::is_power_of(n, p)
}

/// Class sizes sum to `|G|` and `|x^G|·|C_G(x)| = |G|`.
pub fn class_equation(g: &Arc<FiniteGroup>) -> Vec<String> {
    let whole = g.whole().unwrap();
    let classes = conjugacy_classes(&whole);
    let mut bad = Vec::new();
    let total: u64 = classes.iter().map(|c| c.size).sum();
    if total != g.order_u64() {
        bad.push(format!("class sizes sum to {total}, not {}", g.order()));
    }
    for c in &classes {
        let cent = centralizer(&whole, c.representative_id).unwrap();
        if c.size * cent.order() != g.order_u64() {
            bad.push(format!("|x^G||C(x)| != |G| for {}", c.representative));
        }
    }
    bad
}

/// For every normal `N`: `|x^N|` divides `|x^G|`, `|(xN)^(G/N)|` divides
/// `|x^G|`, and every `p`-element of `G/N` lifts to a `p`-element of `G`.
pub fn normal_class_divisibility(g: &Arc<FiniteGroup>) -> Vec<String> {
    let whole = g.whole().unwrap();
    let g_sizes: Vec<u64> = (0..g.order_u64() as u32).map(|x| class_size_in_group(g, x).unwrap()).collect();
    let mut bad = Vec::new();
    for n in normal_subgroups(&whole) {
        // (a)
        for c in conjugacy_classes(&n) {
            let x = c.representative_id;
            if g_sizes[x as usize] % c.size != 0 {
                bad.push(format!("(a) |x^N| = {} does not divide |x^G| = {}", c.size, g_sizes[x as usize]));
            }
        }
        // (b)
        let q = Quotient::new(&whole, &n).unwrap();
        let qg = q.group().clone();
        for x in whole.ids() {
            let y = q.project(x).unwrap();
            let qs = class_size_in_group(&qg, y).unwrap();
            if g_sizes[x as usize] % qs != 0 {
                bad.push(format!("(b) |(xN)^(G/N)| = {qs} does not divide |x^G| = {}", g_sizes[x as usize]));
            }
        }
        // (c)
        for p in arith::prime_divisors(g.order_u64()) {
            let lifted: HashSet<u32> = whole
                .ids()
                .filter(|&x| is_p_power(g.elem_order(x), p))
                .map(|x| q.project(x).unwrap())
                .collect();
            for y in 0..qg.order_u64() as u32 {
                if is_p_power(qg.elem_order(y), p) && !lifted.contains(&y) {
                    bad.push(format!("(c) {p}-element coset {} has no {p}-element representative", qg.element(y)));
                }
            }
        }
    }
    bad
}

/// Per-group data reused across the factorisations checked by [`ProductRestriction`].
///
/// Subgroups of `G/N` are the `X/N` with `N ≤ X`, and `(X/N)(Y/N) = XY/N`, so
/// permutability in quotients is decided inside the lattice of `G`.
pub struct ProductRestriction {
    whole: SubgroupRef,
    normals: Vec<SubgroupRef>,
    lattice: Vec<SubgroupRef>,
    index: HashMap<FixedBitSet, usize>,
    below: HashMap<usize, Vec<usize>>,
    permutes: HashMap<(usize, usize), bool>,
    checked: HashSet<(usize, usize)>,
}

impl ProductRestriction {
    pub fn new(g: &Arc<FiniteGroup>) -> Self {
        let whole = g.whole().unwrap();
        let normals = normal_subgroups(&whole);
        let lattice = all_subgroups(&whole).unwrap();
        let index = lattice.iter().enumerate().map(|(i, s)| (s.bits().clone(), i)).collect();
        Self {
            whole,
            normals,
            lattice,
            index,
            below: HashMap::new(),
            permutes: HashMap::new(),
            checked: HashSet::new(),
        }
    }

    fn below(&mut self, i: usize) -> Vec<usize> {
        let lattice = &self.lattice;
        self.below
            .entry(i)
            .or_insert_with(|| (0..lattice.len()).filter(|&j| lattice[j].is_subgroup_of(&lattice[i])).collect())
            .clone()
    }

    fn permutes(&mut self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        if let Some(&v) = self.permutes.get(&key) {
            return v;
        }
        let v = permutes(&self.lattice[i], &self.lattice[j]).unwrap();
        self.permutes.insert(key, v);
        v
    }

    /// Every subgroup of each factor containing `floor` permutes with the
    /// other factor; `floor = 1` is plain mutual permutability.
    fn mutually_permutable_over(&mut self, a: usize, b: usize, floor: &SubgroupRef) -> bool {
        self.permutes_with_all(a, b, floor) && self.permutes_with_all(b, a, floor)
    }

    fn permutes_with_all(&mut self, x: usize, y: usize, floor: &SubgroupRef) -> bool {
        let candidates: Vec<usize> = self
            .below(x)
            .into_iter()
            .filter(|&u| floor.is_subgroup_of(&self.lattice[u]))
            .collect();
        candidates.into_iter().all(|u| self.permutes(u, y))
    }

    /// For a mutually permutable product `G = AB`: `AN/N` and `BN/N` are
    /// mutually permutable for every normal `N`, `(N∩A)(N∩B)` is a normal
    /// subgroup, and `U∩A`, `U∩B` are mutually permutable for every `U ≤ G`.
    pub fn check(&mut self, a: &SubgroupRef, b: &SubgroupRef) -> Vec<String> {
        let mut bad = Vec::new();
        for n in self.normals.clone() {
            let (an, bn) = (self.index[a.join(&n).bits()], self.index[b.join(&n).bits()]);
            if self.lattice[an].product_size(&self.lattice[bn]) != self.whole.order()
                || !self.mutually_permutable_over(an, bn, &n)
            {
                bad.push(format!("(a) images modulo a normal subgroup of order {} are not mutually permutable", n.order()));
            }
            let (na, nb) = (n.intersection(a), n.intersection(b));
            let j = na.join(&nb);
            if j.order() != na.product_size(&nb) || !j.is_normal_in(&self.whole) {
                bad.push(format!("(b) (N∩A)(N∩B) is not a normal subgroup for |N| = {}", n.order()));
            }
        }
        let trivial = self.lattice[0].clone();
        for k in 0..self.lattice.len() {
            let u = &self.lattice[k];
            let (ua, ub) = (self.index[u.intersection(a).bits()], self.index[u.intersection(b).bits()]);
            if !self.checked.insert((ua, ub)) {
                continue;
            }
            if !self.permutes(ua, ub) {
                bad.push(format!("(b) (U∩A)(U∩B) is not a subgroup for U = <{}>", fmt_gens(&self.lattice[k])));
            } else if !self.mutually_permutable_over(ua, ub, &trivial) {
                bad.push(format!("(b) U∩A and U∩B are not mutually permutable for U = <{}>", fmt_gens(&self.lattice[k])));
            }
        }
        bad
    }
}

/// One-shot form of [`ProductRestriction::check`].
pub fn product_restriction(g: &Arc<FiniteGroup>, a: &SubgroupRef, b: &SubgroupRef) -> Vec<String> {
    ProductRestriction::new(g).check(a, b)
}

/// `A_G B_G ≠ 1` for a nontrivial mutually permutable product.
pub fn factor_core_nontrivial(g: &Arc<FiniteGroup>, a: &SubgroupRef, b: &SubgroupRef) -> Vec<String> {
    let whole = g.whole().unwrap();
    if whole.is_trivial() {
        return Vec::new();
    }
    let (ca, cb) = (core_in(&whole, a).unwrap(), core_in(&whole, b).unwrap());
    if ca.is_trivial() && cb.is_trivial() {
        vec![format!("A = <{}>, B = <{}> both have trivial core", fmt_gens(a), fmt_gens(b))]
    } else {
        Vec::new()
    }
}

/// For every Sylow subgroup `P` (and `G` itself when it is a `p`-group): all
/// class sizes of `P` are at most `p` iff `|P'| ≤ p`.
pub fn sylow_class_bound_iff(g: &Arc<FiniteGroup>) -> Vec<String> {
    let whole = g.whole().unwrap();
    let mut bad = Vec::new();
    for p in arith::prime_divisors(g.order_u64()) {
        let pg = sylow_subgroup(&whole, p).unwrap();
        let small = conjugacy_classes(&pg).iter().all(|c| c.size <= p);
        let d = derived_subgroup(&pg).order();
        if small != (d <= p) {
            bad.push(format!("Sylow {p}-subgroup of order {}: class sizes <= p is {small} but |P'| = {d}", pg.order()));
        }
    }
    bad
}

/// `[N, x]` as the image of `n ↦ [n, x]`, for abelian normal `N`.
fn commutator_image(g: &Arc<FiniteGroup>, n: &SubgroupRef, x: u32) -> SubgroupRef {
    let ids: Vec<u32> = n.ids().map(|k| g.comm(k, x)).collect();
    SubgroupRef::generated(g, &ids)
}

/// A `p'`-group acting faithfully on an elementary abelian normal `p`-group
/// `N` with `|[x, N]| = p` for all `1 ≠ x ∈ Q` is cyclic.
pub fn faithful_coprime_cyclic(g: &Arc<FiniteGroup>) -> Vec<String> {
    let whole = g.whole().unwrap();
    let lattice = all_subgroups(&whole).unwrap();
    let mut bad = Vec::new();
    for n in normal_subgroups(&whole) {
        let Some(p) = elementary_abelian_prime(&n) else { continue };
        for q in lattice.iter().filter(|q| q.order() % p != 0 && !q.is_trivial()) {
            if !centralizer_of_subgroup(q, &n).is_trivial() {
                continue;
            }
            let hyp = q.ids().filter(|&x| x != 0).all(|x| commutator_image(g, &n, x).order() == p);
            let cyclic = q.ids().any(|x| g.elem_order(x) == q.order());
            if hyp && !cyclic {
                bad.push(format!("Q = <{}> of order {} is not cyclic", fmt_gens(q), q.order()));
            }
        }
    }
    bad
}

/// `|C_G(x)| < |C_G([k, x])|` for abelian normal `K`, `k ∈ K` and non-central `x`.
pub fn abelian_normal_centralizers(g: &Arc<FiniteGroup>) -> Vec<String> {
    let whole = g.whole().unwrap();
    let z = center(&whole);
    let classes = conjugacy_classes(&whole);
    let mut bad = Vec::new();
    for k_sub in normal_subgroups(&whole).into_iter().filter(|k| k.is_abelian()) {
        for c in classes.iter().filter(|c| !z.contains(c.representative_id)) {
            let x = c.representative_id;
            let cx = g.order_u64() / c.size;
            for k in k_sub.ids() {
                let y = g.comm(k, x);
                let cy = g.order_u64() / class_size_in_group(g, y).unwrap();
                if cx >= cy {
                    bad.push(format!("|C(x)| = {cx} >= |C([k,x])| = {cy} for x = {}, k = {}", g.element(x), g.element(k)));
                }
            }
        }
    }
    bad
}

/// `N = [N, x]·C_N(x)` with trivial intersection, for abelian normal
/// `p`-subgroups `N` and `p'`-elements `x`.
pub fn coprime_action(g: &Arc<FiniteGroup>) -> Vec<String> {
    let whole = g.whole().unwrap();
    let classes = conjugacy_classes(&whole);
    let mut bad = Vec::new();
    for n in normal_subgroups(&whole).into_iter().filter(|n| n.is_abelian() && !n.is_trivial()) {
        let Some(p) = arith::prime_power_base(n.order()) else { continue };
        for c in classes.iter().filter(|c| c.element_order % p != 0) {
            let x = c.representative_id;
            let comm = commutator_image(g, &n, x);
            let fixed = centralizer_of_elements(&n, &[x]);
            let meet = comm.intersection(&fixed);
            if !meet.is_trivial() || comm.product_size(&fixed) != n.order() {
                bad.push(format!(
                    "N of order {}: |[N,x]| = {}, |C_N(x)| = {}, meet {} for x = {}",
                    n.order(),
                    comm.order(),
                    fixed.order(),
                    meet.order(),
                    g.element(x)
                ));
            }
        }
    }
    bad
}

/// Breadth-first closure of the generators as raw permutations.
pub fn brute_force_order(g: &FiniteGroup) -> usize {
    let id = Permutation::identity(g.degree());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y = &x * s;
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.len()
}

pub fn chain_matches_closure(g: &FiniteGroup) -> Vec<String> {
    let brute = brute_force_order(g);
    if brute as u128 != g.order() {
        vec![format!("chain order {} but closure has {brute} elements", g.order())]
    } else {
        Vec::new()
    }
}

pub fn fmt_gens(s: &SubgroupRef) -> String {
    s.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}
