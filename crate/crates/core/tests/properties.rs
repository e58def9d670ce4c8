//! Randomised checks of the shared invariants on small permutation groups.

mod common;

use std::sync::Arc;

use grouplab::catalog::GroupSpec;
use grouplab::factorization::{is_product, mutually_permutable, permutes};
use grouplab::{FiniteGroup, Permutation};
use proptest::prelude::*;

const DEGREE: usize = 5;

fn perm() -> impl Strategy<Value = Permutation> {
    Just((0..DEGREE).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images.iter().map(|i| i + 1).collect::<Vec<_>>()).unwrap())
}

fn group() -> impl Strategy<Value = Arc<FiniteGroup>> {
    prop::collection::vec(perm(), 1..=3).prop_map(|gens| FiniteGroup::new(DEGREE, gens).unwrap())
}

fn spec() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![
        (1usize..20).prop_map(GroupSpec::Cyclic),
        (2usize..10).prop_map(|n| GroupSpec::Dihedral(2 * n)),
        (2usize..6).prop_map(|n| GroupSpec::Dicyclic(4 * n)),
        (1usize..6).prop_map(GroupSpec::Symmetric),
        (1usize..6).prop_map(GroupSpec::Alternating),
        (2usize..12, 1usize..6, 0u64..12).prop_map(|(m, n, r)| GroupSpec::SemidirectCyclic { m, n, r }),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| prop::collection::vec(inner, 2..=3).prop_map(GroupSpec::Direct))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spec_display_parses_back(s in spec()) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), s);
    }

    #[test]
    fn permutation_text_round_trip(p in perm()) {
        prop_assert_eq!(Permutation::parse(&p.to_string(), DEGREE).unwrap(), p);
    }

    #[test]
    fn chain_order_matches_closure(g in group()) {
        prop_assert_eq!(common::chain_matches_closure(&g), Vec::<String>::new());
    }

    #[test]
    fn class_equation_and_divisibility(g in group()) {
        prop_assert_eq!(common::class_equation(&g), Vec::<String>::new());
        prop_assert_eq!(common::normal_class_divisibility(&g), Vec::<String>::new());
    }

    #[test]
    fn sylow_and_centralizer_properties(g in group()) {
        prop_assert_eq!(common::sylow_class_bound_iff(&g), Vec::<String>::new());
        prop_assert_eq!(common::abelian_normal_centralizers(&g), Vec::<String>::new());
        prop_assert_eq!(common::coprime_action(&g), Vec::<String>::new());
    }

    #[test]
    fn product_of_random_subgroups(g in group(), xs in prop::collection::vec(perm(), 1..=2), ys in prop::collection::vec(perm(), 1..=2)) {
        let whole = g.whole().unwrap();
        let pick = |ps: &[Permutation]| {
            let members: Vec<Permutation> = ps.iter().filter(|p| g.member(p).unwrap()).cloned().collect();
            g.subgroup(&members).unwrap()
        };
        let (a, b) = (pick(&xs), pick(&ys));
        prop_assert_eq!(a.product_size(&b) * a.intersection(&b).order(), a.order() * b.order());
        prop_assert_eq!(permutes(&a, &b).unwrap(), permutes(&b, &a).unwrap());
        if is_product(&whole, &a, &b).unwrap() && mutually_permutable(&whole, &a, &b).unwrap().mutually_permutable {
            prop_assert_eq!(common::product_restriction(&g, &a, &b), Vec::<String>::new());
            prop_assert_eq!(common::factor_core_nontrivial(&g, &a, &b), Vec::<String>::new());
        }
    }
}
