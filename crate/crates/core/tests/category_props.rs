mod common;

use std::sync::Arc;

use common::{all_categories, poset_height, product_category, random_poset};
use eica::{full_subcategory, validate_category, FiniteCategory, ObjId};
use proptest::prelude::*;

prop_compose! {
    fn product()(m in 1usize..=3, n in 1usize..=3, copies in 1usize..=2, bits in proptest::collection::vec(any::<bool>(), 3))
        -> (Arc<FiniteCategory>, usize) {
        let leq = random_poset(n, &bits);
        (Arc::new(product_category(m, &leq, copies)), poset_height(&leq))
    }
}

fn mutual_hom_implies_iso(c: &FiniteCategory) -> bool {
    c.objects().all(|x| {
        c.objects().all(|y| {
            let both = !c.hom(x, y).is_empty() && !c.hom(y, x).is_empty();
            !both || c.first_iso(x, y).is_some()
        })
    })
}

fn same_class_morphisms_are_isos(c: &FiniteCategory) -> bool {
    c.morphisms().all(|f| {
        let (x, y) = (c.dom(f), c.cod(f));
        !c.order().isomorphic(x, y) || c.is_isomorphism(f)
    })
}

#[test]
fn builtins_satisfy_order_invariants() {
    for (name, c) in all_categories() {
        assert!(mutual_hom_implies_iso(&c), "{name}");
        assert!(same_class_morphisms_are_isos(&c), "{name}");
        assert_eq!(c.chain_length() == 0, c.morphisms().all(|m| c.is_isomorphism(m)), "{name}");
        assert!(validate_category(&c.to_spec()).is_ok(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mutual_morphisms_force_isomorphism((c, _) in product()) {
        prop_assert!(mutual_hom_implies_iso(&c));
        prop_assert!(same_class_morphisms_are_isos(&c));
    }

    #[test]
    fn chain_length_is_poset_height((c, height) in product()) {
        prop_assert_eq!(c.chain_length(), height);
        prop_assert_eq!(c.chain_length() == 0, c.morphisms().all(|m| c.is_isomorphism(m)));
    }

    #[test]
    fn endomorphisms_are_invertible((c, _) in product()) {
        for x in c.objects() {
            for &g in c.hom(x, x) {
                let inv = c.inverse(g).expect("EI");
                prop_assert_eq!(c.compose(g, inv), Some(c.identity(x)));
                prop_assert_eq!(c.compose(inv, g), Some(c.identity(x)));
            }
        }
    }

    #[test]
    fn full_subcategories_are_valid((c, _) in product(), mask in any::<u32>()) {
        let objs: Vec<ObjId> = c.objects().filter(|x| mask >> (x.0 % 32) & 1 == 1).collect();
        prop_assume!(!objs.is_empty());
        let d = full_subcategory(&c, &objs).unwrap();
        let again = validate_category(&d.category.to_spec()).unwrap();
        prop_assert_eq!(again.num_morphisms(), d.category.num_morphisms());
        let expected: usize = objs.iter().map(|&x| objs.iter().map(|&y| c.hom(x, y).len()).sum::<usize>()).sum();
        prop_assert_eq!(d.category.num_morphisms(), expected);
        prop_assert!(d.category.chain_length() <= c.chain_length());
    }

    #[test]
    fn spec_round_trip((c, _) in product()) {
        let back = validate_category(&c.to_spec()).unwrap();
        prop_assert_eq!(back.to_spec(), c.to_spec());
    }
}
