mod common;

use std::sync::Arc;

use common::{all_categories, fp, ideals, nonzero_module, product_category, random_poset};
use eica::homology::{is_projective, verify_support_report};
use eica::rep::{representable, restrict, support_analysis};
use eica::{aut_invertibility, full_subcategory, global_dim, FieldSpec, FiniteCategory, ObjId, PdValue, Representation, Resolver, Strategy as Cover};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn category() -> impl Strategy<Value = Arc<FiniteCategory>> {
    let builtin = (0..all_categories().len()).prop_map(|i| all_categories()[i].1.clone());
    let product = (1usize..=3, 1usize..=3, 1usize..=2, proptest::collection::vec(any::<bool>(), 3))
        .prop_map(|(m, n, copies, bits)| Arc::new(product_category(m, &random_poset(n, &bits), copies)));
    prop_oneof![builtin, product]
}

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(fp(2)), Just(fp(3))]
}

fn module(c: &Arc<FiniteCategory>, field: FieldSpec, seed: u64) -> Representation {
    nonzero_module(c, field, 5, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn projective_at(m: &Representation, x: ObjId) -> bool {
    let at_x = full_subcategory(m.category(), &[x]).unwrap();
    is_projective(&restrict(m, &at_x).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pd_is_independent_of_the_cover(c in category(), field in field_strategy(), seed in any::<u64>()) {
        let m = module(&c, field, seed);
        let base = Resolver::new(&c, field).proj_dim(&m).unwrap().value;
        let full = Resolver::new(&c, field).with_strategy(Cover::FullGenerators).proj_dim(&m).unwrap().value;
        prop_assert_eq!(full, base);
        for s in 1..=3 {
            prop_assert_eq!(Resolver::new(&c, field).with_shuffle(seed ^ s).proj_dim(&m).unwrap().value, base);
        }
    }

    #[test]
    fn verdicts_are_witnessed(c in category(), field in field_strategy(), seed in any::<u64>()) {
        let m = module(&c, field, seed);
        let ell = c.chain_length();
        let v = Resolver::new(&c, field).proj_dim(&m).unwrap();
        let res = &v.witness;
        match v.value {
            PdValue::Finite(n) => {
                prop_assert!(n <= ell);
                prop_assert_eq!(res.steps.len(), n);
                prop_assert!(is_projective(res.syzygy(n)));
                for k in 0..n {
                    prop_assert!(!is_projective(res.syzygy(k)));
                }
            }
            PdValue::Infinite => {
                prop_assert_eq!(res.truncated_at, Some(ell));
                prop_assert!(!is_projective(res.syzygy(ell)));
            }
            PdValue::ZeroModule => prop_assert!(false, "module is nonzero"),
        }
    }

    #[test]
    fn syzygies_satisfy_rank_nullity(c in category(), field in field_strategy(), seed in any::<u64>()) {
        let m = module(&c, field, seed);
        let res = Resolver::new(&c, field).resolve(&m, 2).unwrap();
        for (i, step) in res.steps.iter().enumerate() {
            let prev = res.syzygy(i);
            for y in c.objects() {
                prop_assert_eq!(step.syzygy.dim(y) + prev.dim(y), step.cover.module.dim(y));
                prop_assert_eq!(step.cover.epi.components[y.0].rank(), prev.dim(y));
                prop_assert!((&step.cover.epi.components[y.0] * &step.inclusion[y.0]).is_zero());
            }
            prop_assert!(step.cover.epi.is_natural(&step.cover.module, prev));
        }
    }

    #[test]
    fn finite_pd_forces_projective_values_at_minimal_objects(c in category(), field in field_strategy(), seed in any::<u64>()) {
        let m = module(&c, field, seed);
        if let PdValue::Finite(_) = Resolver::new(&c, field).proj_dim(&m).unwrap().value {
            for x in support_analysis(&m).minimal_objects {
                prop_assert!(projective_at(&m, x));
            }
            prop_assert!(verify_support_report(&m).unwrap().all_true());
        }
    }

    #[test]
    fn restriction_to_ideals_preserves_projectives(c in category(), field in field_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let parts: Vec<Representation> = (0..rng.gen_range(1..=2))
            .map(|_| representable(&c, field, ObjId(rng.gen_range(0..c.num_objects()))).unwrap())
            .collect();
        let p = Representation::direct_sum(&c, field, &parts).unwrap();
        for d in ideals(&c) {
            prop_assert!(is_projective(&restrict(&p, &d).unwrap()));
        }
    }

    #[test]
    fn global_dimension_is_finite_iff_auts_are_units(c in category(), field in field_strategy()) {
        let g = global_dim(&c, field).unwrap();
        let invertible = aut_invertibility(&c, field).iter().all(|a| a.invertible);
        prop_assert_eq!(g.value != PdValue::Infinite, invertible);
        if let PdValue::Finite(n) = g.value {
            prop_assert!(n <= c.chain_length());
        }
    }
}
