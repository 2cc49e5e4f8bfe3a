mod common;

use std::sync::Arc;

use common::{all_categories, fp, ideals, nonzero_module, product_category, random_poset, subcategories};
use eica::homology::random_module;
use eica::rep::{build_simple, extend_by_zero, hom_space, induce, representable, restrict, support_analysis, SimplicityCheck};
use eica::{ExactMatrix, FieldSpec, FiniteCategory, ObjId, Representation};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bundled categories plus small products `C_m × poset × groupoid`.
fn category() -> impl Strategy<Value = Arc<FiniteCategory>> {
    let builtin = (0..all_categories().len()).prop_map(|i| all_categories()[i].1.clone());
    let product = (1usize..=3, 1usize..=3, 1usize..=2, proptest::collection::vec(any::<bool>(), 3))
        .prop_map(|(m, n, copies, bits)| Arc::new(product_category(m, &random_poset(n, &bits), copies)));
    prop_oneof![builtin, product]
}

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(fp(2)), Just(fp(3))]
}

fn dim_hom(m: &Representation, n: &Representation) -> usize {
    hom_space(m, n).unwrap().dim()
}

/// Every vector of `F_p^d`, zero included.
fn all_vectors(field: FieldSpec, d: usize) -> Vec<ExactMatrix> {
    let q = field.order().unwrap() as i64;
    (0..q.pow(d as u32))
        .map(|mut code| {
            let entries: Vec<i64> = (0..d)
                .map(|_| {
                    let e = code % q;
                    code /= q;
                    e
                })
                .collect();
            ExactMatrix::from_i64(field, d, 1, &entries)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn yoneda_dimension(c in category(), field in field_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&c, field, 6, &mut rng);
        let x = ObjId(rng.gen_range(0..c.num_objects()));
        prop_assert_eq!(dim_hom(&representable(&c, field, x).unwrap(), &m), m.dim(x));
    }

    #[test]
    fn induction_is_left_adjoint_to_restriction(c in category(), field in field_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let subs = subcategories(&c);
        let d = &subs[rng.gen_range(0..subs.len())];
        let m = random_module(&d.category, field, 4, &mut rng);
        let n = random_module(&c, field, 6, &mut rng);
        let induced = induce(&m, d).unwrap();
        prop_assert!(induced.validate().is_ok());
        prop_assert_eq!(dim_hom(&induced, &n), dim_hom(&m, &restrict(&n, d).unwrap()));
    }

    #[test]
    fn extension_by_zero_is_right_adjoint_to_restriction(c in category(), field in field_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ids = ideals(&c);
        let d = &ids[rng.gen_range(0..ids.len())];
        let m = random_module(&c, field, 6, &mut rng);
        let n = random_module(&d.category, field, 4, &mut rng);
        let extended = extend_by_zero(&n, d).unwrap();
        prop_assert_eq!(dim_hom(&restrict(&m, d).unwrap(), &n), dim_hom(&m, &extended));
        prop_assert_eq!(restrict(&extended, d).unwrap(), n);
    }

    #[test]
    fn support_invariants(c in category(), field in field_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = nonzero_module(&c, field, 6, &mut rng);
        let s = support_analysis(&m);
        let below = |y: ObjId, x: ObjId| !c.hom(y, x).is_empty();
        for &x in &s.minimal_objects {
            prop_assert!(s.support.contains(&x));
        }
        for &y in &s.support {
            prop_assert!(s.cm_objects.contains(&y));
            prop_assert!(s.minimal_objects.iter().any(|&x| below(x, y)));
        }
        for x in c.objects() {
            let minimal = m.dim(x) > 0
                && c.objects().all(|y| c.order().isomorphic(x, y) || !below(y, x) || m.dim(y) == 0);
            prop_assert_eq!(s.minimal_objects.contains(&x), minimal);
        }
    }

    #[test]
    fn representable_support_is_the_upper_set(c in category(), field in field_strategy(), i in any::<usize>()) {
        let x = ObjId(i % c.num_objects());
        let s = support_analysis(&representable(&c, field, x).unwrap());
        prop_assert_eq!(s.support, c.above(x).unwrap());
        let expected: Vec<ObjId> = c.objects().filter(|&y| !c.hom(x, y).is_empty()).collect();
        prop_assert_eq!(c.above(x).unwrap(), expected);
    }

    #[test]
    fn built_simples_are_simple(m in 1usize..=3, n in 1usize..=2, copies in 1usize..=2,
                                bits in proptest::collection::vec(any::<bool>(), 1), p in prop_oneof![Just(2u32), Just(3)],
                                i in any::<usize>()) {
        let c = Arc::new(product_category(m, &random_poset(n, &bits), copies));
        let field = fp(p);
        let x = ObjId(i % c.num_objects());
        // a faithful simple where one exists over this field, else the trivial module
        let generator = match (m, p) {
            (3, 2) => ExactMatrix::from_i64(field, 2, 2, &[0, 1, 1, 1]),
            (2, 3) => ExactMatrix::from_i64(field, 1, 1, &[-1]),
            _ => ExactMatrix::identity(field, 1),
        };
        let mut v = vec![ExactMatrix::identity(field, generator.rows())];
        for _ in 1..m {
            let next = &generator * v.last().unwrap();
            v.push(next);
        }
        let s = build_simple(&c, field, x, &v, 1 << 16).unwrap();
        prop_assert_eq!(&s.check, &SimplicityCheck::Verified);
        // every nonzero vector anywhere spins to the whole module
        for y in c.objects() {
            for w in all_vectors(field, s.module.dim(y)).into_iter().filter(|w| !w.is_zero()) {
                let spun = s.module.spin(&[(y, w)]);
                for z in c.objects() {
                    prop_assert_eq!(spun[z.0].dim(), s.module.dim(z));
                }
            }
        }
    }
}
