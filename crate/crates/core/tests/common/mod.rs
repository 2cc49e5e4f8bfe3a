#![allow(dead_code)]

use std::sync::Arc;

use eica::builtins::{builtin, BUILTIN_NAMES};
use eica::category::{full_subcategory, CategorySpec, IdentityMap, MorphismSpec};
use eica::homology::random_module;
use eica::rep::build_simple;
use eica::{validate_category, ExactMatrix, FieldSpec, FiniteCategory, FullSubcategory, ObjId, Representation};
use rand_chacha::ChaCha8Rng;

pub fn cat(name: &str) -> Arc<FiniteCategory> {
    Arc::new(builtin(name).unwrap_or_else(|| panic!("no builtin {name}")))
}

pub fn all_categories() -> Vec<(&'static str, Arc<FiniteCategory>)> {
    BUILTIN_NAMES.iter().map(|&n| (n, cat(n))).collect()
}

pub fn fp(p: u32) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

pub fn fields() -> [FieldSpec; 3] {
    [FieldSpec::Rationals, fp(2), fp(3)]
}

/// The simple module at `x` with trivial `Aut(x)` action.
pub fn trivial_simple(c: &Arc<FiniteCategory>, field: FieldSpec, x: ObjId) -> Representation {
    let v = vec![ExactMatrix::identity(field, 1); c.aut(x).len()];
    build_simple(c, field, x, &v, 1 << 20).unwrap().module
}

/// Every full subcategory whose object set is an ideal.
pub fn ideals(c: &Arc<FiniteCategory>) -> Vec<FullSubcategory> {
    let n = c.num_objects();
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(ObjId).collect::<Vec<_>>())
        .filter(|objs| c.is_ideal(objs).unwrap())
        .map(|objs| full_subcategory(c, &objs).unwrap())
        .collect()
}

/// Every nonempty full subcategory.
pub fn subcategories(c: &Arc<FiniteCategory>) -> Vec<FullSubcategory> {
    let n = c.num_objects();
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(ObjId).collect::<Vec<_>>())
        .map(|objs| full_subcategory(c, &objs).unwrap())
        .collect()
}

pub fn nonzero_module(c: &Arc<FiniteCategory>, field: FieldSpec, max_dim: usize, rng: &mut ChaCha8Rng) -> Representation {
    loop {
        let m = random_module(c, field, max_dim, rng);
        if !m.is_zero() {
            return m;
        }
    }
}

/// `C_m × P × (codiscrete groupoid on `copies` objects)` for a poset `P` on
/// `0..n` given by `leq[a][b]` (reflexive, transitive). Objects are `(p, i)`;
/// a morphism `(p, i) -> (q, j)` is a group element `g` when `p <= q`.
pub fn product_category(m: usize, leq: &[Vec<bool>], copies: usize) -> FiniteCategory {
    let n = leq.len();
    let obj = |p: usize, i: usize| format!("o{p}_{i}");
    let mor = |g: usize, p: usize, i: usize, q: usize, j: usize| format!("g{g}:{p}_{i}>{q}_{j}");
    let mut spec = CategorySpec::default();
    let mut identities = Vec::new();
    for p in 0..n {
        for i in 0..copies {
            spec.objects.push(obj(p, i));
            identities.push((obj(p, i), mor(0, p, i, p, i)));
        }
    }
    let mut arrows = Vec::new();
    for p in 0..n {
        for q in (0..n).filter(|&q| leq[p][q]) {
            for i in 0..copies {
                for j in 0..copies {
                    for g in 0..m {
                        arrows.push((g, p, i, q, j));
                        spec.morphisms.push(MorphismSpec { id: mor(g, p, i, q, j), dom: obj(p, i), cod: obj(q, j) });
                    }
                }
            }
        }
    }
    for &(g, p, i, q, j) in &arrows {
        for &(h, q2, j2, r, l) in &arrows {
            if (q2, j2) == (q, j) {
                spec.composition.push([mor(h, q, j, r, l), mor(g, p, i, q, j), mor((g + h) % m, p, i, r, l)]);
            }
        }
    }
    spec.identities = IdentityMap(identities);
    validate_category(&spec).expect("product categories are EI")
}

/// Reflexive-transitive closure of a random strictly upper triangular relation.
pub fn random_poset(n: usize, bits: &[bool]) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    let mut k = 0;
    for a in 0..n {
        leq[a][a] = true;
        for b in a + 1..n {
            leq[a][b] = bits.get(k).copied().unwrap_or(false);
            k += 1;
        }
    }
    for mid in 0..n {
        for a in 0..n {
            for b in 0..n {
                if leq[a][mid] && leq[mid][b] {
                    leq[a][b] = true;
                }
            }
        }
    }
    leq
}

/// Longest strict chain in a poset, by dynamic programming over `0..n`
/// (relations only go upward in index).
pub fn poset_height(leq: &[Vec<bool>]) -> usize {
    let n = leq.len();
    let mut best = vec![0; n];
    for b in 0..n {
        for a in 0..b {
            if leq[a][b] {
                best[b] = best[b].max(best[a] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}
