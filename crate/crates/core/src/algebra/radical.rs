//! Jacobson radical of `kC`.
//!
//! The non-isomorphisms span a nilpotent ideal `N` with `kC/N` a product of
//! matrix rings over the group algebras `kAut(x)`, one per isomorphism
//! class. So `J(kC) = N + lifts of J(kAut(x))`, and only small group
//! algebras need real work.

use std::collections::HashMap;

use serde::Serialize;

use super::{AlgebraError, CategoryAlgebra};
use crate::category::{FiniteCategory, MorId, ObjId};
use crate::exactla::{ExactMatrix, FieldSpec, Subspace};

/// Default cap on vectors enumerated by one exhaustive simplicity search.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RadicalMethod {
    Maschke,
    TraceForm,
    PGroupAugmentation,
    NormalSylowAugmentation,
    ExhaustiveSeries,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadicalData {
    subspace: Subspace,
    /// The most involved method used by any class.
    pub method: RadicalMethod,
    /// Method used per isomorphism class, keyed by the class representative.
    pub class_methods: Vec<(ObjId, RadicalMethod)>,
}

impl RadicalData {
    /// Columns form a basis of `J` in morphism coordinates.
    pub fn basis(&self) -> ExactMatrix {
        self.subspace.basis()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

pub fn radical(a: &CategoryAlgebra) -> Result<RadicalData, AlgebraError> {
    radical_with_budget(a, DEFAULT_BUDGET)
}

pub fn radical_with_budget(a: &CategoryAlgebra, budget: u64) -> Result<RadicalData, AlgebraError> {
    let c = a.category();
    let field = a.field();
    let n = a.dim();
    let mut spanning = a.noniso_subspace().basis();
    let mut class_methods = Vec::new();

    for class in &c.order().iso_classes {
        let rep = class[0];
        let (jg, method) = group_radical(c, rep, field, budget)?;
        class_methods.push((rep, method));
        if jg.dim() == 0 {
            continue;
        }
        let aut = c.aut(rep);
        // trivialisations t_i : rep -> x_i
        let torsor: Vec<(MorId, MorId)> = class
            .iter()
            .map(|&x| {
                let t = if x == rep { c.identity(rep) } else { c.hom(rep, x)[0] };
                (t, c.inverse(t).expect("morphisms inside an iso class are invertible"))
            })
            .collect();
        let jb = jg.basis();
        let mut lifts = ExactMatrix::zeros(field, n, 0);
        for k in 0..jb.cols() {
            for &(_, t_inv) in &torsor {
                for &(t, _) in &torsor {
                    let mut v = ExactMatrix::zeros(field, n, 1);
                    for (gi, &g) in aut.iter().enumerate() {
                        let coeff = jb.get(gi, k);
                        if coeff.is_zero() {
                            continue;
                        }
                        let m = c.compose(t, c.compose(g, t_inv).unwrap()).unwrap();
                        v.set(m.0, 0, coeff).expect("same field");
                    }
                    lifts = lifts.hstack(&v);
                }
            }
        }
        spanning = spanning.hstack(&lifts);
    }
    let method = class_methods.iter().map(|&(_, m)| m).max().unwrap_or(RadicalMethod::Maschke);
    Ok(RadicalData { subspace: Subspace::from_columns(&spanning), method, class_methods })
}

struct GroupTable {
    elements: Vec<MorId>,
    identity: usize,
    mul: Vec<Vec<usize>>,
}

impl GroupTable {
    fn new(c: &FiniteCategory, x: ObjId) -> Self {
        let elements = c.aut(x).to_vec();
        let pos: HashMap<MorId, usize> = elements.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mul = elements
            .iter()
            .map(|&g| elements.iter().map(|&h| pos[&c.compose(g, h).unwrap()]).collect())
            .collect();
        GroupTable { identity: pos[&c.identity(x)], elements, mul }
    }

    fn order(&self) -> usize {
        self.elements.len()
    }

    fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut h = g;
        while h != self.identity {
            h = self.mul[g][h];
            k += 1;
        }
        k
    }

    /// Left regular action matrices `L_g`.
    fn regular_actions(&self, field: FieldSpec) -> Vec<ExactMatrix> {
        let n = self.order();
        (0..n)
            .map(|g| {
                let mut m = ExactMatrix::zeros(field, n, n);
                for h in 0..n {
                    m.set(self.mul[g][h], h, field.one()).unwrap();
                }
                m
            })
            .collect()
    }
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// `J(kAut(x))` in the coordinates of `Aut(x)` (declaration order), and
/// the method that produced it.
pub fn group_radical(
    c: &FiniteCategory,
    x: ObjId,
    field: FieldSpec,
    budget: u64,
) -> Result<(Subspace, RadicalMethod), AlgebraError> {
    let g = GroupTable::new(c, x);
    let n = g.order();
    if field.is_invertible(n as u64) {
        return Ok((Subspace::zero(field, n), RadicalMethod::Maschke));
    }
    let p = field.characteristic() as usize;
    let diff = |a: usize, b: usize| {
        let mut v = ExactMatrix::zeros(field, n, 1);
        v.set(a, 0, field.one()).unwrap();
        v.set(b, 0, field.from_int(-1)).unwrap();
        v
    };
    if is_power_of(n, p) {
        let cols: Vec<ExactMatrix> = (0..n).filter(|&h| h != g.identity).map(|h| diff(h, g.identity)).collect();
        return Ok((Subspace::from_columns(&ExactMatrix::hconcat(field, n, &cols)), RadicalMethod::PGroupAugmentation));
    }
    let mut p_part = 1;
    while n % (p_part * p) == 0 {
        p_part *= p;
    }
    let p_elements: Vec<usize> = (0..n).filter(|&h| is_power_of(g.element_order(h), p)).collect();
    if p_elements.len() == p_part {
        // the p-elements form the unique Sylow subgroup P; J = kG · I(P)
        let mut cols = Vec::new();
        for a in 0..n {
            for &h in p_elements.iter().filter(|&&h| h != g.identity) {
                cols.push(diff(g.mul[a][h], a));
            }
        }
        return Ok((
            Subspace::from_columns(&ExactMatrix::hconcat(field, n, &cols)),
            RadicalMethod::NormalSylowAugmentation,
        ));
    }
    let j = radical_by_composition_series(field, &g.regular_actions(field), budget)?;
    Ok((j, RadicalMethod::ExhaustiveSeries))
}

/// Smallest subspace containing `base` and `v` that is stable under `actions`.
fn spin(base: &Subspace, v: &ExactMatrix, actions: &[ExactMatrix]) -> Subspace {
    let mut s = base.sum(&Subspace::from_columns(v));
    loop {
        let b = s.basis();
        let images: Vec<ExactMatrix> = actions.iter().map(|a| a * &b).collect();
        let next = s.sum(&Subspace::from_columns(&ExactMatrix::hconcat(s.field(), s.ambient_dim(), &images)));
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
}

/// Radical of the algebra spanned by `actions`, acting on itself as the left
/// regular module: an element lies in `J` iff it maps each layer of a
/// composition series into the one below. Simple layers are found by
/// spinning every vector of the current quotient, so this is only usable
/// over finite fields with small dimension.
pub fn radical_by_composition_series(
    field: FieldSpec,
    actions: &[ExactMatrix],
    budget: u64,
) -> Result<Subspace, AlgebraError> {
    let d = actions.first().map_or(0, |a| a.rows());
    let q = match field.order() {
        Some(q) => q as u128,
        None => return Err(AlgebraError::RadicalBudgetExceeded { needed: u128::MAX, budget }),
    };
    let mut series = vec![Subspace::zero(field, d)];
    while series.last().unwrap().dim() < d {
        let current = series.last().unwrap().clone();
        let free = current.complement_indices();
        let k = free.len() as u32;
        let needed = (q.pow(k) - 1) / (q - 1);
        if needed > budget as u128 {
            return Err(AlgebraError::RadicalBudgetExceeded { needed, budget });
        }
        let mut best: Option<Subspace> = None;
        'search: for lead in 0..free.len() {
            let tail = free.len() - lead - 1;
            for code in 0..q.pow(tail as u32) {
                let mut v = ExactMatrix::zeros(field, d, 1);
                v.set(free[lead], 0, field.one()).unwrap();
                let mut rest = code;
                for &pos in &free[lead + 1..] {
                    v.set(pos, 0, field.from_int((rest % q) as i64)).unwrap();
                    rest /= q;
                }
                let s = spin(&current, &v, actions);
                if best.as_ref().is_none_or(|b| s.dim() < b.dim()) {
                    let minimal = s.dim() == current.dim() + 1;
                    best = Some(s);
                    if minimal {
                        break 'search;
                    }
                }
            }
        }
        series.push(best.expect("nonzero quotient has a vector"));
    }

    let n_act = actions.len();
    let mut conditions = ExactMatrix::zeros(field, 0, n_act);
    for w in series.windows(2) {
        let proj = w[0].quotient_map();
        let layer = w[1].basis();
        for col in 0..layer.cols() {
            let m = layer.column(col);
            let images: Vec<ExactMatrix> = actions.iter().map(|a| &proj * &(a * &m)).collect();
            conditions = conditions.vstack(&ExactMatrix::hconcat(field, proj.rows(), &images));
        }
    }
    Ok(Subspace::from_columns(&conditions.kernel_basis()))
}

/// Whole-algebra radical by exhaustive composition series of `kC`.
/// Independent of the structural route in [`radical`].
pub fn radical_exhaustive(a: &CategoryAlgebra, budget: u64) -> Result<RadicalData, AlgebraError> {
    let actions: Vec<ExactMatrix> = a.category().morphisms().map(|m| a.left_mult(m)).collect();
    let subspace = radical_by_composition_series(a.field(), &actions, budget)?;
    Ok(RadicalData { subspace, method: RadicalMethod::ExhaustiveSeries, class_methods: vec![] })
}

/// Characteristic-zero radical as the kernel of the trace form
/// `(a, b) ↦ tr(L_{ab})`.
pub fn radical_by_trace_form(a: &CategoryAlgebra) -> Result<RadicalData, AlgebraError> {
    if a.field().characteristic() != 0 {
        return Err(AlgebraError::TraceFormNeedsCharZero);
    }
    let c = a.category();
    let n = a.dim();
    // tr(L_γ) counts basis elements δ with γ∘δ = δ
    let trace: Vec<i64> = c
        .morphisms()
        .map(|g| c.morphisms().filter(|&d| c.compose(g, d) == Some(d)).count() as i64)
        .collect();
    let mut gram = vec![0i64; n * n];
    for x in c.morphisms() {
        for y in c.morphisms() {
            if let Some(xy) = c.compose(x, y) {
                gram[x.0 * n + y.0] = trace[xy.0];
            }
        }
    }
    let t = ExactMatrix::from_i64(a.field(), n, n, &gram);
    Ok(RadicalData {
        subspace: Subspace::from_columns(&t.kernel_basis()),
        method: RadicalMethod::TraceForm,
        class_methods: vec![],
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::build_algebra;
    use crate::builtins::builtin;

    fn alg(name: &str, field: FieldSpec) -> CategoryAlgebra {
        build_algebra(&Arc::new(builtin(name).unwrap()), field)
    }

    fn fp(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn c2_over_f2_is_augmentation() {
        let a = alg("c2", fp(2));
        let j = radical(&a).unwrap();
        assert_eq!(j.dim(), 1);
        assert_eq!(j.basis(), ExactMatrix::from_i64(fp(2), 2, 1, &[1, 1]));
        assert_eq!(j.method, RadicalMethod::PGroupAugmentation);
    }

    #[test]
    fn c2_over_q_is_zero() {
        let j = radical(&alg("c2", FieldSpec::Rationals)).unwrap();
        assert_eq!(j.dim(), 0);
        assert_eq!(j.method, RadicalMethod::Maschke);
    }

    #[test]
    fn example3_over_f2() {
        let a = alg("example3", fp(2));
        let j = radical(&a).unwrap();
        // basis order 1X, g, f, 1Y: J = span{f, 1X + g}
        let expected = Subspace::from_columns(&ExactMatrix::from_i64(fp(2), 4, 2, &[0, 1, 0, 1, 1, 0, 0, 0]));
        assert_eq!(j.subspace(), &expected);
        assert!(a.is_two_sided_ideal(j.subspace()));
        assert_eq!(a.nilpotency_index(j.subspace()), Some(2));
    }

    #[test]
    fn s3_methods() {
        assert_eq!(radical(&alg("s3", fp(3))).unwrap().method, RadicalMethod::NormalSylowAugmentation);
        assert_eq!(radical(&alg("s3", fp(2))).unwrap().method, RadicalMethod::ExhaustiveSeries);
        assert_eq!(radical(&alg("s3", fp(5))).unwrap().method, RadicalMethod::Maschke);
    }

    #[test]
    fn structural_route_matches_exhaustive_route() {
        for name in crate::builtins::BUILTIN_NAMES {
            for p in [2, 3] {
                let a = alg(name, fp(p));
                let structural = radical(&a).unwrap();
                let exhaustive = radical_exhaustive(&a, DEFAULT_BUDGET).unwrap();
                assert_eq!(structural.subspace(), exhaustive.subspace(), "{name} over F{p}");
            }
        }
    }

    #[test]
    fn structural_route_matches_trace_form_over_q() {
        for name in crate::builtins::BUILTIN_NAMES {
            let a = alg(name, FieldSpec::Rationals);
            let structural = radical(&a).unwrap();
            let trace = radical_by_trace_form(&a).unwrap();
            assert_eq!(structural.subspace(), trace.subspace(), "{name}");
            assert_eq!(structural.dim(), a.noniso_ideal().len());
        }
    }

    #[test]
    fn normal_sylow_matches_exhaustive_for_s3_f3() {
        let c = builtin("s3").unwrap();
        let (j, _) = group_radical(&c, ObjId(0), fp(3), DEFAULT_BUDGET).unwrap();
        let g = GroupTable::new(&c, ObjId(0));
        let brute = radical_by_composition_series(fp(3), &g.regular_actions(fp(3)), DEFAULT_BUDGET).unwrap();
        assert_eq!(j, brute);
        assert_eq!(j.dim(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        let a = alg("s3", fp(2));
        let err = radical_with_budget(&a, 4).unwrap_err();
        assert!(matches!(err, AlgebraError::RadicalBudgetExceeded { .. }));
        assert!(radical_by_trace_form(&a).is_err());
    }
}
