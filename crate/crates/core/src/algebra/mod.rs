//! The category algebra `kC`: basis the morphisms, product the composition
//! when defined and zero otherwise.

mod radical;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::category::{FiniteCategory, MorId, ObjId};
use crate::exactla::{ExactMatrix, FieldSpec, Subspace};
use crate::rep::{RepError, Representation};

pub use radical::{
    group_radical, radical, radical_by_composition_series, radical_by_trace_form, radical_exhaustive,
    radical_with_budget,
    RadicalData, RadicalMethod, DEFAULT_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("exhaustive radical computation needs {needed} vectors, budget is {budget}")]
    RadicalBudgetExceeded { needed: u128, budget: u64 },
    #[error("the trace-form radical is only valid in characteristic 0")]
    TraceFormNeedsCharZero,
}

#[derive(Clone, Debug)]
pub struct CategoryAlgebra {
    category: Arc<FiniteCategory>,
    field: FieldSpec,
    unit: ExactMatrix,
    noniso_ideal: Vec<MorId>,
}

pub fn build_algebra(c: &Arc<FiniteCategory>, field: FieldSpec) -> CategoryAlgebra {
    let n = c.num_morphisms();
    let mut unit = ExactMatrix::zeros(field, n, 1);
    for x in c.objects() {
        unit.set(c.identity(x).0, 0, field.one()).expect("same field");
    }
    let order = c.order();
    let noniso_ideal = c
        .morphisms()
        .filter(|&m| !order.isomorphic(c.dom(m), c.cod(m)))
        .collect();
    CategoryAlgebra { category: Arc::clone(c), field, unit, noniso_ideal }
}

impl CategoryAlgebra {
    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.category.num_morphisms()
    }

    /// `Σ_x 1_x` as a coefficient column.
    pub fn unit(&self) -> &ExactMatrix {
        &self.unit
    }

    /// Basis indices of the non-isomorphisms.
    pub fn noniso_ideal(&self) -> &[MorId] {
        &self.noniso_ideal
    }

    pub fn noniso_subspace(&self) -> Subspace {
        let id = ExactMatrix::identity(self.field, self.dim());
        let cols: Vec<usize> = self.noniso_ideal.iter().map(|m| m.0).collect();
        Subspace::from_columns(&id.columns(&cols))
    }

    /// Structure constant: `α · β` is a basis element or zero.
    pub fn product(&self, a: MorId, b: MorId) -> Option<MorId> {
        self.category.compose(a, b)
    }

    pub fn basis_vector(&self, m: MorId) -> ExactMatrix {
        let mut v = ExactMatrix::zeros(self.field, self.dim(), 1);
        v.set(m.0, 0, self.field.one()).expect("same field");
        v
    }

    /// Matrix of `v ↦ α · v` on the basis.
    pub fn left_mult(&self, a: MorId) -> ExactMatrix {
        let n = self.dim();
        let mut m = ExactMatrix::zeros(self.field, n, n);
        for b in self.category.morphisms() {
            if let Some(ab) = self.product(a, b) {
                m.set(ab.0, b.0, self.field.one()).expect("same field");
            }
        }
        m
    }

    /// Matrix of `v ↦ v · α` on the basis.
    pub fn right_mult(&self, a: MorId) -> ExactMatrix {
        let n = self.dim();
        let mut m = ExactMatrix::zeros(self.field, n, n);
        for b in self.category.morphisms() {
            if let Some(ba) = self.product(b, a) {
                m.set(ba.0, b.0, self.field.one()).expect("same field");
            }
        }
        m
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, x: &ExactMatrix) -> ExactMatrix {
        let mut acc = ExactMatrix::zeros(self.field, self.dim(), self.dim());
        for a in self.category.morphisms() {
            let c = x.get(a.0, 0);
            if !c.is_zero() {
                acc = &acc + &self.left_mult(a).scale(&c);
            }
        }
        acc
    }

    /// Product of two elements given as coefficient columns.
    pub fn multiply(&self, x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
        &self.left_mult_by(x) * y
    }

    /// Span of all products `a · b` with `a` in `left` and `b` in `right`.
    pub fn product_span(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let lb = left.basis();
        let rb = right.basis();
        let parts: Vec<ExactMatrix> = (0..lb.cols()).map(|i| &self.left_mult_by(&lb.column(i)) * &rb).collect();
        Subspace::from_columns(&ExactMatrix::hconcat(self.field, self.dim(), &parts))
    }

    /// Whether `s` is closed under multiplication by basis elements on both sides.
    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        let b = s.basis();
        self.category
            .morphisms()
            .all(|a| s.contains(&(&self.left_mult(a) * &b)) && s.contains(&(&self.right_mult(a) * &b)))
    }

    /// Smallest `k` with `s^k = 0`, or `None` if `s` is not nilpotent.
    pub fn nilpotency_index(&self, s: &Subspace) -> Option<usize> {
        let mut power = s.clone();
        if s.dim() == 0 {
            return Some(1);
        }
        for k in 1..=self.dim() + 1 {
            if power.dim() == 0 {
                return Some(k);
            }
            let next = self.product_span(&power, s);
            if next.dim() == power.dim() {
                return None;
            }
            power = next;
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutInfo {
    pub object: ObjId,
    pub order: usize,
    pub invertible: bool,
}

/// `|Aut(x)|` for each object and whether it is a unit in the field.
pub fn aut_invertibility(c: &FiniteCategory, field: FieldSpec) -> Vec<AutInfo> {
    c.objects()
        .map(|x| {
            let order = c.aut(x).len();
            AutInfo { object: x, order, invertible: field.is_invertible(order as u64) }
        })
        .collect()
}

/// `kC / J` as a left module, in functor form: at `y` the space is
/// `1_y·kC / 1_y·J`.
pub fn semisimple_quotient_module(a: &CategoryAlgebra, j: &RadicalData) -> Result<Representation, RepError> {
    let regular = crate::rep::regular_representation(a.category(), a.field());
    let c = a.category();
    let basis = j.subspace().basis();
    let subs: Vec<Subspace> = c
        .objects()
        .map(|y| {
            // coordinates of 1_y·kC inside kC are the morphisms with codomain y
            let rows: Vec<usize> = c.morphisms().filter(|&m| c.cod(m) == y).map(|m| m.0).collect();
            let cols: Vec<usize> = (0..basis.cols()).collect();
            Subspace::from_columns(&basis.select(&rows, &cols))
        })
        .collect();
    regular.quotient(&subs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;

    fn cat(name: &str) -> Arc<FiniteCategory> {
        Arc::new(builtin(name).unwrap())
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(build_algebra(&cat("example3"), f2()).dim(), 4);
        assert_eq!(build_algebra(&cat("c2"), FieldSpec::Rationals).dim(), 2);
        assert_eq!(build_algebra(&cat("a2-path"), FieldSpec::Rationals).dim(), 3);
    }

    #[test]
    fn unit_is_two_sided() {
        let a = build_algebra(&cat("example3"), FieldSpec::Rationals);
        let x = ExactMatrix::from_i64(FieldSpec::Rationals, 4, 1, &[3, -1, 5, 2]);
        assert_eq!(a.multiply(a.unit(), &x), x);
        assert_eq!(a.multiply(&x, a.unit()), x);
    }

    #[test]
    fn aut_orders() {
        let c = cat("example3");
        let info = aut_invertibility(&c, f2());
        assert_eq!((info[0].order, info[0].invertible), (2, false));
        assert_eq!((info[1].order, info[1].invertible), (1, true));
        assert!(aut_invertibility(&c, FieldSpec::Rationals).iter().all(|i| i.invertible));
        let s3 = cat("s3");
        assert!(aut_invertibility(&s3, FieldSpec::prime(5).unwrap())[0].invertible);
    }

    #[test]
    fn noniso_ideal_of_example3() {
        let a = build_algebra(&cat("example3"), f2());
        assert_eq!(a.noniso_ideal(), &[MorId(2)]);
        let n = a.noniso_subspace();
        assert!(a.is_two_sided_ideal(&n));
        assert_eq!(a.nilpotency_index(&n), Some(2));
    }

    #[test]
    fn semisimple_quotients() {
        let a = build_algebra(&cat("example3"), f2());
        let j = radical(&a).unwrap();
        assert_eq!(semisimple_quotient_module(&a, &j).unwrap().dims(), &[1, 1]);

        let a = build_algebra(&cat("c2"), FieldSpec::Rationals);
        let j = radical(&a).unwrap();
        assert_eq!(semisimple_quotient_module(&a, &j).unwrap().dims(), &[2]);

        let a = build_algebra(&cat("a2-path"), FieldSpec::Rationals);
        let j = radical(&a).unwrap();
        assert_eq!(semisimple_quotient_module(&a, &j).unwrap().dims(), &[1, 1]);
    }
}
