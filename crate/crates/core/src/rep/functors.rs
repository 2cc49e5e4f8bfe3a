use std::sync::Arc;

use super::{RepError, Representation};
use crate::category::{same_category, FullSubcategory};
use crate::exactla::{ExactMatrix, Subspace};

/// `M↓`: restriction along the inclusion of a full subcategory.
pub fn restrict(m: &Representation, d: &FullSubcategory) -> Result<Representation, RepError> {
    if !same_category(m.category(), &d.parent) {
        return Err(RepError::CategoryMismatch);
    }
    let dims = d.objects.iter().map(|&x| m.dim(x)).collect();
    let action = d.morphisms.iter().map(|&a| m.action(a).clone()).collect();
    Ok(Representation::new_unchecked(Arc::clone(&d.category), m.field(), dims, action))
}

/// `N` on an ideal `D`, extended by zero to all of `C`.
pub fn extend_by_zero(n: &Representation, d: &FullSubcategory) -> Result<Representation, RepError> {
    if !same_category(n.category(), &d.category) {
        return Err(RepError::CategoryMismatch);
    }
    let c = &d.parent;
    if !c.is_ideal(&d.objects).map_err(|_| RepError::NotAnIdeal)? {
        return Err(RepError::NotAnIdeal);
    }
    let field = n.field();
    let dims: Vec<usize> = c.objects().map(|x| d.local_object(x).map_or(0, |l| n.dim(l))).collect();
    let action = c
        .morphisms()
        .map(|a| match d.local_morphism(a) {
            Some(l) => n.action(l).clone(),
            None => ExactMatrix::zeros(field, dims[c.cod(a).0], dims[c.dom(a).0]),
        })
        .collect();
    Representation::new(Arc::clone(c), field, dims, action)
}

/// `kC ⊗_{kD} M`, as the quotient of `⊕_{x ∈ D} kC·1_x ⊗ M(x)` by the
/// relations `(c∘δ) ⊗ v − c ⊗ M(δ)v`.
pub fn induce(m: &Representation, d: &FullSubcategory) -> Result<Representation, RepError> {
    if !same_category(m.category(), &d.category) {
        return Err(RepError::CategoryMismatch);
    }
    let c = &d.parent;
    let dc = &d.category;
    let field = m.field();
    // coordinates at y: triples (local x, c ∈ Hom(x, y), i < dim M(x))
    let coords: Vec<Vec<(usize, usize, usize)>> = c
        .objects()
        .map(|y| {
            let mut v = Vec::new();
            for (lx, &x) in d.objects.iter().enumerate() {
                for &g in c.hom(x, y) {
                    for i in 0..m.dims()[lx] {
                        v.push((lx, g.0, i));
                    }
                }
            }
            v
        })
        .collect();
    let index = |y: usize, key: (usize, usize, usize)| coords[y].iter().position(|&k| k == key).unwrap();
    let dims: Vec<usize> = coords.iter().map(Vec::len).collect();
    let action = c
        .morphisms()
        .map(|a| {
            let (s, t) = (c.dom(a).0, c.cod(a).0);
            let mut mat = ExactMatrix::zeros(field, dims[t], dims[s]);
            for (j, &(lx, g, i)) in coords[s].iter().enumerate() {
                let ag = c.compose(a, crate::category::MorId(g)).unwrap();
                mat.set(index(t, (lx, ag.0, i)), j, field.one()).unwrap();
            }
            mat
        })
        .collect();
    let tensor = Representation::new_unchecked(Arc::clone(c), field, dims.clone(), action);

    let relations: Vec<Subspace> = c
        .objects()
        .map(|y| {
            let mut cols = Vec::new();
            for delta in dc.morphisms().filter(|&dl| !dc.is_identity(dl)) {
                let (lx, lx2) = (dc.dom(delta), dc.cod(delta));
                let (x2, pd) = (d.objects[lx2.0], d.morphisms[delta.0]);
                let md = m.action(delta);
                for &g in c.hom(x2, y) {
                    let gd = c.compose(g, pd).unwrap();
                    for i in 0..m.dim(lx) {
                        let mut e = ExactMatrix::zeros(field, dims[y.0], 1);
                        e.set(index(y.0, (lx.0, gd.0, i)), 0, field.one()).unwrap();
                        let mut w = ExactMatrix::zeros(field, dims[y.0], 1);
                        if m.dim(lx2) > 0 {
                            w.set_block(index(y.0, (lx2.0, g.0, 0)), 0, &md.column(i));
                        }
                        let v = &e - &w;
                        cols.push(v);
                    }
                }
            }
            Subspace::from_columns(&ExactMatrix::hconcat(field, dims[y.0], &cols))
        })
        .collect();
    tensor.quotient(&relations)
}
