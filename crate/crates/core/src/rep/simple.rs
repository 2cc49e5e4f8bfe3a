use std::sync::Arc;

use serde::Serialize;

use super::{RepError, Representation};
use crate::category::{FiniteCategory, ObjId};
use crate::exactla::{ExactMatrix, FieldSpec, Subspace};

/// Outcome of the simplicity check on the `kAut(x)`-module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SimplicityCheck {
    /// every nonzero vector was spun and generates the whole module
    Verified,
    /// not checked; the module is accepted as given
    Unverified { reason: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimpleModule {
    pub module: Representation,
    pub check: SimplicityCheck,
}

/// `S_{x,V}`: `V` on every object isomorphic to `x`, zero elsewhere. An
/// isomorphism `α: x_i → x_j` acts as `V(t_j⁻¹∘α∘t_i)`, where `t_i` is the
/// first declared isomorphism `x → x_i`; non-isomorphisms act as zero.
///
/// `v` gives one matrix per element of `Aut(x)`, in declaration order.
pub fn build_simple(
    c: &Arc<FiniteCategory>,
    field: FieldSpec,
    x: ObjId,
    v: &[ExactMatrix],
    budget: u64,
) -> Result<SimpleModule, RepError> {
    if x.0 >= c.num_objects() {
        return Err(RepError::UnknownObject(format!("#{}", x.0)));
    }
    let aut = c.aut(x);
    if v.len() != aut.len() {
        return Err(RepError::NotARepresentation(format!("expected {} matrices, found {}", aut.len(), v.len())));
    }
    let d = v.first().map_or(0, ExactMatrix::rows);
    if v.iter().any(|m| m.field() != field) {
        return Err(RepError::NotARepresentation("matrix over the wrong field".into()));
    }
    if v.iter().any(|m| m.shape() != (d, d)) {
        return Err(RepError::NotARepresentation("matrices must be square of equal size".into()));
    }
    let pos = |m| aut.iter().position(|&a| a == m).unwrap();
    for (i, &g) in aut.iter().enumerate() {
        if c.is_identity(g) && !v[i].is_identity() {
            return Err(RepError::NotARepresentation("identity does not act trivially".into()));
        }
        for (j, &h) in aut.iter().enumerate() {
            if v[pos(c.compose(g, h).unwrap())] != &v[i] * &v[j] {
                return Err(RepError::NotARepresentation(format!(
                    "action of {} is not multiplicative",
                    c.morphism_name(g)
                )));
            }
        }
    }
    let check = check_simple(field, v, d, budget)?;

    let order = c.order();
    let torsor: Vec<Option<_>> = c
        .objects()
        .map(|y| if order.isomorphic(x, y) { c.first_iso(x, y) } else { None })
        .collect();
    let dims: Vec<usize> = torsor.iter().map(|t| if t.is_some() { d } else { 0 }).collect();
    let action = c
        .morphisms()
        .map(|a| {
            let (s, t) = (c.dom(a), c.cod(a));
            match (torsor[s.0], torsor[t.0]) {
                (Some(ts), Some(tt)) => {
                    let back = c.inverse(tt).unwrap();
                    let g = c.compose(back, c.compose(a, ts).unwrap()).unwrap();
                    v[pos(g)].clone()
                }
                _ => ExactMatrix::zeros(field, dims[t.0], dims[s.0]),
            }
        })
        .collect();
    let module = Representation::new(Arc::clone(c), field, dims, action)?;
    Ok(SimpleModule { module, check })
}

/// Over `F_q`, spins a representative of every projective point; over `ℚ`
/// only dimension one is decided.
fn check_simple(field: FieldSpec, v: &[ExactMatrix], d: usize, budget: u64) -> Result<SimplicityCheck, RepError> {
    if d == 0 {
        return Err(RepError::NotSimple);
    }
    if d == 1 {
        return Ok(SimplicityCheck::Verified);
    }
    let q = match field.order() {
        Some(q) => q as u128,
        None => {
            return Ok(SimplicityCheck::Unverified {
                reason: "simplicity over Q is not checked beyond dimension 1".into(),
            })
        }
    };
    let needed = (q.pow(d as u32) - 1) / (q - 1);
    if needed > budget as u128 {
        return Ok(SimplicityCheck::Unverified {
            reason: format!("spinning needs {needed} vectors, budget is {budget}"),
        });
    }
    for lead in 0..d {
        let tail = (d - lead - 1) as u32;
        for code in 0..q.pow(tail) {
            let mut w = ExactMatrix::zeros(field, d, 1);
            w.set(lead, 0, field.one()).unwrap();
            let mut rest = code;
            for pos in lead + 1..d {
                w.set(pos, 0, field.from_int((rest % q) as i64)).unwrap();
                rest /= q;
            }
            if spin(&w, v).dim() < d {
                return Err(RepError::NotSimple);
            }
        }
    }
    Ok(SimplicityCheck::Verified)
}

fn spin(w: &ExactMatrix, actions: &[ExactMatrix]) -> Subspace {
    let mut s = Subspace::from_columns(w);
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
