//! Representations of `kC`, i.e. functors from `C` to finite-dimensional
//! vector spaces: one space per object and one matrix per morphism.

mod functors;
mod hom;
mod simple;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::category::{same_category, FiniteCategory, MorId, ObjId};
use crate::exactla::{ExactMatrix, FieldSpec, LinalgError, Subspace};
use crate::io::{matrix_from_json, matrix_to_json, ModuleSpec, OrderedMap};

pub use functors::{extend_by_zero, induce, restrict};
pub use hom::{hom_space, HomSpace, NatTrans};
pub use simple::{build_simple, SimpleModule, SimplicityCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("not functorial on the pair ({g}, {f})")]
    NotFunctorial { g: String, f: String },
    #[error("identity of {0} does not act as the identity")]
    IdentityNotPreserved(String),
    #[error("field mismatch: module is over {found}, expected {expected}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("representations live over different categories")]
    CategoryMismatch,
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("missing action matrix for {0:?}")]
    MissingAction(String),
    #[error("subcategory is not an ideal")]
    NotAnIdeal,
    #[error("subspaces are not stable under the action")]
    NotASubrepresentation,
    #[error("not a representation of Aut(x): {0}")]
    NotARepresentation(String),
    #[error("group representation is not simple")]
    NotSimple,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A functor `C -> vect_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    category: Arc<FiniteCategory>,
    field: FieldSpec,
    dims: Vec<usize>,
    /// indexed by morphism; shape `dim(cod) × dim(dom)`
    action: Vec<ExactMatrix>,
}

impl Representation {
    /// Checks shapes, identities and functoriality on every composable pair.
    pub fn new(
        category: Arc<FiniteCategory>,
        field: FieldSpec,
        dims: Vec<usize>,
        action: Vec<ExactMatrix>,
    ) -> Result<Self, RepError> {
        let rep = Representation { category, field, dims, action };
        rep.validate()?;
        Ok(rep)
    }

    /// Skips validation; for data that is functorial by construction.
    pub(crate) fn new_unchecked(
        category: Arc<FiniteCategory>,
        field: FieldSpec,
        dims: Vec<usize>,
        action: Vec<ExactMatrix>,
    ) -> Self {
        let rep = Representation { category, field, dims, action };
        debug_assert!(rep.validate().is_ok(), "{:?}", rep.validate());
        rep
    }

    pub fn zero(category: Arc<FiniteCategory>, field: FieldSpec) -> Self {
        let dims = vec![0; category.num_objects()];
        let action = category.morphisms().map(|_| ExactMatrix::zeros(field, 0, 0)).collect();
        Representation { category, field, dims, action }
    }

    pub fn validate(&self) -> Result<(), RepError> {
        let c = &self.category;
        if self.dims.len() != c.num_objects() || self.action.len() != c.num_morphisms() {
            return Err(RepError::ShapeError("dimension or action list has the wrong length".into()));
        }
        for m in c.morphisms() {
            let a = &self.action[m.0];
            if a.field() != self.field {
                return Err(RepError::FieldMismatch { expected: self.field, found: a.field() });
            }
            let want = (self.dims[c.cod(m).0], self.dims[c.dom(m).0]);
            if a.shape() != want {
                return Err(RepError::ShapeError(format!(
                    "matrix for {} is {:?}, expected {:?}",
                    c.morphism_name(m),
                    a.shape(),
                    want
                )));
            }
        }
        for x in c.objects() {
            if !self.action[c.identity(x).0].is_identity() {
                return Err(RepError::IdentityNotPreserved(c.object_name(x).to_string()));
            }
        }
        for g in c.morphisms() {
            for f in c.morphisms() {
                if c.is_identity(g) || c.is_identity(f) {
                    continue;
                }
                if let Some(h) = c.compose(g, f) {
                    if self.action[h.0] != &self.action[g.0] * &self.action[f.0] {
                        return Err(RepError::NotFunctorial {
                            g: c.morphism_name(g).to_string(),
                            f: c.morphism_name(f).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, x: ObjId) -> usize {
        self.dims[x.0]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, m: MorId) -> &ExactMatrix {
        &self.action[m.0]
    }

    pub(crate) fn check_compatible(&self, other: &Representation) -> Result<(), RepError> {
        if !same_category(&self.category, &other.category) {
            return Err(RepError::CategoryMismatch);
        }
        if self.field != other.field {
            return Err(RepError::FieldMismatch { expected: self.field, found: other.field });
        }
        Ok(())
    }

    /// `⊕ parts`, with each space's basis the concatenation in order.
    pub fn direct_sum(category: &Arc<FiniteCategory>, field: FieldSpec, parts: &[Representation]) -> Result<Self, RepError> {
        let mut sum = Representation::zero(Arc::clone(category), field);
        for p in parts {
            sum.check_compatible(p)?;
            let dims: Vec<usize> = sum.dims.iter().zip(&p.dims).map(|(a, b)| a + b).collect();
            let action = category
                .morphisms()
                .map(|m| {
                    let (a, b) = (&sum.action[m.0], &p.action[m.0]);
                    let mut out = ExactMatrix::zeros(field, a.rows() + b.rows(), a.cols() + b.cols());
                    out.set_block(0, 0, a);
                    out.set_block(a.rows(), a.cols(), b);
                    out
                })
                .collect();
            sum = Representation { category: Arc::clone(category), field, dims, action };
        }
        Ok(sum)
    }

    fn check_stable(&self, subs: &[Subspace]) -> Result<(), RepError> {
        if subs.len() != self.dims.len() || subs.iter().zip(&self.dims).any(|(s, &d)| s.ambient_dim() != d) {
            return Err(RepError::ShapeError("one subspace per object of the right ambient dimension".into()));
        }
        let c = &self.category;
        for m in c.morphisms() {
            if !subs[c.cod(m).0].contains(&(&self.action[m.0] * &subs[c.dom(m).0].basis())) {
                return Err(RepError::NotASubrepresentation);
            }
        }
        Ok(())
    }

    /// The subfunctor with the given objectwise subspaces, in their canonical bases.
    pub fn subrepresentation(&self, subs: &[Subspace]) -> Result<Self, RepError> {
        self.check_stable(subs)?;
        let c = &self.category;
        let bases: Vec<ExactMatrix> = subs.iter().map(Subspace::basis).collect();
        let action = c
            .morphisms()
            .map(|m| {
                let image = &self.action[m.0] * &bases[c.dom(m).0];
                bases[c.cod(m).0]
                    .solve(&image)
                    .expect("shapes agree")
                    .expect("subspace is stable")
            })
            .collect();
        Ok(Representation::new_unchecked(
            Arc::clone(c),
            self.field,
            subs.iter().map(Subspace::dim).collect(),
            action,
        ))
    }

    /// The quotient functor, with bases the complement coordinates of each subspace.
    pub fn quotient(&self, subs: &[Subspace]) -> Result<Self, RepError> {
        self.check_stable(subs)?;
        let c = &self.category;
        let action = c
            .morphisms()
            .map(|m| &(&subs[c.cod(m).0].quotient_map() * &self.action[m.0]) * &subs[c.dom(m).0].lift_map())
            .collect();
        Ok(Representation::new_unchecked(
            Arc::clone(c),
            self.field,
            subs.iter().map(Subspace::codim).collect(),
            action,
        ))
    }

    /// Objectwise span of `M(β)·v` over all generators `(x, v)` and all `β` out of `x`.
    pub fn spin(&self, generators: &[(ObjId, ExactMatrix)]) -> Vec<Subspace> {
        let c = &self.category;
        c.objects()
            .map(|y| {
                let cols: Vec<ExactMatrix> = generators
                    .iter()
                    .flat_map(|(x, v)| c.hom(*x, y).iter().map(move |&b| &self.action[b.0] * v))
                    .collect();
                Subspace::from_columns(&ExactMatrix::hconcat(self.field, self.dims[y.0], &cols))
            })
            .collect()
    }

    /// File form; identities and zero-sided matrices are omitted.
    pub fn to_spec(&self) -> ModuleSpec {
        let c = &self.category;
        ModuleSpec {
            field: self.field,
            spaces: OrderedMap(c.objects().map(|x| (c.object_name(x).to_string(), self.dims[x.0])).collect()),
            action: OrderedMap(
                c.morphisms()
                    .filter(|&m| !c.is_identity(m) && self.action[m.0].rows() > 0 && self.action[m.0].cols() > 0)
                    .map(|m| (c.morphism_name(m).to_string(), matrix_to_json(&self.action[m.0])))
                    .collect(),
            ),
        }
    }
}

/// Builds and validates a representation from its file form.
pub fn validate_rep(c: &Arc<FiniteCategory>, field: FieldSpec, spec: &ModuleSpec) -> Result<Representation, RepError> {
    if spec.field != field {
        return Err(RepError::FieldMismatch { expected: field, found: spec.field });
    }
    let mut dims = vec![0; c.num_objects()];
    for (name, d) in &spec.spaces.0 {
        let x = c.object_id(name).ok_or_else(|| RepError::UnknownObject(name.clone()))?;
        dims[x.0] = *d;
    }
    for (name, _) in &spec.action.0 {
        c.morphism_id(name).ok_or_else(|| RepError::UnknownMorphism(name.clone()))?;
    }
    let action = c
        .morphisms()
        .map(|m| {
            let (rows, cols) = (dims[c.cod(m).0], dims[c.dom(m).0]);
            match spec.action.get(c.morphism_name(m)) {
                Some(json) => matrix_from_json(field, rows, cols, json).map_err(|e| match e {
                    LinalgError::ShapeError(s) => RepError::ShapeError(format!("{}: {s}", c.morphism_name(m))),
                    other => other.into(),
                }),
                None if c.is_identity(m) => Ok(ExactMatrix::identity(field, rows)),
                None if rows == 0 || cols == 0 => Ok(ExactMatrix::zeros(field, rows, cols)),
                None => Err(RepError::MissingAction(c.morphism_name(m).to_string())),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Representation::new(Arc::clone(c), field, dims, action)
}

/// `kC·1_x`: at `y` the space `k[Hom(x, y)]`, morphisms acting by postcomposition.
pub fn representable(c: &Arc<FiniteCategory>, field: FieldSpec, x: ObjId) -> Result<Representation, RepError> {
    if x.0 >= c.num_objects() {
        return Err(RepError::UnknownObject(format!("#{}", x.0)));
    }
    let dims: Vec<usize> = c.objects().map(|y| c.hom(x, y).len()).collect();
    let action = c
        .morphisms()
        .map(|a| {
            let (src, dst) = (c.hom(x, c.dom(a)), c.hom(x, c.cod(a)));
            let mut m = ExactMatrix::zeros(field, dst.len(), src.len());
            for (j, &b) in src.iter().enumerate() {
                let ab = c.compose(a, b).unwrap();
                let i = dst.iter().position(|&d| d == ab).unwrap();
                m.set(i, j, field.one()).unwrap();
            }
            m
        })
        .collect();
    Ok(Representation::new_unchecked(Arc::clone(c), field, dims, action))
}

/// The left regular module `kC`: at `y`, the morphisms with codomain `y`.
pub fn regular_representation(c: &Arc<FiniteCategory>, field: FieldSpec) -> Representation {
    let into: Vec<Vec<MorId>> = c.objects().map(|y| c.morphisms().filter(|&m| c.cod(m) == y).collect()).collect();
    let action = c
        .morphisms()
        .map(|a| {
            let (src, dst) = (&into[c.dom(a).0], &into[c.cod(a).0]);
            let mut m = ExactMatrix::zeros(field, dst.len(), src.len());
            for (j, &b) in src.iter().enumerate() {
                let ab = c.compose(a, b).unwrap();
                m.set(dst.iter().position(|&d| d == ab).unwrap(), j, field.one()).unwrap();
            }
            m
        })
        .collect();
    Representation::new_unchecked(Arc::clone(c), field, into.iter().map(Vec::len).collect(), action)
}

/// The map `kC·1_x -> M` sending `1_x` to `v ∈ M(x)`.
pub fn yoneda_map(m: &Representation, x: ObjId, v: &ExactMatrix) -> NatTrans {
    let c = m.category();
    NatTrans {
        components: c
            .objects()
            .map(|y| {
                let cols: Vec<ExactMatrix> = c.hom(x, y).iter().map(|&b| m.action(b) * v).collect();
                ExactMatrix::hconcat(m.field(), m.dim(y), &cols)
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportAnalysis {
    pub support: Vec<ObjId>,
    pub minimal_objects: Vec<ObjId>,
    pub cm_objects: Vec<ObjId>,
}

/// Support, `M`-minimal objects, and the objects of `C_M`.
pub fn support_analysis(m: &Representation) -> SupportAnalysis {
    let c = m.category();
    let order = c.order();
    let support: Vec<ObjId> = c.objects().filter(|&x| m.dim(x) > 0).collect();
    let minimal_objects: Vec<ObjId> = support
        .iter()
        .copied()
        .filter(|&x| {
            support
                .iter()
                .all(|&y| order.isomorphic(x, y) || !order.leq(y, x))
        })
        .collect();
    let cm_objects = c
        .objects()
        .filter(|&y| minimal_objects.iter().any(|&x| order.leq(x, y)))
        .collect();
    SupportAnalysis { support, minimal_objects, cm_objects }
}
