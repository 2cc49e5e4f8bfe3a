//! Finite categories given by explicit composition tables.
//!
//! Composition is written `compose(g, f) = g ∘ f` and requires
//! `cod(f) = dom(g)`. Declaration order of objects and morphisms is the
//! canonical basis order for every matrix built downstream.

mod builders;
mod order;
mod spec;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

pub use builders::{build_group_category, build_path_category, build_poset_category};
pub use order::{analyze_order, OrderAnalysis};
pub use spec::{CategorySpec, GroupSpec, IdentityMap, MorphismSpec, PosetSpec, QuiverSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ObjId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MorId(pub usize);

/// One failed axiom, with the ids that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("identity law broken at {object:?} ({detail})")]
    IdentityLawBroken { object: String, detail: String },
    #[error("{g:?} ∘ {f:?} listed but cod({f}) != dom({g})")]
    NotComposable { g: String, f: String },
    #[error("{g:?} ∘ {f:?} listed twice with different results")]
    ConflictingComposite { g: String, f: String },
    #[error("{g:?} ∘ {f:?} = {h:?} lands in the wrong hom-set")]
    WrongHomSet { g: String, f: String, h: String },
    #[error("missing composite {g:?} ∘ {f:?}")]
    MissingComposite { g: String, f: String },
    #[error("composition not associative on ({h:?}, {g:?}, {f:?})")]
    NonAssociative { h: String, g: String, f: String },
    #[error("endomorphism {0:?} is not invertible")]
    NotEI(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("invalid category:\n{}", list(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("a full subcategory needs at least one object")]
    EmptySubcategory,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("relation is not antisymmetric: {0:?} <= {1:?} <= {0:?}")]
    NotAntisymmetric(String, String),
    #[error("quiver has an oriented cycle through arrows {0:?}")]
    HasOrientedCycle(Vec<String>),
    #[error("malformed builder input: {0}")]
    Malformed(String),
}

fn list(v: &[Violation]) -> String {
    v.iter().map(|e| format!("  - {e}")).collect::<Vec<_>>().join("\n")
}

impl CategoryError {
    pub fn violations(&self) -> &[Violation] {
        match self {
            CategoryError::Invalid(v) => v,
            _ => &[],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A validated finite EI category.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    /// `compose[g * n + f]`, `None` when not composable.
    compose: Vec<Option<MorId>>,
    /// `hom[x * n_obj + y]` lists `Hom(x, y)` in declaration order.
    hom: Vec<Vec<MorId>>,
    inverse: Vec<Option<MorId>>,
    order: OrderAnalysis,
}

impl fmt::Debug for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteCategory")
            .field("objects", &self.objects)
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

/// Checks every axiom and collects all violations.
pub fn validate_category(spec: &CategorySpec) -> Result<FiniteCategory, CategoryError> {
    let mut errs = Vec::new();

    let mut obj_index = HashMap::new();
    for (i, o) in spec.objects.iter().enumerate() {
        if obj_index.insert(o.as_str(), ObjId(i)).is_some() {
            errs.push(Violation::DuplicateId(o.clone()));
        }
    }
    let mut mor_index = HashMap::new();
    let mut morphisms = Vec::with_capacity(spec.morphisms.len());
    for (i, m) in spec.morphisms.iter().enumerate() {
        if mor_index.insert(m.id.as_str(), MorId(i)).is_some() {
            errs.push(Violation::DuplicateId(m.id.clone()));
        }
        let dom = obj_index.get(m.dom.as_str()).copied();
        let cod = obj_index.get(m.cod.as_str()).copied();
        for (name, found) in [(&m.dom, dom), (&m.cod, cod)] {
            if found.is_none() {
                errs.push(Violation::UnknownObject(name.clone()));
            }
        }
        morphisms.push(Morphism { name: m.id.clone(), dom: dom.unwrap_or(ObjId(0)), cod: cod.unwrap_or(ObjId(0)) });
    }

    let mut identities = vec![None; spec.objects.len()];
    for (o, m) in &spec.identities.0 {
        let Some(&x) = obj_index.get(o.as_str()) else {
            errs.push(Violation::UnknownObject(o.clone()));
            continue;
        };
        let Some(&id) = mor_index.get(m.as_str()) else {
            errs.push(Violation::UnknownMorphism(m.clone()));
            continue;
        };
        if identities[x.0].is_some() {
            errs.push(Violation::DuplicateId(o.clone()));
        }
        let mm = &morphisms[id.0];
        if mm.dom != x || mm.cod != x {
            errs.push(Violation::IdentityLawBroken {
                object: o.clone(),
                detail: format!("{m:?} is not an endomorphism of {o:?}"),
            });
        }
        identities[x.0] = Some(id);
    }
    for (i, id) in identities.iter().enumerate() {
        if id.is_none() {
            errs.push(Violation::IdentityLawBroken {
                object: spec.objects[i].clone(),
                detail: "no identity declared".into(),
            });
        }
    }
    if !errs.is_empty() {
        return Err(CategoryError::Invalid(errs));
    }
    let identities: Vec<MorId> = identities.into_iter().map(Option::unwrap).collect();
    let is_identity: Vec<bool> = {
        let mut v = vec![false; morphisms.len()];
        for id in &identities {
            v[id.0] = true;
        }
        v
    };

    let n = morphisms.len();
    let mut compose: Vec<Option<MorId>> = vec![None; n * n];
    for [g, f, h] in &spec.composition {
        let ids: Vec<Option<MorId>> = [g, f, h].iter().map(|s| mor_index.get(s.as_str()).copied()).collect();
        for (name, id) in [g, f, h].iter().zip(&ids) {
            if id.is_none() {
                errs.push(Violation::UnknownMorphism((*name).clone()));
            }
        }
        let (Some(gi), Some(fi), Some(hi)) = (ids[0], ids[1], ids[2]) else { continue };
        let (mg, mf, mh) = (&morphisms[gi.0], &morphisms[fi.0], &morphisms[hi.0]);
        if mf.cod != mg.dom {
            errs.push(Violation::NotComposable { g: g.clone(), f: f.clone() });
            continue;
        }
        if mh.dom != mf.dom || mh.cod != mg.cod {
            errs.push(Violation::WrongHomSet { g: g.clone(), f: f.clone(), h: h.clone() });
            continue;
        }
        if (is_identity[gi.0] && hi != fi) || (is_identity[fi.0] && hi != gi) {
            let object = &spec.objects[if is_identity[gi.0] { mg.dom.0 } else { mf.dom.0 }];
            errs.push(Violation::IdentityLawBroken {
                object: object.clone(),
                detail: format!("{g:?} ∘ {f:?} = {h:?}"),
            });
            continue;
        }
        let slot = &mut compose[gi.0 * n + fi.0];
        match slot {
            Some(prev) if *prev != hi => errs.push(Violation::ConflictingComposite { g: g.clone(), f: f.clone() }),
            _ => *slot = Some(hi),
        }
    }
    // implied identity compositions
    for (i, m) in morphisms.iter().enumerate() {
        let left = identities[m.cod.0];
        let right = identities[m.dom.0];
        compose[left.0 * n + i].get_or_insert(MorId(i));
        compose[i * n + right.0].get_or_insert(MorId(i));
    }
    for g in 0..n {
        for f in 0..n {
            if morphisms[f].cod == morphisms[g].dom && compose[g * n + f].is_none() {
                errs.push(Violation::MissingComposite {
                    g: morphisms[g].name.clone(),
                    f: morphisms[f].name.clone(),
                });
            }
        }
    }
    if !errs.is_empty() {
        return Err(CategoryError::Invalid(errs));
    }

    let n_obj = spec.objects.len();
    let mut hom = vec![Vec::new(); n_obj * n_obj];
    for (i, m) in morphisms.iter().enumerate() {
        hom[m.dom.0 * n_obj + m.cod.0].push(MorId(i));
    }
    // associativity: (h∘g)∘f = h∘(g∘f)
    for f in 0..n {
        for &g in &hom_from(&hom, n_obj, morphisms[f].cod) {
            let gf = compose[g.0 * n + f].unwrap();
            for &h in &hom_from(&hom, n_obj, morphisms[g.0].cod) {
                let hg = compose[h.0 * n + g.0].unwrap();
                if compose[hg.0 * n + f] != compose[h.0 * n + gf.0] {
                    errs.push(Violation::NonAssociative {
                        h: morphisms[h.0].name.clone(),
                        g: morphisms[g.0].name.clone(),
                        f: morphisms[f].name.clone(),
                    });
                }
            }
        }
    }
    // EI: every endomorphism has a two-sided inverse
    let mut inverse = vec![None; n];
    for (i, m) in morphisms.iter().enumerate() {
        for &j in &hom[m.cod.0 * n_obj + m.dom.0] {
            if compose[j.0 * n + i] == Some(identities[m.dom.0]) && compose[i * n + j.0] == Some(identities[m.cod.0]) {
                inverse[i] = Some(j);
                break;
            }
        }
        if m.dom == m.cod && inverse[i].is_none() {
            errs.push(Violation::NotEI(m.name.clone()));
        }
    }
    if !errs.is_empty() {
        return Err(CategoryError::Invalid(errs));
    }

    Ok(FiniteCategory::assemble(spec.objects.clone(), morphisms, identities, compose, hom, inverse))
}

fn hom_from(hom: &[Vec<MorId>], n_obj: usize, x: ObjId) -> Vec<MorId> {
    (0..n_obj).flat_map(|y| hom[x.0 * n_obj + y].iter().copied()).collect()
}

impl FiniteCategory {
    fn assemble(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        compose: Vec<Option<MorId>>,
        hom: Vec<Vec<MorId>>,
        inverse: Vec<Option<MorId>>,
    ) -> Self {
        let n_obj = objects.len();
        let nonempty: Vec<bool> = hom.iter().map(|h| !h.is_empty()).collect();
        let order = order::compute(n_obj, &nonempty);
        FiniteCategory { objects, morphisms, identities, compose, hom, inverse, order }
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = MorId> + '_ {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism(&self, m: MorId) -> &Morphism {
        &self.morphisms[m.0]
    }

    pub fn morphism_name(&self, m: MorId) -> &str {
        &self.morphisms[m.0].name
    }

    pub fn object_id(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn morphism_id(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name).map(MorId)
    }

    pub fn dom(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].dom
    }

    pub fn cod(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].cod
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identities[self.dom(m).0] == m
    }

    /// `g ∘ f`, or `None` when `cod(f) != dom(g)`.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.compose[g.0 * self.morphisms.len() + f.0]
    }

    /// `Hom(x, y)` in declaration order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.hom[x.0 * self.objects.len() + y.0]
    }

    /// `Aut(x) = End(x)`.
    pub fn aut(&self, x: ObjId) -> &[MorId] {
        self.hom(x, x)
    }

    pub fn inverse(&self, m: MorId) -> Option<MorId> {
        self.inverse[m.0]
    }

    pub fn is_isomorphism(&self, m: MorId) -> bool {
        self.inverse[m.0].is_some()
    }

    pub fn order(&self) -> &OrderAnalysis {
        &self.order
    }

    /// `ℓ(C)`: the longest strict chain in the order on isomorphism classes.
    pub fn chain_length(&self) -> usize {
        self.order.chain_length
    }

    fn check(&self, x: ObjId) -> Result<(), CategoryError> {
        if x.0 < self.objects.len() {
            Ok(())
        } else {
            Err(CategoryError::UnknownObject(format!("#{}", x.0)))
        }
    }

    /// Objects `y` with `Hom(y, x)` nonempty.
    pub fn below(&self, x: ObjId) -> Result<Vec<ObjId>, CategoryError> {
        self.check(x)?;
        Ok(self.objects().filter(|&y| !self.hom(y, x).is_empty()).collect())
    }

    /// Objects `y` with `Hom(x, y)` nonempty.
    pub fn above(&self, x: ObjId) -> Result<Vec<ObjId>, CategoryError> {
        self.check(x)?;
        Ok(self.objects().filter(|&y| !self.hom(x, y).is_empty()).collect())
    }

    /// Whether the full subcategory on `objs` is closed downwards.
    pub fn is_ideal(&self, objs: &[ObjId]) -> Result<bool, CategoryError> {
        for &x in objs {
            self.check(x)?;
        }
        for &x in objs {
            if !self.below(x)?.iter().all(|y| objs.contains(y)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The first declared morphism `x -> y` that is an isomorphism.
    pub fn first_iso(&self, x: ObjId, y: ObjId) -> Option<MorId> {
        self.hom(x, y).iter().copied().find(|&m| self.is_isomorphism(m))
    }

    /// The raw file form; identity compositions are left implied.
    pub fn to_spec(&self) -> CategorySpec {
        let mut composition = Vec::new();
        for g in self.morphisms() {
            for f in self.morphisms() {
                if self.is_identity(g) || self.is_identity(f) {
                    continue;
                }
                if let Some(h) = self.compose(g, f) {
                    composition.push([
                        self.morphism_name(g).to_string(),
                        self.morphism_name(f).to_string(),
                        self.morphism_name(h).to_string(),
                    ]);
                }
            }
        }
        CategorySpec {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| MorphismSpec {
                    id: m.name.clone(),
                    dom: self.objects[m.dom.0].clone(),
                    cod: self.objects[m.cod.0].clone(),
                })
                .collect(),
            identities: IdentityMap(
                self.objects()
                    .map(|x| (self.objects[x.0].clone(), self.morphism_name(self.identity(x)).to_string()))
                    .collect(),
            ),
            composition,
        }
    }
}

/// A full subcategory together with its embedding into the parent.
#[derive(Clone, Debug)]
pub struct FullSubcategory {
    pub parent: Arc<FiniteCategory>,
    pub category: Arc<FiniteCategory>,
    /// new object index -> parent object
    pub objects: Vec<ObjId>,
    /// new morphism index -> parent morphism
    pub morphisms: Vec<MorId>,
}

impl FullSubcategory {
    /// The subcategory object corresponding to a parent object, if included.
    pub fn local_object(&self, x: ObjId) -> Option<ObjId> {
        self.objects.iter().position(|&o| o == x).map(ObjId)
    }

    pub fn local_morphism(&self, m: MorId) -> Option<MorId> {
        self.morphisms.iter().position(|&o| o == m).map(MorId)
    }
}

/// All morphisms among `objs`, with inherited composition.
pub fn full_subcategory(c: &Arc<FiniteCategory>, objs: &[ObjId]) -> Result<FullSubcategory, CategoryError> {
    if objs.is_empty() {
        return Err(CategoryError::EmptySubcategory);
    }
    for &x in objs {
        c.check(x)?;
    }
    let objects: Vec<ObjId> = c.objects().filter(|x| objs.contains(x)).collect();
    let morphisms: Vec<MorId> = c
        .morphisms()
        .filter(|&m| objects.contains(&c.dom(m)) && objects.contains(&c.cod(m)))
        .collect();
    let local_obj = |x: ObjId| ObjId(objects.iter().position(|&o| o == x).unwrap());
    let mut local_mor = vec![usize::MAX; c.num_morphisms()];
    for (i, m) in morphisms.iter().enumerate() {
        local_mor[m.0] = i;
    }
    let n = morphisms.len();
    let new_morphisms: Vec<Morphism> = morphisms
        .iter()
        .map(|&m| Morphism { name: c.morphism_name(m).to_string(), dom: local_obj(c.dom(m)), cod: local_obj(c.cod(m)) })
        .collect();
    let identities = objects.iter().map(|&x| MorId(local_mor[c.identity(x).0])).collect();
    let mut compose = vec![None; n * n];
    for (gi, &g) in morphisms.iter().enumerate() {
        for (fi, &f) in morphisms.iter().enumerate() {
            if let Some(h) = c.compose(g, f) {
                compose[gi * n + fi] = Some(MorId(local_mor[h.0]));
            }
        }
    }
    let n_obj = objects.len();
    let mut hom = vec![Vec::new(); n_obj * n_obj];
    for (i, m) in new_morphisms.iter().enumerate() {
        hom[m.dom.0 * n_obj + m.cod.0].push(MorId(i));
    }
    let inverse = morphisms
        .iter()
        .map(|&m| c.inverse(m).map(|j| MorId(local_mor[j.0])))
        .collect();
    let names = objects.iter().map(|&x| c.object_name(x).to_string()).collect();
    let category = FiniteCategory::assemble(names, new_morphisms, identities, compose, hom, inverse);
    Ok(FullSubcategory { parent: Arc::clone(c), category: Arc::new(category), objects, morphisms })
}

/// Same category, compared by pointer first and structure second.
pub fn same_category(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example3_spec() -> CategorySpec {
        serde_json::from_str(
            r#"{ "objects": ["X","Y"],
                 "morphisms": [{"id":"1X","dom":"X","cod":"X"}, {"id":"g","dom":"X","cod":"X"},
                               {"id":"f","dom":"X","cod":"Y"}, {"id":"1Y","dom":"Y","cod":"Y"}],
                 "identities": {"X":"1X","Y":"1Y"},
                 "composition": [["g","g","1X"],["f","g","f"]] }"#,
        )
        .unwrap()
    }

    fn example3() -> Arc<FiniteCategory> {
        Arc::new(validate_category(&example3_spec()).unwrap())
    }

    #[test]
    fn example3_is_valid() {
        let c = example3();
        assert_eq!(c.num_objects(), 2);
        assert_eq!(c.num_morphisms(), 4);
        let g = c.morphism_id("g").unwrap();
        assert_eq!(c.compose(g, g), c.morphism_id("1X"));
        assert_eq!(c.inverse(g), Some(g));
        assert!(!c.is_isomorphism(c.morphism_id("f").unwrap()));
    }

    #[test]
    fn c2_group_table_is_valid() {
        let spec: CategorySpec = serde_json::from_str(
            r#"{"objects":["x"],"morphisms":[{"id":"e","dom":"x","cod":"x"},{"id":"s","dom":"x","cod":"x"}],
                "identities":{"x":"e"},"composition":[["s","s","e"]]}"#,
        )
        .unwrap();
        assert!(validate_category(&spec).is_ok());
    }

    #[test]
    fn idempotent_monoid_is_not_ei() {
        let spec: CategorySpec = serde_json::from_str(
            r#"{"objects":["x"],"morphisms":[{"id":"id","dom":"x","cod":"x"},{"id":"e","dom":"x","cod":"x"}],
                "identities":{"x":"id"},"composition":[["e","e","e"]]}"#,
        )
        .unwrap();
        let err = validate_category(&spec).unwrap_err();
        assert_eq!(err.violations(), &[Violation::NotEI("e".into())]);
    }

    #[test]
    fn missing_and_nonassociative_are_reported() {
        let mut spec = example3_spec();
        spec.composition.pop();
        let err = validate_category(&spec).unwrap_err();
        assert!(err.violations().contains(&Violation::MissingComposite { g: "f".into(), f: "g".into() }));

        // two-element monoid {1, a} with a∘a = 1 is fine; make a three-element
        // table where associativity fails: a∘a = b, b∘a = a, a∘b = 1, b∘b = b.
        let spec: CategorySpec = serde_json::from_str(
            r#"{"objects":["x"],"morphisms":[{"id":"1","dom":"x","cod":"x"},{"id":"a","dom":"x","cod":"x"},{"id":"b","dom":"x","cod":"x"}],
                "identities":{"x":"1"},
                "composition":[["a","a","b"],["b","a","a"],["a","b","1"],["b","b","b"]]}"#,
        )
        .unwrap();
        let err = validate_category(&spec).unwrap_err();
        assert!(err.violations().iter().any(|v| matches!(v, Violation::NonAssociative { .. })));
    }

    #[test]
    fn duplicate_and_unknown_ids() {
        let mut spec = example3_spec();
        spec.morphisms.push(MorphismSpec { id: "g".into(), dom: "X".into(), cod: "Z".into() });
        let err = validate_category(&spec).unwrap_err();
        assert!(err.violations().contains(&Violation::DuplicateId("g".into())));
        assert!(err.violations().contains(&Violation::UnknownObject("Z".into())));
    }

    #[test]
    fn wrong_identity_composite() {
        let mut spec = example3_spec();
        spec.composition.push(["1Y".into(), "f".into(), "1Y".into()]);
        let err = validate_category(&spec).unwrap_err();
        assert!(err.violations().iter().any(|v| matches!(v, Violation::WrongHomSet { .. })));
        let mut spec = example3_spec();
        spec.composition.push(["g".into(), "1X".into(), "1X".into()]);
        let err = validate_category(&spec).unwrap_err();
        assert!(err.violations().iter().any(|v| matches!(v, Violation::IdentityLawBroken { .. })));
    }

    #[test]
    fn subcategories_of_example3() {
        let c = example3();
        let x = c.object_id("X").unwrap();
        let y = c.object_id("Y").unwrap();
        let sx = full_subcategory(&c, &[x]).unwrap();
        assert_eq!(sx.category.num_morphisms(), 2);
        assert_eq!(sx.category.chain_length(), 0);
        let sy = full_subcategory(&c, &[y]).unwrap();
        assert_eq!(sy.category.num_morphisms(), 1);
        assert_eq!(full_subcategory(&c, &[]).unwrap_err(), CategoryError::EmptySubcategory);
        assert!(full_subcategory(&c, &[ObjId(7)]).is_err());
        assert_eq!(validate_category(&sx.category.to_spec()).unwrap(), *sx.category);
    }

    #[test]
    fn below_above_ideal() {
        let c = example3();
        let (x, y) = (ObjId(0), ObjId(1));
        assert_eq!(c.below(y).unwrap(), vec![x, y]);
        assert_eq!(c.below(x).unwrap(), vec![x]);
        assert_eq!(c.above(x).unwrap(), vec![x, y]);
        assert!(c.is_ideal(&[x]).unwrap());
        assert!(!c.is_ideal(&[y]).unwrap());
        assert!(c.is_ideal(&[x, y]).unwrap());
        assert!(c.below(ObjId(5)).is_err());
    }

    #[test]
    fn spec_roundtrip() {
        let c = example3();
        let json = serde_json::to_string(&c.to_spec()).unwrap();
        let back: CategorySpec = serde_json::from_str(&json).unwrap();
        assert_eq!(validate_category(&back).unwrap(), *c);
    }
}
