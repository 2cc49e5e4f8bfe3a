//! Covers by representables, syzygies, projectivity, and projective
//! dimension. A module of finite projective dimension has it at most
//! `ℓ(C)`, so resolutions are cut off there: if no syzygy up to `Ω^ℓ` is
//! projective the dimension is infinite.

mod probe;
mod support;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{aut_invertibility, build_algebra, radical_with_budget, AlgebraError, AutInfo, DEFAULT_BUDGET};
use crate::category::{FiniteCategory, ObjId};
use crate::exactla::{ExactMatrix, FieldSpec, Subspace};
use crate::io::matrix_to_json;
use crate::rep::{representable, yoneda_map, NatTrans, RepError, Representation};

pub use probe::{findim_probe, random_module, ProbeOptions, ProbeReport};
pub use support::{support_report_with, verify_support_report, MinimalObjectFinding, SupportReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("the zero module has no cover")]
    ZeroModule,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// How generators of a cover are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Strategy {
    /// lifts of a basis of `M/JM`
    MinimalGenerators,
    /// every basis vector of every `M(x)`
    FullGenerators,
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" | "minimal" => Ok(Strategy::MinimalGenerators),
            "full" => Ok(Strategy::FullGenerators),
            _ => Err(format!("unknown strategy {s:?}, expected min or full")),
        }
    }
}

/// An epimorphism `⊕ kC·1_{x_k} -> M` sending the k-th generator `1_{x_k}` to `v_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cover {
    pub module: Representation,
    pub generators: Vec<(ObjId, ExactMatrix)>,
    pub epi: NatTrans,
}

/// One step `0 -> Ω^{i+1} -> P_i -> Ω^i -> 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionStep {
    pub cover: Cover,
    pub syzygy: Representation,
    /// per object, the columns spanning `Ω^{i+1}(x)` inside `P_i(x)`
    pub inclusion: Vec<ExactMatrix>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Resolution {
    pub target: Representation,
    pub steps: Vec<ResolutionStep>,
    pub strategy: Strategy,
    /// set when the resolution was cut off at `ℓ(C)` without a projective syzygy
    pub truncated_at: Option<usize>,
}

impl Resolution {
    /// `Ω^n`, with `Ω^0` the target.
    pub fn syzygy(&self, n: usize) -> &Representation {
        if n == 0 {
            &self.target
        } else {
            &self.steps[n - 1].syzygy
        }
    }

    pub fn to_json(&self) -> Value {
        let c = self.target.category();
        let steps: Vec<Value> = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let epi: serde_json::Map<String, Value> = c
                    .objects()
                    .map(|x| (c.object_name(x).to_string(), json!(matrix_to_json(&s.cover.epi.components[x.0]))))
                    .collect();
                json!({
                    "step": i,
                    "cover_generators": s.cover.generators.iter().map(|(x, _)| c.object_name(*x)).collect::<Vec<_>>(),
                    "cover_dims": s.cover.module.dims(),
                    "epi": epi,
                    "syzygy_dims": s.syzygy.dims(),
                })
            })
            .collect();
        json!({
            "target_dims": self.target.dims(),
            "strategy": self.strategy,
            "truncated_at": self.truncated_at,
            "steps": steps,
        })
    }
}

/// A projective dimension, or the absence of one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PdValue {
    Finite(usize),
    Infinite,
    ZeroModule,
}

impl fmt::Display for PdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdValue::Finite(n) => write!(f, "{n}"),
            PdValue::Infinite => f.write_str("inf"),
            PdValue::ZeroModule => f.write_str("zero"),
        }
    }
}

impl Serialize for PdValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PdValue::Finite(n) => s.serialize_u64(*n as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PdVerdict {
    pub value: PdValue,
    pub chain_length: usize,
    pub witness: Resolution,
}

/// Computes covers and resolutions for modules over one category and field.
/// The radical, needed by [`Strategy::MinimalGenerators`], is computed once.
pub struct Resolver {
    category: Arc<FiniteCategory>,
    field: FieldSpec,
    strategy: Strategy,
    budget: u64,
    shuffle: Option<u64>,
    representables: Vec<Representation>,
    radical: OnceLock<Result<ExactMatrix, AlgebraError>>,
}

impl Resolver {
    pub fn new(category: &Arc<FiniteCategory>, field: FieldSpec) -> Self {
        let representables = category
            .objects()
            .map(|x| representable(category, field, x).expect("object exists"))
            .collect();
        Resolver {
            category: Arc::clone(category),
            field,
            strategy: Strategy::MinimalGenerators,
            budget: DEFAULT_BUDGET,
            shuffle: None,
            representables,
            radical: OnceLock::new(),
        }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self.radical = OnceLock::new();
        self
    }

    /// Permutes the generators of every cover, seeded per step.
    pub fn with_shuffle(mut self, seed: u64) -> Self {
        self.shuffle = Some(seed);
        self
    }

    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    fn radical_basis(&self) -> Result<&ExactMatrix, HomologyError> {
        self.radical
            .get_or_init(|| {
                let a = build_algebra(&self.category, self.field);
                radical_with_budget(&a, self.budget).map(|j| j.basis())
            })
            .as_ref()
            .map_err(|e| e.clone().into())
    }

    fn check(&self, m: &Representation) -> Result<(), HomologyError> {
        m.check_compatible(&self.representables[0])?;
        Ok(())
    }

    /// `J·M` at every object.
    pub fn radical_layer(&self, m: &Representation) -> Result<Vec<Subspace>, HomologyError> {
        self.check(m)?;
        let j = self.radical_basis()?;
        let c = &self.category;
        Ok(c.objects()
            .map(|y| {
                let mut cols = Vec::new();
                for a in 0..j.cols() {
                    for x in c.objects() {
                        if m.dim(x) == 0 {
                            continue;
                        }
                        let mut acc = ExactMatrix::zeros(self.field, m.dim(y), m.dim(x));
                        for &alpha in c.hom(x, y) {
                            let coeff = j.get(alpha.0, a);
                            if !coeff.is_zero() {
                                acc = &acc + &m.action(alpha).scale(&coeff);
                            }
                        }
                        cols.push(acc);
                    }
                }
                Subspace::from_columns(&ExactMatrix::hconcat(self.field, m.dim(y), &cols))
            })
            .collect())
    }

    fn generators(&self, m: &Representation, step: usize) -> Result<Vec<(ObjId, ExactMatrix)>, HomologyError> {
        let c = &self.category;
        let unit = |d: usize, i: usize| {
            let mut v = ExactMatrix::zeros(self.field, d, 1);
            v.set(i, 0, self.field.one()).unwrap();
            v
        };
        let mut gens: Vec<(ObjId, ExactMatrix)> = match self.strategy {
            Strategy::FullGenerators => {
                c.objects().flat_map(|x| (0..m.dim(x)).map(move |i| (x, unit(m.dim(x), i)))).collect()
            }
            Strategy::MinimalGenerators => {
                let layer = self.radical_layer(m)?;
                // first standard basis vectors independent modulo J·M
                let mut gens = Vec::new();
                for x in c.objects() {
                    let mut span = layer[x.0].clone();
                    for i in 0..m.dim(x) {
                        let e = unit(m.dim(x), i);
                        if !span.contains(&e) {
                            span = span.sum(&Subspace::from_columns(&e));
                            gens.push((x, e));
                        }
                    }
                }
                gens
            }
        };
        if let Some(seed) = self.shuffle {
            gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(step as u64)));
        }
        Ok(gens)
    }

    /// Basis vectors chosen greedily until, together with `J·M`, they
    /// generate `M` as a module. Usually far fewer than a basis of `M/JM`.
    fn module_generators(&self, m: &Representation) -> Result<Vec<(ObjId, ExactMatrix)>, HomologyError> {
        let mut spanned = self.radical_layer(m)?;
        let mut gens = Vec::new();
        for x in self.category.objects() {
            for i in 0..m.dim(x) {
                let mut e = ExactMatrix::zeros(self.field, m.dim(x), 1);
                e.set(i, 0, self.field.one()).unwrap();
                if spanned[x.0].contains(&e) {
                    continue;
                }
                let generated = m.spin(&[(x, e.clone())]);
                spanned = spanned.iter().zip(&generated).map(|(a, b)| a.sum(b)).collect();
                gens.push((x, e));
            }
        }
        Ok(gens)
    }

    fn cover_at_step(&self, m: &Representation, step: usize) -> Result<Cover, HomologyError> {
        self.check(m)?;
        if m.is_zero() {
            return Err(HomologyError::ZeroModule);
        }
        let generators = self.generators(m, step)?;
        self.cover_from(m, generators)
    }

    fn cover_from(&self, m: &Representation, generators: Vec<(ObjId, ExactMatrix)>) -> Result<Cover, HomologyError> {
        let parts: Vec<Representation> = generators.iter().map(|(x, _)| self.representables[x.0].clone()).collect();
        let module = Representation::direct_sum(&self.category, self.field, &parts)?;
        let maps: Vec<NatTrans> = generators.iter().map(|(x, v)| yoneda_map(m, *x, v)).collect();
        let components: Vec<ExactMatrix> = self
            .category
            .objects()
            .map(|y| {
                let blocks: Vec<ExactMatrix> = maps.iter().map(|t| t.components[y.0].clone()).collect();
                ExactMatrix::hconcat(self.field, m.dim(y), &blocks)
            })
            .collect();
        for y in self.category.objects() {
            if components[y.0].rank() != m.dim(y) {
                return Err(HomologyError::Invariant(format!(
                    "cover is not surjective at {}",
                    self.category.object_name(y)
                )));
            }
        }
        Ok(Cover { module, generators, epi: NatTrans { components } })
    }

    pub fn cover(&self, m: &Representation) -> Result<Cover, HomologyError> {
        self.cover_at_step(m, 0)
    }

    /// The kernel of the cover epi, objectwise.
    fn kernel_spaces(&self, cover: &Cover, m: &Representation) -> Result<Vec<Subspace>, HomologyError> {
        let subs: Vec<Subspace> = cover.epi.components.iter().map(|e| Subspace::from_columns(&e.kernel_basis())).collect();
        for y in self.category.objects() {
            if subs[y.0].dim() + m.dim(y) != cover.module.dim(y) {
                return Err(HomologyError::Invariant("rank-nullity fails on a syzygy".into()));
            }
        }
        Ok(subs)
    }

    fn kernel(&self, cover: &Cover, subs: &[Subspace]) -> Result<(Representation, Vec<ExactMatrix>), HomologyError> {
        let syzygy = cover.module.subrepresentation(subs)?;
        Ok((syzygy, subs.iter().map(Subspace::basis).collect()))
    }

    /// Covers `m` and decides whether the cover splits.
    fn step(&self, m: &Representation, n: usize) -> Result<(Cover, Vec<Subspace>, bool), HomologyError> {
        let cover = self.cover_at_step(m, n)?;
        let subs = self.kernel_spaces(&cover, m)?;
        let inclusion: Vec<ExactMatrix> = subs.iter().map(Subspace::basis).collect();
        let splits = cover_splits(m, &cover, &inclusion)?;
        Ok((cover, subs, splits))
    }

    pub fn syzygy(&self, m: &Representation) -> Result<Representation, HomologyError> {
        let cover = self.cover(m)?;
        let subs = self.kernel_spaces(&cover, m)?;
        Ok(self.kernel(&cover, &subs)?.0)
    }

    /// Split test: `M` is projective iff its cover epi has a section.
    pub fn is_projective(&self, m: &Representation) -> Result<bool, HomologyError> {
        if m.is_zero() {
            return Ok(true);
        }
        Ok(self.step(m, 0)?.2)
    }

    pub fn proj_dim(&self, m: &Representation) -> Result<PdVerdict, HomologyError> {
        self.check(m)?;
        let ell = self.category.chain_length();
        let mut witness = Resolution { target: m.clone(), steps: Vec::new(), strategy: self.strategy, truncated_at: None };
        if m.is_zero() {
            return Ok(PdVerdict { value: PdValue::ZeroModule, chain_length: ell, witness });
        }
        let mut current = m.clone();
        for n in 0..=ell {
            let (cover, subs, splits) = self.step(&current, n)?;
            if splits {
                return Ok(PdVerdict { value: PdValue::Finite(n), chain_length: ell, witness });
            }
            if n == ell {
                break;
            }
            let (syzygy, inclusion) = self.kernel(&cover, &subs)?;
            witness.steps.push(ResolutionStep { cover, syzygy: syzygy.clone(), inclusion });
            current = syzygy;
        }
        witness.truncated_at = Some(ell);
        Ok(PdVerdict { value: PdValue::Infinite, chain_length: ell, witness })
    }

    /// Resolves a module past the cutoff. Returns the first `n > ℓ` with
    /// `Ω^n` projective among the next `extra` syzygies, which would
    /// contradict an infinite verdict. Projectivity of a syzygy does not
    /// depend on the cover, so the leanest covers available are used here.
    pub fn projective_beyond_cutoff(&self, verdict: &PdVerdict, extra: usize) -> Result<Option<usize>, HomologyError> {
        if verdict.value != PdValue::Infinite {
            return Ok(None);
        }
        let ell = verdict.chain_length;
        let mut current = verdict.witness.syzygy(ell).clone();
        for k in 1..=extra {
            let cover = self.cover_from(&current, self.module_generators(&current)?)?;
            let subs = self.kernel_spaces(&cover, &current)?;
            current = self.kernel(&cover, &subs)?.0;
            if current.is_zero() {
                return Ok(Some(ell + k));
            }
            let lean = self.cover_from(&current, self.module_generators(&current)?)?;
            let inclusion: Vec<ExactMatrix> =
                self.kernel_spaces(&lean, &current)?.iter().map(Subspace::basis).collect();
            if cover_splits(&current, &lean, &inclusion)? {
                return Ok(Some(ell + k));
            }
        }
        Ok(None)
    }

    /// Resolution steps up to `max_steps`, stopping early at a projective syzygy.
    pub fn resolve(&self, m: &Representation, max_steps: usize) -> Result<Resolution, HomologyError> {
        self.check(m)?;
        let mut res = Resolution { target: m.clone(), steps: Vec::new(), strategy: self.strategy, truncated_at: None };
        let mut current = m.clone();
        for n in 0..max_steps {
            if current.is_zero() {
                break;
            }
            let (cover, subs, splits) = self.step(&current, n)?;
            if splits {
                break;
            }
            let (syzygy, inclusion) = self.kernel(&cover, &subs)?;
            res.steps.push(ResolutionStep { cover, syzygy: syzygy.clone(), inclusion });
            current = syzygy;
        }
        if !current.is_zero() && !self.is_projective(&current)? {
            res.truncated_at = Some(res.steps.len());
        }
        Ok(res)
    }
}

/// `π: P -> M` splits iff some `ψ: P -> P` has `ψ∘ι = 0` and `π∘ψ = π`,
/// with `ι` the inclusion of the kernel `K`; then `ψ = s∘π` for a section `s`.
/// By Yoneda, `ψ` is fixed by the images `w_k ∈ P(x_k)` of the generators,
/// and `ψ∘ι = 0` need only hold on generators of `K`.
fn cover_splits(m: &Representation, cover: &Cover, inclusion: &[ExactMatrix]) -> Result<bool, HomologyError> {
    let c = m.category();
    let field = m.field();
    let p = &cover.module;
    let mut offsets = Vec::with_capacity(cover.generators.len());
    let mut unknowns = 0;
    for (x, _) in &cover.generators {
        offsets.push(unknowns);
        unknowns += p.dim(*x);
    }

    let mut spanned: Vec<Subspace> = c.objects().map(|y| Subspace::zero(field, p.dim(y))).collect();
    let mut kernel_gens: Vec<(ObjId, ExactMatrix)> = Vec::new();
    for y in c.objects() {
        let incl = &inclusion[y.0];
        for j in 0..incl.cols() {
            let col = incl.column(j);
            if spanned[y.0].contains(&col) {
                continue;
            }
            let generated = p.spin(&[(y, col.clone())]);
            spanned = spanned.iter().zip(&generated).map(|(a, b)| a.sum(b)).collect();
            kernel_gens.push((y, col));
        }
    }

    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (y, u) in &kernel_gens {
        // ψ_y(u) = Σ_k Σ_{β: x_k -> y} u_{k,β} P(β) w_k
        let mut eq = ExactMatrix::zeros(field, p.dim(*y), unknowns);
        let mut summand = 0;
        for (k, (x, _)) in cover.generators.iter().enumerate() {
            let hom = c.hom(*x, *y);
            let mut block = ExactMatrix::zeros(field, p.dim(*y), p.dim(*x));
            for (i, &beta) in hom.iter().enumerate() {
                let coeff = u.get(summand + i, 0);
                if !coeff.is_zero() {
                    block = &block + &p.action(beta).scale(&coeff);
                }
            }
            eq.set_block(0, offsets[k], &block);
            summand += hom.len();
        }
        rows.push(eq);
        rhs.push(ExactMatrix::zeros(field, p.dim(*y), 1));
    }
    for (k, (x, v)) in cover.generators.iter().enumerate() {
        let mut eq = ExactMatrix::zeros(field, m.dim(*x), unknowns);
        eq.set_block(0, offsets[k], &cover.epi.components[x.0]);
        rows.push(eq);
        rhs.push(v.clone());
    }
    let system = ExactMatrix::vconcat(field, unknowns, &rows);
    let target = ExactMatrix::vconcat(field, 1, &rhs);
    Ok(system.solve(&target).map_err(RepError::from)?.is_some())
}

pub fn canonical_cover(m: &Representation, strategy: Strategy) -> Result<Cover, HomologyError> {
    Resolver::new(m.category(), m.field()).with_strategy(strategy).cover(m)
}

pub fn syzygy(m: &Representation, strategy: Strategy) -> Result<Representation, HomologyError> {
    Resolver::new(m.category(), m.field()).with_strategy(strategy).syzygy(m)
}

pub fn is_projective(m: &Representation) -> bool {
    Resolver::new(m.category(), m.field())
        .with_strategy(Strategy::FullGenerators)
        .is_projective(m)
        .expect("full covers need no radical")
}

pub fn proj_dim(m: &Representation, strategy: Strategy) -> Result<PdVerdict, HomologyError> {
    Resolver::new(m.category(), m.field()).with_strategy(strategy).proj_dim(m)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GlobalDim {
    pub value: PdValue,
    pub chain_length: usize,
    pub aut: Vec<AutInfo>,
    /// true when the value follows from some `|Aut(x)|` vanishing in the field
    pub by_criterion: bool,
}

/// Infinite exactly when some `|Aut(x)|` is zero in the field; otherwise the
/// projective dimension of `kC/J`. As a left module `kC/J` is the sum of the
/// tops `P_x/JP_x`, and isomorphic objects give isomorphic tops, so one top
/// per isomorphism class suffices.
pub fn global_dim(c: &Arc<FiniteCategory>, field: FieldSpec) -> Result<GlobalDim, HomologyError> {
    let aut = aut_invertibility(c, field);
    let chain_length = c.chain_length();
    if aut.iter().any(|a| !a.invertible) {
        return Ok(GlobalDim { value: PdValue::Infinite, chain_length, aut, by_criterion: true });
    }
    let resolver = Resolver::new(c, field);
    let mut value = PdValue::Finite(0);
    for x in c.objects().filter(|&x| c.order().representative(x) == x) {
        let p = &resolver.representables[x.0];
        let top = p.quotient(&resolver.radical_layer(p)?)?;
        value = value.max(resolver.proj_dim(&top)?.value);
    }
    Ok(GlobalDim { value, chain_length, aut, by_criterion: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::rep::build_simple;
    use crate::rep::tests::{example3, f2, paper_m};

    fn sx(c: &Arc<FiniteCategory>) -> Representation {
        build_simple(c, f2(), ObjId(0), &[ExactMatrix::identity(f2(), 1), ExactMatrix::identity(f2(), 1)], 1 << 20)
            .unwrap()
            .module
    }

    #[test]
    fn minimal_cover_of_paper_module() {
        let c = example3();
        let m = paper_m(&c);
        let cover = canonical_cover(&m, Strategy::MinimalGenerators).unwrap();
        assert_eq!(cover.generators.len(), 1);
        assert_eq!(cover.generators[0].0, ObjId(0));
        assert_eq!(cover.module.dims(), &[2, 1]);
        assert!(cover.epi.components[0].is_identity());
        let full = canonical_cover(&m, Strategy::FullGenerators).unwrap();
        assert_eq!(full.module.dims(), &[4, 2]);
    }

    #[test]
    fn radical_layer_of_paper_module() {
        let c = example3();
        let layer = Resolver::new(&c, f2()).radical_layer(&paper_m(&c)).unwrap();
        assert_eq!(layer[0], Subspace::from_columns(&ExactMatrix::from_i64(f2(), 2, 1, &[1, 1])));
    }

    #[test]
    fn syzygies() {
        let c = example3();
        assert_eq!(syzygy(&paper_m(&c), Strategy::MinimalGenerators).unwrap().dims(), &[0, 1]);
        assert_eq!(syzygy(&sx(&c), Strategy::MinimalGenerators).unwrap().dims(), &[1, 1]);
        let px = representable(&c, f2(), ObjId(0)).unwrap();
        assert!(syzygy(&px, Strategy::MinimalGenerators).unwrap().is_zero());
        let py = representable(&c, f2(), ObjId(1)).unwrap();
        let cover = canonical_cover(&py, Strategy::MinimalGenerators).unwrap();
        assert_eq!(cover.module, py);
        assert_eq!(
            canonical_cover(&Representation::zero(Arc::clone(&c), f2()), Strategy::FullGenerators),
            Err(HomologyError::ZeroModule)
        );
    }

    #[test]
    fn projectivity() {
        let c = example3();
        assert!(is_projective(&representable(&c, f2(), ObjId(0)).unwrap()));
        assert!(!is_projective(&paper_m(&c)));
        assert!(is_projective(&Representation::zero(Arc::clone(&c), f2())));
        assert!(!is_projective(&sx(&c)));
        let q = FieldSpec::Rationals;
        let g = Arc::new(builtin("c2").unwrap());
        let triv = build_simple(&g, q, ObjId(0), &[ExactMatrix::identity(q, 1), ExactMatrix::identity(q, 1)], 1);
        assert!(is_projective(&triv.unwrap().module));
    }

    #[test]
    fn projective_dimensions() {
        let c = example3();
        for s in [Strategy::MinimalGenerators, Strategy::FullGenerators] {
            assert_eq!(proj_dim(&paper_m(&c), s).unwrap().value, PdValue::Finite(1));
            assert_eq!(proj_dim(&representable(&c, f2(), ObjId(1)).unwrap(), s).unwrap().value, PdValue::Finite(0));
            let v = proj_dim(&sx(&c), s).unwrap();
            assert_eq!(v.value, PdValue::Infinite);
            assert_eq!(v.witness.truncated_at, Some(1));
            assert_eq!(v.witness.steps.len(), 1);
        }
        let z = proj_dim(&Representation::zero(Arc::clone(&c), f2()), Strategy::FullGenerators).unwrap();
        assert_eq!(z.value, PdValue::ZeroModule);
    }

    #[test]
    fn infinite_verdict_stays_infinite_past_cutoff() {
        let c = example3();
        let r = Resolver::new(&c, f2());
        let v = r.proj_dim(&sx(&c)).unwrap();
        assert_eq!(r.projective_beyond_cutoff(&v, 3).unwrap(), None);
    }

    #[test]
    fn global_dimensions() {
        let g = |name: &str, f: FieldSpec| global_dim(&Arc::new(builtin(name).unwrap()), f).unwrap().value;
        let q = FieldSpec::Rationals;
        assert_eq!(g("example3", f2()), PdValue::Infinite);
        assert_eq!(g("example3", q), PdValue::Finite(1));
        assert_eq!(g("s3", FieldSpec::prime(5).unwrap()), PdValue::Finite(0));
        assert_eq!(g("a2-path", q), PdValue::Finite(1));
        assert_eq!(g("chain3", q), PdValue::Finite(1));
        assert_eq!(g("square", q), PdValue::Finite(2));
        assert_eq!(g("kronecker-path", f2()), PdValue::Finite(1));
    }

    #[test]
    fn global_dimension_matches_whole_quotient() {
        use crate::algebra::semisimple_quotient_module;
        let q = FieldSpec::Rationals;
        for name in crate::builtins::BUILTIN_NAMES {
            let c = Arc::new(builtin(name).unwrap());
            let a = build_algebra(&c, q);
            let top = semisimple_quotient_module(&a, &radical_with_budget(&a, DEFAULT_BUDGET).unwrap()).unwrap();
            assert_eq!(global_dim(&c, q).unwrap().value, proj_dim(&top, Strategy::MinimalGenerators).unwrap().value, "{name}");
        }
    }

    #[test]
    fn resolve_reports_truncation() {
        let c = example3();
        let r = Resolver::new(&c, f2()).resolve(&sx(&c), 3).unwrap();
        assert_eq!(r.steps.len(), 3);
        assert_eq!(r.truncated_at, Some(3));
        let r = Resolver::new(&c, f2()).resolve(&paper_m(&c), 3).unwrap();
        assert_eq!((r.steps.len(), r.truncated_at), (1, None));
        assert_eq!(r.to_json()["steps"][0]["syzygy_dims"], json!([0, 1]));
    }

    #[test]
    fn pd_value_formats() {
        assert_eq!(serde_json::to_string(&PdValue::Finite(2)).unwrap(), "2");
        assert_eq!(serde_json::to_string(&PdValue::Infinite).unwrap(), "\"inf\"");
        assert_eq!(PdValue::ZeroModule.to_string(), "zero");
    }
}
