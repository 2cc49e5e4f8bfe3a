use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{HomologyError, PdValue, Resolver, Strategy};
use crate::category::{full_subcategory, FiniteCategory, ObjId};
use crate::exactla::{ExactMatrix, FieldSpec};
use crate::rep::{representable, restrict, support_analysis, Representation};

#[derive(Clone, Debug)]
pub struct ProbeOptions {
    pub samples: usize,
    pub max_dim: usize,
    pub seed: u64,
    /// syzygies taken past `ℓ(C)` after an infinite verdict, each of which must stay non-projective
    pub extra_steps: usize,
    pub strategy: Strategy,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions { samples: 200, max_dim: 6, seed: 0, extra_steps: 2, strategy: Strategy::MinimalGenerators }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub field: String,
    pub chain_length: usize,
    pub seed: u64,
    pub max_dim: usize,
    /// nonzero modules evaluated
    pub samples: usize,
    /// draws that produced the zero module and were skipped
    pub skipped_zero: usize,
    pub histogram: BTreeMap<String, usize>,
    /// largest finite projective dimension seen; a lower bound for the finitistic dimension
    pub max_finite_pd: Option<usize>,
    pub violations: Vec<String>,
}

/// A quotient `P/U` of a sum of up to three representables by the
/// subrepresentation generated by up to two random vectors.
fn sample_module(
    c: &Arc<FiniteCategory>,
    field: FieldSpec,
    representables: &[Representation],
    max_dim: usize,
    rng: &mut ChaCha8Rng,
) -> Representation {
    let count = rng.gen_range(1..=3);
    let mut parts: Vec<Representation> = Vec::new();
    let mut left = max_dim;
    for _ in 0..count {
        let fits: Vec<&Representation> = representables.iter().filter(|p| p.total_dim() <= left).collect();
        if fits.is_empty() {
            break;
        }
        let p = fits[rng.gen_range(0..fits.len())];
        left -= p.total_dim();
        parts.push(p.clone());
    }
    if parts.is_empty() {
        // nothing fits the bound: take a smallest representable
        parts.push(representables.iter().min_by_key(|p| p.total_dim()).unwrap().clone());
    }
    let sum = Representation::direct_sum(c, field, &parts).expect("same category and field");
    let nonzero: Vec<ObjId> = c.objects().filter(|&y| sum.dim(y) > 0).collect();
    let gens: Vec<(ObjId, ExactMatrix)> = (0..rng.gen_range(0..=2))
        .map(|_| {
            let y = nonzero[rng.gen_range(0..nonzero.len())];
            let mut v = ExactMatrix::zeros(field, sum.dim(y), 1);
            for i in 0..sum.dim(y) {
                let e = match field.order() {
                    Some(q) => rng.gen_range(0..q as i64),
                    None => rng.gen_range(-2..=2),
                };
                v.set(i, 0, field.from_int(e)).unwrap();
            }
            (y, v)
        })
        .collect();
    let sub = sum.spin(&gens);
    sum.quotient(&sub).expect("spun subspaces are stable")
}

/// One draw of the probe's sampler; may be the zero module.
pub fn random_module(c: &Arc<FiniteCategory>, field: FieldSpec, max_dim: usize, rng: &mut ChaCha8Rng) -> Representation {
    let representables: Vec<Representation> =
        c.objects().map(|x| representable(c, field, x).expect("object exists")).collect();
    sample_module(c, field, &representables, max_dim, rng)
}

struct Outcome {
    value: PdValue,
    violations: Vec<String>,
}

fn evaluate(resolver: &Resolver, m: &Representation, index: usize, extra: usize) -> Result<Outcome, HomologyError> {
    let verdict = resolver.proj_dim(m)?;
    let ell = verdict.chain_length;
    let mut violations = Vec::new();
    match verdict.value {
        PdValue::Finite(n) => {
            if n > ell {
                violations.push(format!("sample {index}: pd = {n} exceeds l(C) = {ell}"));
            }
            let c = m.category();
            for x in support_analysis(m).minimal_objects {
                let at_x = full_subcategory(c, &[x]).map_err(|e| HomologyError::Invariant(e.to_string()))?;
                let local = Resolver::new(&at_x.category, m.field()).with_strategy(Strategy::FullGenerators);
                if !local.is_projective(&restrict(m, &at_x)?)? {
                    violations.push(format!(
                        "sample {index}: finite pd but M({}) is not projective over kAut",
                        c.object_name(x)
                    ));
                }
            }
        }
        PdValue::Infinite => {
            if let Some(n) = resolver.projective_beyond_cutoff(&verdict, extra)? {
                violations.push(format!("sample {index}: syzygy {n} is projective, so pd = {n} > l(C) = {ell}"));
            }
        }
        PdValue::ZeroModule => {}
    }
    Ok(Outcome { value: verdict.value, violations })
}

/// Samples modules from a seeded generator, computes their projective
/// dimensions in parallel, and aggregates. The report is a function of the
/// inputs and the seed only.
pub fn findim_probe(c: &Arc<FiniteCategory>, field: FieldSpec, opts: &ProbeOptions) -> Result<ProbeReport, HomologyError> {
    let representables: Vec<Representation> =
        c.objects().map(|x| representable(c, field, x).expect("object exists")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut modules = Vec::with_capacity(opts.samples);
    let mut skipped_zero = 0;
    for _ in 0..opts.samples {
        let m = sample_module(c, field, &representables, opts.max_dim, &mut rng);
        if m.is_zero() {
            skipped_zero += 1;
        } else {
            modules.push(m);
        }
    }
    let resolver = Resolver::new(c, field).with_strategy(opts.strategy);
    let outcomes: Vec<Outcome> = modules
        .par_iter()
        .enumerate()
        .map(|(i, m)| evaluate(&resolver, m, i, opts.extra_steps))
        .collect::<Result<_, _>>()?;

    let mut histogram = BTreeMap::new();
    let mut max_finite_pd = None;
    let mut violations = Vec::new();
    for o in outcomes {
        *histogram.entry(o.value.to_string()).or_insert(0) += 1;
        if let PdValue::Finite(n) = o.value {
            max_finite_pd = max_finite_pd.max(Some(n));
        }
        violations.extend(o.violations);
    }
    Ok(ProbeReport {
        field: field.to_string(),
        chain_length: c.chain_length(),
        seed: opts.seed,
        max_dim: opts.max_dim,
        samples: modules.len(),
        skipped_zero,
        histogram,
        max_finite_pd,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;

    fn probe(name: &str, field: FieldSpec, samples: usize, seed: u64) -> ProbeReport {
        let c = Arc::new(builtin(name).unwrap());
        findim_probe(&c, field, &ProbeOptions { samples, seed, ..ProbeOptions::default() }).unwrap()
    }

    #[test]
    fn example3_reaches_one() {
        let r = probe("example3", FieldSpec::prime(2).unwrap(), 200, 7);
        assert_eq!(r.max_finite_pd, Some(1));
        assert!(r.violations.is_empty());
        assert_eq!(r.samples + r.skipped_zero, 200);
    }

    #[test]
    fn c2_over_f2_is_zero() {
        let r = probe("c2", FieldSpec::prime(2).unwrap(), 100, 1);
        assert_eq!(r.max_finite_pd, Some(0));
        assert!(r.histogram.contains_key("inf"));
    }

    #[test]
    fn deterministic() {
        let a = probe("a2-path", FieldSpec::Rationals, 40, 3);
        let b = probe("a2-path", FieldSpec::Rationals, 40, 3);
        assert_eq!(a, b);
        assert!(a.max_finite_pd <= Some(1));
    }
}
