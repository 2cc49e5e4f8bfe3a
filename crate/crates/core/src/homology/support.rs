use serde::Serialize;

use super::{HomologyError, PdValue, Resolver, Strategy};
use crate::category::{full_subcategory, ObjId};
use crate::exactla::{ExactMatrix, Subspace};
use crate::rep::{restrict, support_analysis, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalObjectFinding {
    pub object: ObjId,
    pub name: String,
    /// the resolution evaluated at `x` is exact
    pub restricted_complex_exact: bool,
    /// every term of the evaluated resolution is a projective `kAut(x)`-module
    pub each_term_projective_over_aut: bool,
    /// `M(x)` is a projective `kAut(x)`-module
    pub value_projective_over_aut: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub verdict: PdValue,
    /// every cover is supported on `C_M`
    pub cover_support_ok: bool,
    pub minimal_object_findings: Vec<MinimalObjectFinding>,
}

impl SupportReport {
    pub fn all_true(&self) -> bool {
        self.cover_support_ok
            && self.minimal_object_findings.iter().all(|f| {
                f.restricted_complex_exact && f.each_term_projective_over_aut && f.value_projective_over_aut
            })
    }
}

/// Checks the support statements along the minimal-generator resolution,
/// cut off at `ℓ(C)`.
pub fn verify_support_report(m: &Representation) -> Result<SupportReport, HomologyError> {
    let resolver = Resolver::new(m.category(), m.field()).with_strategy(Strategy::MinimalGenerators);
    support_report_with(&resolver, m)
}

pub fn support_report_with(resolver: &Resolver, m: &Representation) -> Result<SupportReport, HomologyError> {
    if m.is_zero() {
        return Err(HomologyError::ZeroModule);
    }
    let c = m.category();
    let field = m.field();
    let verdict = resolver.proj_dim(m)?;
    let res = &verdict.witness;
    let analysis = support_analysis(m);

    // terms of the complex: the covers, then the final projective syzygy if finite
    let mut terms: Vec<&Representation> = res.steps.iter().map(|s| &s.cover.module).collect();
    let finite = matches!(verdict.value, PdValue::Finite(_));
    if finite {
        terms.push(res.syzygy(res.steps.len()));
    }
    let within = |r: &Representation| c.objects().all(|y| r.dim(y) == 0 || analysis.cm_objects.contains(&y));
    let cover_support_ok = terms.iter().all(|t| within(t));

    let mut findings = Vec::new();
    for &x in &analysis.minimal_objects {
        let at_x = full_subcategory(c, &[x]).map_err(|e| HomologyError::Invariant(e.to_string()))?;
        let local = Resolver::new(&at_x.category, field).with_strategy(Strategy::FullGenerators);
        let proj_at_x = |r: &Representation| -> Result<bool, HomologyError> {
            local.is_projective(&restrict(r, &at_x)?)
        };

        // differentials at x: P_0 -> M, P_i -> P_{i-1}, and Ω^n -> P_{n-1} when finite
        let mut maps: Vec<ExactMatrix> = Vec::new();
        for (i, step) in res.steps.iter().enumerate() {
            let epi = &step.cover.epi.components[x.0];
            maps.push(if i == 0 { epi.clone() } else { &res.steps[i - 1].inclusion[x.0] * epi });
        }
        if finite {
            if let Some(last) = res.steps.last() {
                maps.push(last.inclusion[x.0].clone());
            }
        }
        let mut exact = maps.first().is_none_or(|e| e.rank() == m.dim(x));
        for w in maps.windows(2) {
            let (d, next) = (&w[0], &w[1]);
            let kernel = Subspace::from_columns(&d.kernel_basis());
            exact &= (d * next).is_zero() && kernel.dim() == next.rank();
        }
        if finite {
            if let Some(last) = maps.last().filter(|_| !res.steps.is_empty()) {
                exact &= last.rank() == last.cols();
            }
        }

        let mut each_term = true;
        for t in &terms {
            each_term &= proj_at_x(t)?;
        }
        findings.push(MinimalObjectFinding {
            object: x,
            name: c.object_name(x).to_string(),
            restricted_complex_exact: exact,
            each_term_projective_over_aut: each_term,
            value_projective_over_aut: proj_at_x(m)?,
        });
    }
    Ok(SupportReport { verdict: verdict.value, cover_support_ok, minimal_object_findings: findings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::tests::{example3, f2, paper_m};
    use crate::rep::{build_simple, representable};

    #[test]
    fn paper_module_report() {
        let c = example3();
        let r = verify_support_report(&paper_m(&c)).unwrap();
        assert_eq!(r.verdict, PdValue::Finite(1));
        assert!(r.all_true(), "{r:?}");
        assert_eq!(r.minimal_object_findings.len(), 1);
    }

    #[test]
    fn simple_at_x_report() {
        let c = example3();
        let sx = build_simple(&c, f2(), ObjId(0), &[ExactMatrix::identity(f2(), 1), ExactMatrix::identity(f2(), 1)], 64)
            .unwrap()
            .module;
        let r = verify_support_report(&sx).unwrap();
        assert_eq!(r.verdict, PdValue::Infinite);
        assert!(r.cover_support_ok);
        assert!(!r.minimal_object_findings[0].value_projective_over_aut);
        assert!(r.minimal_object_findings[0].restricted_complex_exact);
    }

    #[test]
    fn projective_report() {
        let c = example3();
        for x in c.objects() {
            let r = verify_support_report(&representable(&c, f2(), x).unwrap()).unwrap();
            assert_eq!(r.verdict, PdValue::Finite(0));
            assert!(r.all_true());
        }
    }
}
