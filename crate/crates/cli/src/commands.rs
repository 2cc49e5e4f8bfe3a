use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use eica::algebra::{radical_with_budget, AlgebraError, DEFAULT_BUDGET};
use eica::builtins::{builtin, BUILTIN_NAMES};
use eica::homology::{HomologyError, Resolution};
use eica::io::{category_to_json, read_category, read_module_spec};
use eica::rep::validate_rep;
use eica::{
    aut_invertibility, build_algebra, findim_probe, global_dim, FieldSpec, FiniteCategory, PdValue, ProbeOptions,
    Representation, Resolver, Strategy,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "eica", version, about = "Exact homological computations for finite EI category algebras")]
pub struct Cli {
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a category file, and optionally a module over it
    Validate {
        /// Category file or builtin name
        category: String,
        module: Option<String>,
        #[arg(long)]
        field: Option<FieldSpec>,
    },
    /// Isomorphism classes, their order, the chain length and automorphism groups
    Info { category: String },
    /// The category algebra and its radical
    Algebra {
        category: String,
        #[arg(long)]
        field: FieldSpec,
        /// Cap on vectors enumerated by exhaustive radical searches
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Projective dimension of a module
    Pd {
        category: String,
        module: String,
        #[arg(long)]
        field: Option<FieldSpec>,
        /// Cover generators: min or full
        #[arg(long, default_value = "min")]
        strategy: Strategy,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Global dimension of the category algebra
    Gldim {
        category: String,
        #[arg(long)]
        field: FieldSpec,
    },
    /// A projective resolution, step by step
    Resolve {
        category: String,
        module: String,
        #[arg(long)]
        field: Option<FieldSpec>,
        #[arg(long, default_value = "min")]
        strategy: Strategy,
        /// Defaults to the chain length plus one
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Sample random modules and report their projective dimensions
    Probe {
        category: String,
        #[arg(long)]
        field: FieldSpec,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        #[arg(long, default_value = "min")]
        strategy: Strategy,
    },
    /// List the bundled categories or print one as a category file
    Builtin {
        #[arg(long, conflicts_with = "emit", required_unless_present = "emit")]
        list: bool,
        #[arg(long)]
        emit: Option<String>,
    },
}

pub const INPUT_ERROR: u8 = 1;
pub const INVARIANT_VIOLATION: u8 = 2;

#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

fn input_error(e: impl std::fmt::Display) -> CliError {
    CliError { code: INPUT_ERROR, message: e.to_string() }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        let code = match e {
            HomologyError::Algebra(_) | HomologyError::ZeroModule => INPUT_ERROR,
            HomologyError::Rep(_) | HomologyError::Invariant(_) => INVARIANT_VIOLATION,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        input_error(e)
    }
}

/// A path to a category file, or the name of a bundled category.
fn load_category(arg: &str) -> Result<Arc<FiniteCategory>, CliError> {
    if Path::new(arg).exists() {
        return read_category(arg).map(Arc::new).map_err(input_error);
    }
    builtin(arg).map(Arc::new).ok_or_else(|| {
        input_error(format!("{arg}: no such file and no builtin of that name (try `eica builtin --list`)"))
    })
}

/// Reads a module file; its field must agree with `--field` when given.
fn load_module(c: &Arc<FiniteCategory>, path: &str, field: Option<FieldSpec>) -> Result<Representation, CliError> {
    let spec = read_module_spec(path).map_err(input_error)?;
    if let Some(f) = field {
        if f != spec.field {
            return Err(input_error(format!("{path} is over {}, but --field is {f}", spec.field)));
        }
    }
    validate_rep(c, spec.field, &spec).map_err(|e| input_error(format!("{path}: {e}")))
}

fn dims(c: &FiniteCategory, m: &Representation) -> String {
    let parts: Vec<String> = c.objects().map(|x| format!("{}:{}", c.object_name(x), m.dim(x))).collect();
    format!("({})", parts.join(", "))
}

fn dims_json(c: &FiniteCategory, m: &Representation) -> Value {
    Value::Object(c.objects().map(|x| (c.object_name(x).to_string(), json!(m.dim(x)))).collect())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialise") + "\n"
}

fn ok(text: String) -> Result<Output, CliError> {
    Ok(Output { text, code: 0 })
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Validate { category, module, field } => validate(cli.json, category, module.as_deref(), *field),
        Command::Info { category } => info(cli.json, category),
        Command::Algebra { category, field, budget } => algebra(cli.json, category, *field, *budget),
        Command::Pd { category, module, field, strategy, budget } => {
            pd(cli.json, category, module, *field, *strategy, *budget)
        }
        Command::Gldim { category, field } => gldim(cli.json, category, *field),
        Command::Resolve { category, module, field, strategy, max_steps, budget } => {
            resolve(cli.json, category, module, *field, *strategy, *max_steps, *budget)
        }
        Command::Probe { category, field, samples, seed, max_dim, strategy } => {
            let opts = ProbeOptions {
                samples: *samples,
                seed: *seed,
                max_dim: *max_dim,
                strategy: *strategy,
                ..ProbeOptions::default()
            };
            probe(cli.json, category, *field, &opts)
        }
        Command::Builtin { list, emit } => builtin_cmd(cli.json, *list, emit.as_deref()),
    }
}

fn validate(as_json: bool, category: &str, module: Option<&str>, field: Option<FieldSpec>) -> Result<Output, CliError> {
    let c = load_category(category)?;
    let m = module.map(|path| load_module(&c, path, field)).transpose()?;
    if as_json {
        let mut v = json!({"valid": true, "objects": c.num_objects(), "morphisms": c.num_morphisms()});
        if let Some(m) = &m {
            v["module"] = json!({"field": m.field(), "dims": dims_json(&c, m)});
        }
        return ok(pretty(&v));
    }
    let mut text = format!("valid category: {} objects, {} morphisms\n", c.num_objects(), c.num_morphisms());
    if let Some(m) = &m {
        writeln!(text, "valid module over {}: {}", m.field(), dims(&c, m)).unwrap();
    }
    ok(text)
}

fn info(as_json: bool, category: &str) -> Result<Output, CliError> {
    let c = load_category(category)?;
    let order = c.order();
    let names = |objs: &[eica::ObjId]| objs.iter().map(|&x| c.object_name(x).to_string()).collect::<Vec<_>>();
    let classes: Vec<Vec<String>> = order.iso_classes.iter().map(|cls| names(cls)).collect();
    let class_name = |i: usize| format!("[{}]", classes[i].join(","));
    let auts: Vec<(String, usize)> = c.objects().map(|x| (c.object_name(x).to_string(), c.aut(x).len())).collect();
    if as_json {
        let v = json!({
            "objects": names(&c.objects().collect::<Vec<_>>()),
            "morphisms": c.morphisms().map(|m| c.morphism_name(m)).collect::<Vec<_>>(),
            "iso_classes": classes,
            "class_dag": order.class_dag,
            "chain_length": c.chain_length(),
            "aut_orders": Value::Object(auts.iter().map(|(k, n)| (k.clone(), json!(n))).collect()),
        });
        return ok(pretty(&v));
    }
    let mut text = String::new();
    writeln!(text, "objects: {}", c.num_objects()).unwrap();
    writeln!(text, "morphisms: {}", c.num_morphisms()).unwrap();
    let cls: Vec<String> = (0..classes.len()).map(class_name).collect();
    writeln!(text, "isomorphism classes: {}", cls.join(" ")).unwrap();
    let edges: Vec<String> = order.class_dag.iter().map(|&(a, b)| format!("{} -> {}", class_name(a), class_name(b))).collect();
    writeln!(text, "class order: {}", if edges.is_empty() { "none".to_string() } else { edges.join(", ") }).unwrap();
    writeln!(text, "ℓ(C) = {}", c.chain_length()).unwrap();
    for (name, n) in auts {
        writeln!(text, "|Aut({name})| = {n}").unwrap();
    }
    ok(text)
}

fn algebra(as_json: bool, category: &str, field: FieldSpec, budget: u64) -> Result<Output, CliError> {
    let c = load_category(category)?;
    let a = build_algebra(&c, field);
    let n = a.noniso_subspace();
    let j = radical_with_budget(&a, budget)?;
    let n_index = a.nilpotency_index(&n);
    let j_index = a.nilpotency_index(j.subspace());
    let aut = aut_invertibility(&c, field);
    if as_json {
        let v = json!({
            "field": field,
            "dim": a.dim(),
            "nonisomorphisms": a.noniso_ideal().len(),
            "noniso_nilpotency_index": n_index,
            "radical_dim": j.dim(),
            "radical_method": j.method,
            "radical_nilpotency_index": j_index,
            "semisimple_quotient_dim": a.dim() - j.dim(),
            "class_methods": j.class_methods.iter().map(|(x, m)| json!({"object": c.object_name(*x), "method": m})).collect::<Vec<_>>(),
            "aut": aut.iter().map(|i| json!({"object": c.object_name(i.object), "order": i.order, "invertible": i.invertible})).collect::<Vec<_>>(),
        });
        return ok(pretty(&v));
    }
    let index = |k: Option<usize>| k.map_or("not nilpotent".to_string(), |k| k.to_string());
    let mut text = String::new();
    writeln!(text, "kC over {field}: dimension {}", a.dim()).unwrap();
    writeln!(text, "non-isomorphisms: {} (nilpotency index {})", a.noniso_ideal().len(), index(n_index)).unwrap();
    writeln!(text, "radical J: dimension {} via {:?} (nilpotency index {})", j.dim(), j.method, index(j_index)).unwrap();
    writeln!(text, "kC/J: dimension {}", a.dim() - j.dim()).unwrap();
    for i in &aut {
        let unit = if i.invertible { "a unit" } else { "zero" };
        writeln!(text, "|Aut({})| = {} is {unit} in {field}", c.object_name(i.object), i.order).unwrap();
    }
    ok(text)
}

fn steps_text(c: &FiniteCategory, res: &Resolution) -> String {
    let mut text = String::new();
    for (i, s) in res.steps.iter().enumerate() {
        let gens: Vec<&str> = s.cover.generators.iter().map(|(x, _)| c.object_name(*x)).collect();
        writeln!(
            text,
            "  step {i}: cover {} from generators at [{}], syzygy {}",
            dims(c, &s.cover.module),
            gens.join(", "),
            dims(c, &s.syzygy)
        )
        .unwrap();
    }
    text
}

fn pd(
    as_json: bool,
    category: &str,
    module: &str,
    field: Option<FieldSpec>,
    strategy: Strategy,
    budget: u64,
) -> Result<Output, CliError> {
    let c = load_category(category)?;
    let m = load_module(&c, module, field)?;
    let resolver = Resolver::new(&c, m.field()).with_strategy(strategy).with_budget(budget);
    let v = resolver.proj_dim(&m)?;
    let ell = v.chain_length;
    if as_json {
        let out = json!({
            "value": v.value,
            "chain_length": ell,
            "field": m.field(),
            "strategy": strategy,
            "resolution": v.witness.to_json(),
        });
        return ok(pretty(&out));
    }
    let mut text = match v.value {
        PdValue::Finite(n) => format!("pd = {n}\nℓ(C) = {ell}\n"),
        PdValue::Infinite => format!(
            "pd = ∞ (no projective syzygy up to ℓ = {ell})\n\
             a finite projective dimension is at most ℓ(C) = {ell}, so the resolution stops there\n"
        ),
        PdValue::ZeroModule => format!("pd: zero module, nothing to resolve\nℓ(C) = {ell}\n"),
    };
    text.push_str(&steps_text(&c, &v.witness));
    ok(text)
}

fn gldim(as_json: bool, category: &str, field: FieldSpec) -> Result<Output, CliError> {
    let c = load_category(category)?;
    let g = global_dim(&c, field)?;
    if as_json {
        return ok(pretty(&json!({
            "value": g.value,
            "chain_length": g.chain_length,
            "field": field,
            "by_criterion": g.by_criterion,
            "aut": g.aut.iter().map(|i| json!({"object": c.object_name(i.object), "order": i.order, "invertible": i.invertible})).collect::<Vec<_>>(),
        })));
    }
    let text = match g.value {
        PdValue::Infinite => {
            let bad: Vec<String> = g
                .aut
                .iter()
                .filter(|i| !i.invertible)
                .map(|i| format!("|Aut({})| = {}", c.object_name(i.object), i.order))
                .collect();
            format!(
                "gldim = ∞ ({} vanishes in {field}; gldim is finite iff every |Aut(x)| is a unit)\nℓ(C) = {}\n",
                bad.join(", "),
                g.chain_length
            )
        }
        value => format!("gldim = {value}\nℓ(C) = {}\n", g.chain_length),
    };
    ok(text)
}

fn resolve(
    as_json: bool,
    category: &str,
    module: &str,
    field: Option<FieldSpec>,
    strategy: Strategy,
    max_steps: Option<usize>,
    budget: u64,
) -> Result<Output, CliError> {
    let c = load_category(category)?;
    let m = load_module(&c, module, field)?;
    let resolver = Resolver::new(&c, m.field()).with_strategy(strategy).with_budget(budget);
    let steps = max_steps.unwrap_or(c.chain_length() + 1);
    let res = resolver.resolve(&m, steps)?;
    if as_json {
        let mut v = res.to_json();
        v["field"] = json!(m.field());
        v["chain_length"] = json!(c.chain_length());
        return ok(pretty(&v));
    }
    let mut text = format!("resolution of {} over {} (ℓ(C) = {})\n", dims(&c, &m), m.field(), c.chain_length());
    text.push_str(&steps_text(&c, &res));
    match res.truncated_at {
        Some(n) => writeln!(text, "stopped after {n} steps without a projective syzygy").unwrap(),
        None => writeln!(text, "last syzygy is projective").unwrap(),
    }
    ok(text)
}

fn probe(as_json: bool, category: &str, field: FieldSpec, opts: &ProbeOptions) -> Result<Output, CliError> {
    let c = load_category(category)?;
    let r = findim_probe(&c, field, opts)?;
    let code = if r.violations.is_empty() { 0 } else { INVARIANT_VIOLATION };
    if as_json {
        return Ok(Output { text: pretty(&serde_json::to_value(&r).expect("report serialises")), code });
    }
    let mut text = String::new();
    writeln!(text, "probe over {field}: {} draws, seed {}, max dim {}", opts.samples, r.seed, r.max_dim).unwrap();
    writeln!(text, "  evaluated {} nonzero modules, skipped {} zero modules", r.samples, r.skipped_zero).unwrap();
    let hist: Vec<String> = r.histogram.iter().map(|(k, n)| format!("pd {k}: {n}")).collect();
    writeln!(text, "  histogram: {}", hist.join(", ")).unwrap();
    let max = r.max_finite_pd.map_or("none".to_string(), |n| n.to_string());
    writeln!(text, "  max finite pd = {max} (a lower bound for the finitistic dimension; ℓ(C) = {})", r.chain_length)
        .unwrap();
    if r.violations.is_empty() {
        writeln!(text, "  violations: none").unwrap();
    } else {
        writeln!(text, "  violations: {}", r.violations.len()).unwrap();
        for v in &r.violations {
            writeln!(text, "    {v}").unwrap();
        }
    }
    Ok(Output { text, code })
}

fn builtin_cmd(as_json: bool, list: bool, emit: Option<&str>) -> Result<Output, CliError> {
    if list {
        if as_json {
            return ok(pretty(&json!(BUILTIN_NAMES)));
        }
        return ok(BUILTIN_NAMES.iter().map(|n| format!("{n}\n")).collect());
    }
    let name = emit.expect("clap requires --list or --emit");
    let c = builtin(name).ok_or_else(|| input_error(format!("no builtin named {name:?}")))?;
    ok(category_to_json(&c) + "\n")
}
