//! Python bindings: categories, modules, and the homological invariants.

use std::sync::Arc;

use eica::builtins::{builtin, BUILTIN_NAMES};
use eica::homology::{is_projective as projective, HomologyError};
use eica::io::{category_to_json, parse_category, parse_module_spec, read_category, read_module_spec, ModuleSpec};
use eica::rep::{hom_space, representable, validate_rep};
use eica::{
    build_algebra, findim_probe, global_dim, radical, FieldSpec, FiniteCategory, PdValue, ProbeOptions,
    Representation, Resolver, Strategy,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde_json::{json, Value};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn homology_error(e: HomologyError) -> PyErr {
    match e {
        HomologyError::Invariant(_) | HomologyError::Rep(_) => PyRuntimeError::new_err(e.to_string()),
        _ => value_error(e),
    }
}

fn parse_field(field: &str) -> PyResult<FieldSpec> {
    field.parse().map_err(value_error)
}

fn parse_strategy(strategy: &str) -> PyResult<Strategy> {
    strategy.parse().map_err(PyValueError::new_err)
}

/// Hands a JSON value to Python as plain dicts, lists and scalars.
fn to_python<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn pd_to_json(v: PdValue) -> Value {
    serde_json::to_value(v).expect("pd values serialise")
}

/// A validated finite EI category.
#[pyclass(module = "eica", frozen)]
pub struct Category {
    inner: Arc<FiniteCategory>,
}

#[pymethods]
impl Category {
    /// Parses a category file (explicit, group, poset or quiver form).
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Category { inner: Arc::new(parse_category(text).map_err(value_error)?) })
    }

    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        Ok(Category { inner: Arc::new(read_category(path).map_err(value_error)?) })
    }

    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        let c = builtin(name).ok_or_else(|| value_error(format!("no builtin named {name:?}")))?;
        Ok(Category { inner: Arc::new(c) })
    }

    #[staticmethod]
    fn builtin_names() -> Vec<&'static str> {
        BUILTIN_NAMES.to_vec()
    }

    #[getter]
    fn objects(&self) -> Vec<String> {
        self.inner.objects().map(|x| self.inner.object_name(x).to_string()).collect()
    }

    #[getter]
    fn morphisms(&self) -> Vec<String> {
        self.inner.morphisms().map(|m| self.inner.morphism_name(m).to_string()).collect()
    }

    /// `ℓ(C)`: the longest chain of non-isomorphisms.
    #[getter]
    fn chain_length(&self) -> usize {
        self.inner.chain_length()
    }

    #[getter]
    fn iso_classes(&self) -> Vec<Vec<String>> {
        let c = &self.inner;
        c.order().iso_classes.iter().map(|cls| cls.iter().map(|&x| c.object_name(x).to_string()).collect()).collect()
    }

    fn aut_order(&self, object: &str) -> PyResult<usize> {
        let x = self.inner.object_id(object).ok_or_else(|| value_error(format!("unknown object {object:?}")))?;
        Ok(self.inner.aut(x).len())
    }

    fn to_json(&self) -> String {
        category_to_json(&self.inner)
    }

    /// Dimension of the radical of `kC`.
    fn radical_dim(&self, field: &str) -> PyResult<usize> {
        let a = build_algebra(&self.inner, parse_field(field)?);
        Ok(radical(&a).map_err(value_error)?.dim())
    }

    /// Global dimension of `kC`: an int, or `"inf"`.
    fn global_dim<'py>(&self, py: Python<'py>, field: &str) -> PyResult<Bound<'py, PyAny>> {
        let g = global_dim(&self.inner, parse_field(field)?).map_err(homology_error)?;
        to_python(py, &pd_to_json(g.value))
    }

    /// Samples random modules and reports their projective dimensions.
    #[pyo3(signature = (field, samples = 200, seed = 0, max_dim = 6, strategy = "min"))]
    fn probe<'py>(
        &self,
        py: Python<'py>,
        field: &str,
        samples: usize,
        seed: u64,
        max_dim: usize,
        strategy: &str,
    ) -> PyResult<Bound<'py, PyAny>> {
        let opts = ProbeOptions { samples, seed, max_dim, strategy: parse_strategy(strategy)?, ..ProbeOptions::default() };
        let field = parse_field(field)?;
        let c = Arc::clone(&self.inner);
        let report = py.detach(move || findim_probe(&c, field, &opts)).map_err(homology_error)?;
        to_python(py, &serde_json::to_value(&report).expect("report serialises"))
    }

    fn __repr__(&self) -> String {
        format!(
            "Category({} objects, {} morphisms, chain length {})",
            self.inner.num_objects(),
            self.inner.num_morphisms(),
            self.inner.chain_length()
        )
    }
}

/// A finite-dimensional representation of a category.
#[pyclass(module = "eica", frozen)]
pub struct Module {
    inner: Representation,
}

impl Module {
    fn from_spec(category: &Category, spec: &ModuleSpec) -> PyResult<Self> {
        Ok(Module { inner: validate_rep(&category.inner, spec.field, spec).map_err(value_error)? })
    }
}

#[pymethods]
impl Module {
    #[staticmethod]
    fn from_json(category: &Category, text: &str) -> PyResult<Self> {
        Self::from_spec(category, &parse_module_spec(text).map_err(value_error)?)
    }

    #[staticmethod]
    fn from_file(category: &Category, path: &str) -> PyResult<Self> {
        Self::from_spec(category, &read_module_spec(path).map_err(value_error)?)
    }

    /// The representable functor `kC(x, -)`.
    #[staticmethod]
    fn representable(category: &Category, object: &str, field: &str) -> PyResult<Self> {
        let c = &category.inner;
        let x = c.object_id(object).ok_or_else(|| value_error(format!("unknown object {object:?}")))?;
        Ok(Module { inner: representable(c, parse_field(field)?, x).map_err(value_error)? })
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    #[getter]
    fn dims(&self) -> Vec<(String, usize)> {
        let c = self.inner.category();
        c.objects().map(|x| (c.object_name(x).to_string(), self.inner.dim(x))).collect()
    }

    #[getter]
    fn total_dim(&self) -> usize {
        self.inner.total_dim()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_projective(&self) -> bool {
        projective(&self.inner)
    }

    /// `dim Hom(self, other)`.
    fn hom_dim(&self, other: &Module) -> PyResult<usize> {
        Ok(hom_space(&self.inner, &other.inner).map_err(value_error)?.dim())
    }

    #[pyo3(signature = (strategy = "min"))]
    fn syzygy(&self, strategy: &str) -> PyResult<Self> {
        let r = Resolver::new(self.inner.category(), self.inner.field()).with_strategy(parse_strategy(strategy)?);
        Ok(Module { inner: r.syzygy(&self.inner).map_err(homology_error)? })
    }

    /// Projective dimension with its witness resolution. `value` is an int,
    /// `"inf"`, or `"zero"` for the zero module.
    #[pyo3(signature = (strategy = "min"))]
    fn proj_dim<'py>(&self, py: Python<'py>, strategy: &str) -> PyResult<Bound<'py, PyAny>> {
        let r = Resolver::new(self.inner.category(), self.inner.field()).with_strategy(parse_strategy(strategy)?);
        let v = r.proj_dim(&self.inner).map_err(homology_error)?;
        let out = json!({
            "value": pd_to_json(v.value),
            "chain_length": v.chain_length,
            "resolution": v.witness.to_json(),
        });
        to_python(py, &out)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_spec()).expect("module spec serialises")
    }

    fn __repr__(&self) -> String {
        let dims: Vec<String> = self.dims().into_iter().map(|(x, d)| format!("{x}:{d}")).collect();
        format!("Module(over {}, dims {})", self.inner.field(), dims.join(", "))
    }
}

#[pymodule]
#[pyo3(name = "eica")]
pub fn eica_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Category>()?;
    m.add_class::<Module>()?;
    Ok(())
}
