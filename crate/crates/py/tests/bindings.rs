use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(eica_py::eica_py)(py);
        let globals = PyDict::new(py);
        globals.set_item("eica", module).unwrap();
        let data = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data");
        globals.set_item("DATA", data).unwrap();
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python code failed");
        }
    });
}

#[test]
fn example_module_has_pd_one() {
    run(r#"
c = eica.Category.from_file(DATA + "/example3.json")
assert c.chain_length == 1
assert c.aut_order("X") == 2
m = eica.Module.from_file(c, DATA + "/example3_M.json")
assert m.dims == [("X", 2), ("Y", 0)]
v = m.proj_dim()
assert v["value"] == 1 and v["chain_length"] == 1, v
assert m.syzygy().dims == [("X", 0), ("Y", 1)]
sx = eica.Module.from_file(c, DATA + "/example3_SX.json")
assert sx.proj_dim("full")["value"] == "inf"
assert c.global_dim("F2") == "inf" and c.global_dim("Q") == 1
"#);
}

#[test]
fn representables_and_homs() {
    run(r#"
c = eica.Category.builtin("example3")
px = eica.Module.representable(c, "X", "F2")
py_ = eica.Module.representable(c, "Y", "F2")
assert px.dims == [("X", 2), ("Y", 1)] and px.is_projective()
assert py_.hom_dim(px) == 1 and px.hom_dim(py_) == 0
m = eica.Module.from_json(c, px.to_json())
assert m.hom_dim(px) == 2
assert c.radical_dim("F2") == 2 and c.radical_dim("Q") == 1
"#);
}

#[test]
fn probe_and_errors() {
    run(r#"
c = eica.Category.builtin("example3")
r = c.probe("F2", samples=200, seed=7)
assert r["max_finite_pd"] == 1 and r["violations"] == []
assert "c2" in eica.Category.builtin_names()
for bad in (lambda: eica.Category.builtin("nope"), lambda: c.global_dim("F4"),
            lambda: eica.Category.from_json("{}"), lambda: c.probe("F2", strategy="odd")):
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
"#);
}
