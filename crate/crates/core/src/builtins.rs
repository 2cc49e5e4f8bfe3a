//! The bundled example categories.

use crate::category::{
    build_group_category, build_path_category, build_poset_category, validate_category, CategorySpec,
    FiniteCategory, GroupSpec, PosetSpec, QuiverSpec,
};

pub const BUILTIN_NAMES: &[&str] = &["c2", "c3", "s3", "chain3", "square", "a2-path", "kronecker-path", "example3"];

const EXAMPLE3: &str = r#"{
  "objects": ["X", "Y"],
  "morphisms": [
    {"id": "1X", "dom": "X", "cod": "X"},
    {"id": "g", "dom": "X", "cod": "X"},
    {"id": "f", "dom": "X", "cod": "Y"},
    {"id": "1Y", "dom": "Y", "cod": "Y"}
  ],
  "identities": {"X": "1X", "Y": "1Y"},
  "composition": [["g", "g", "1X"], ["f", "g", "f"]]
}"#;

fn s(v: &[&str]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn cyclic(n: usize) -> GroupSpec {
    let elements: Vec<String> = (0..n).map(|k| if k == 0 { "e".into() } else { format!("r{k}") }).collect();
    let table = (0..n).map(|a| (0..n).map(|b| elements[(a + b) % n].clone()).collect()).collect();
    GroupSpec { object: None, elements, table }
}

fn symmetric3() -> GroupSpec {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let elements = s(&["e", "(12)", "(13)", "(23)", "(123)", "(132)"]);
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let ab = [a[b[0]], a[b[1]], a[b[2]]];
                    elements[perms.iter().position(|p| *p == ab).unwrap()].clone()
                })
                .collect()
        })
        .collect();
    GroupSpec { object: None, elements, table }
}

fn pairs(v: &[(&str, &str)]) -> Vec<[String; 2]> {
    v.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect()
}

fn arrows(v: &[(&str, &str, &str)]) -> Vec<[String; 3]> {
    v.iter().map(|(a, b, c)| [a.to_string(), b.to_string(), c.to_string()]).collect()
}

/// Looks up a bundled category by name.
pub fn builtin(name: &str) -> Option<FiniteCategory> {
    let cat = match name {
        "c2" => build_group_category(&cyclic(2)),
        "c3" => build_group_category(&cyclic(3)),
        "s3" => build_group_category(&symmetric3()),
        "chain3" => build_poset_category(&PosetSpec {
            elements: s(&["1", "2", "3"]),
            relation: pairs(&[("1", "2"), ("2", "3")]),
        }),
        "square" => build_poset_category(&PosetSpec {
            elements: s(&["a", "b", "c", "d"]),
            relation: pairs(&[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]),
        }),
        "a2-path" => build_path_category(&QuiverSpec { vertices: s(&["1", "2"]), arrows: arrows(&[("a", "1", "2")]) }),
        "kronecker-path" => build_path_category(&QuiverSpec {
            vertices: s(&["1", "2"]),
            arrows: arrows(&[("a", "1", "2"), ("b", "1", "2")]),
        }),
        "example3" => {
            let spec: CategorySpec = serde_json::from_str(EXAMPLE3).expect("bundled JSON parses");
            validate_category(&spec)
        }
        _ => return None,
    };
    Some(cat.expect("bundled categories are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_build() {
        let expected = [
            ("c2", 1, 2, 0),
            ("c3", 1, 3, 0),
            ("s3", 1, 6, 0),
            ("chain3", 3, 6, 2),
            ("square", 4, 9, 2),
            ("a2-path", 2, 3, 1),
            ("kronecker-path", 2, 4, 1),
            ("example3", 2, 4, 1),
        ];
        for (name, objs, mors, ell) in expected {
            let c = builtin(name).unwrap();
            assert_eq!((c.num_objects(), c.num_morphisms(), c.chain_length()), (objs, mors, ell), "{name}");
        }
        assert!(builtin("nope").is_none());
    }
}
