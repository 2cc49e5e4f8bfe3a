//! JSON file formats for categories and modules.

use std::fmt;
use std::marker::PhantomData;

use serde::de::{DeserializeOwned, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::category::{
    build_group_category, build_path_category, build_poset_category, validate_category, CategoryError,
    CategorySpec, FiniteCategory, GroupSpec, PosetSpec, QuiverSpec,
};
use crate::exactla::{ExactMatrix, FieldSpec, LinalgError, Scalar};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unrecognised category file: expected one of the keys \"morphisms\", \"table\", \"relation\", \"arrows\"")]
    UnknownCategoryKind,
    #[error(transparent)]
    Category(#[from] CategoryError),
}

/// A JSON object whose key order is preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedMap<V>(pub Vec<(String, V)>);

impl<V> Default for OrderedMap<V> {
    fn default() -> Self {
        OrderedMap(Vec::new())
    }
}

impl<V> OrderedMap<V> {
    pub fn get(&self, key: &str) -> Option<&V> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

impl<V: Serialize> Serialize for OrderedMap<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for OrderedMap<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Vis<V>(PhantomData<V>);
        impl<'de, V: Deserialize<'de>> Visitor<'de> for Vis<V> {
            type Value = OrderedMap<V>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a JSON object")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, V>()? {
                    out.push((k, v));
                }
                Ok(OrderedMap(out))
            }
        }
        deserializer.deserialize_map(Vis(PhantomData))
    }
}

/// A matrix entry as written in a file: a JSON integer or a string such as
/// `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonScalar {
    Int(i64),
    Text(String),
}

impl JsonScalar {
    pub fn to_scalar(&self, field: FieldSpec) -> Result<Scalar, LinalgError> {
        match self {
            JsonScalar::Int(v) => field.parse_scalar(&v.to_string()),
            JsonScalar::Text(t) => field.parse_scalar(t),
        }
    }

    pub fn from_scalar(s: &Scalar) -> Self {
        match s.as_i64() {
            Some(v) => JsonScalar::Int(v),
            None => JsonScalar::Text(s.to_string()),
        }
    }
}

pub type JsonMatrix = Vec<Vec<JsonScalar>>;

pub fn matrix_from_json(field: FieldSpec, rows: usize, cols: usize, m: &JsonMatrix) -> Result<ExactMatrix, LinalgError> {
    if m.len() != rows {
        return Err(LinalgError::ShapeError(format!("expected {rows} rows, found {}", m.len())));
    }
    let parsed: Vec<Vec<Scalar>> = m
        .iter()
        .map(|r| r.iter().map(|s| s.to_scalar(field)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    ExactMatrix::from_rows(field, cols, &parsed)
}

pub fn matrix_to_json(m: &ExactMatrix) -> JsonMatrix {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(JsonScalar::from_scalar).collect())
        .collect()
}

/// Module file: dimensions per object and one matrix per morphism
/// (`dim(cod) × dim(dom)`, row lists). Identity actions and maps with a
/// zero-dimensional side may be omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub field: FieldSpec,
    pub spaces: OrderedMap<usize>,
    #[serde(default)]
    pub action: OrderedMap<JsonMatrix>,
}

/// Parses any of the four category file shapes.
pub fn parse_category(text: &str) -> Result<FiniteCategory, IoError> {
    let value: Value = serde_json::from_str(text)?;
    let has = |k: &str| value.get(k).is_some();
    fn take<T: DeserializeOwned>(v: Value) -> Result<T, IoError> {
        Ok(serde_json::from_value(v)?)
    }
    let cat = if has("morphisms") {
        validate_category(&take::<CategorySpec>(value)?)?
    } else if has("table") {
        build_group_category(&take::<GroupSpec>(value)?)?
    } else if has("relation") {
        build_poset_category(&take::<PosetSpec>(value)?)?
    } else if has("arrows") {
        build_path_category(&take::<QuiverSpec>(value)?)?
    } else {
        return Err(IoError::UnknownCategoryKind);
    };
    Ok(cat)
}

pub fn read_category(path: &str) -> Result<FiniteCategory, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_string(), source })?;
    parse_category(&text)
}

pub fn parse_module_spec(text: &str) -> Result<ModuleSpec, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_module_spec(path: &str) -> Result<ModuleSpec, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_string(), source })?;
    parse_module_spec(&text)
}

pub fn category_to_json(c: &FiniteCategory) -> String {
    serde_json::to_string_pretty(&c.to_spec()).expect("category spec serialises")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_files_dispatch() {
        let g = parse_category(r#"{"elements":["e","s"],"table":[["e","s"],["s","e"]]}"#).unwrap();
        assert_eq!(g.num_morphisms(), 2);
        let p = parse_category(r#"{"elements":["a","b"],"relation":[["a","b"]]}"#).unwrap();
        assert_eq!(p.num_morphisms(), 3);
        let q = parse_category(r#"{"vertices":["1","2"],"arrows":[["a","1","2"]]}"#).unwrap();
        assert_eq!(q.num_morphisms(), 3);
        assert!(matches!(parse_category(r#"{"foo":1}"#), Err(IoError::UnknownCategoryKind)));
    }

    #[test]
    fn module_spec_parses_mixed_scalars() {
        let spec = parse_module_spec(
            r#"{"field":{"kind":"Q"},"spaces":{"X":2,"Y":0},"action":{"g":[[0,"1/2"],[2,0]]}}"#,
        )
        .unwrap();
        assert_eq!(spec.spaces.0, vec![("X".to_string(), 2), ("Y".to_string(), 0)]);
        let m = matrix_from_json(FieldSpec::Rationals, 2, 2, spec.action.get("g").unwrap()).unwrap();
        assert_eq!(m.get(0, 1).to_string(), "1/2");
        assert_eq!(matrix_to_json(&m)[0][1], JsonScalar::Text("1/2".into()));
        assert_eq!(matrix_to_json(&m)[1][0], JsonScalar::Int(2));
    }
}
