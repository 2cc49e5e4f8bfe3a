//! The raw category file, as written on disk.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismSpec {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

/// `object -> identity morphism`, kept in file order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityMap(pub Vec<(String, String)>);

impl IdentityMap {
    pub fn get(&self, object: &str) -> Option<&str> {
        self.0.iter().find(|(o, _)| o == object).map(|(_, m)| m.as_str())
    }
}

impl Serialize for IdentityMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for IdentityMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = IdentityMap;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from object ids to identity morphism ids")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<IdentityMap, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    out.push((k, v));
                }
                Ok(IdentityMap(out))
            }
        }
        deserializer.deserialize_map(V)
    }
}

/// Unvalidated category data. `composition` entries `[g, f, h]` mean
/// `g ∘ f = h`; compositions with an identity may be omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySpec {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismSpec>,
    pub identities: IdentityMap,
    #[serde(default)]
    pub composition: Vec<[String; 3]>,
}

/// Group builder file: `table[i][j]` is `elements[i] * elements[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub object: Option<String>,
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

/// Poset builder file: each pair `[a, b]` asserts `a <= b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetSpec {
    pub elements: Vec<String>,
    pub relation: Vec<[String; 2]>,
}

/// Quiver builder file: each arrow is `[id, source, target]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<[String; 3]>,
}
