//! The JSON space document:
//! `{"universe": ["h1", ...], "blocks": {"e1": ["h1", "h2"], ...}}`.
//!
//! Parameter order is the order of the keys in the file. Duplicate keys are
//! rejected rather than silently overwritten.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::covering::SoftCoveringSpace;
use crate::error::{Error, Result};
use crate::sets::{Subset, Universe};
use crate::soft_set::SoftSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub universe: Vec<String>,
    pub blocks: Blocks,
}

/// Parameter → element names, in file order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Blocks(pub Vec<(String, Vec<String>)>);

impl Serialize for Blocks {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Blocks {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct BlocksVisitor;

        impl<'de> Visitor<'de> for BlocksVisitor {
            type Value = Blocks;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from parameter names to lists of element names")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Blocks, A::Error> {
                let mut entries: Vec<(String, Vec<String>)> = Vec::new();
                while let Some(key) = map.next_key::<String>()? {
                    if entries.iter().any(|(k, _)| *k == key) {
                        return Err(de::Error::custom(format!("duplicate parameter name {key:?}")));
                    }
                    let value = map.next_value()?;
                    entries.push((key, value));
                }
                Ok(Blocks(entries))
            }
        }

        deserializer.deserialize_map(BlocksVisitor)
    }
}

impl SpaceDocument {
    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            path: origin.to_string(),
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_soft_set(soft_set: &SoftSet) -> Self {
        Self {
            universe: soft_set.universe().elements().to_vec(),
            blocks: Blocks(
                soft_set
                    .assignment()
                    .map(|(p, s)| (p.to_string(), s.names().map(str::to_string).collect()))
                    .collect(),
            ),
        }
    }

    /// Validates names and builds the soft set; coverage is not checked.
    pub fn to_soft_set(&self) -> Result<SoftSet> {
        let universe = Universe::new(&self.universe).map_err(|e| match e {
            Error::DuplicateElement(name) => invalid(
                format!("universe[{}]", second_index(&self.universe, &name)),
                format!("duplicate element name {name:?}"),
            ),
            Error::EmptyUniverse => invalid("universe", "must contain at least one element"),
            Error::UniverseCapacity { size, capacity } => {
                invalid("universe", format!("{size} elements; at most {capacity} are supported"))
            }
            other => other,
        })?;
        let mut assignment = Vec::with_capacity(self.blocks.0.len());
        for (parameter, names) in &self.blocks.0 {
            let mut seen = HashSet::new();
            let mut bits = 0;
            for (i, name) in names.iter().enumerate() {
                let field = format!("blocks.{parameter}[{i}]");
                let position = universe
                    .position(name)
                    .ok_or_else(|| invalid(&field, format!("unknown element {name:?}")))?;
                if !seen.insert(name) {
                    return Err(invalid(field, format!("duplicate element {name:?}")));
                }
                bits |= 1 << position;
            }
            assignment.push((parameter.clone(), Subset::from_bits(&universe, bits)));
        }
        SoftSet::new(&universe, assignment)
    }

    /// Builds the soft covering space, enforcing the covering condition.
    pub fn to_space(&self) -> Result<SoftCoveringSpace> {
        SoftCoveringSpace::new(self.to_soft_set()?).map_err(|e| match e {
            Error::NotACovering(reason) => invalid("blocks", format!("not a covering soft set: {reason}")),
            other => other,
        })
    }
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Validation {
        field: field.into(),
        message: message.into(),
    }
}

fn second_index(names: &[String], name: &str) -> usize {
    names
        .iter()
        .enumerate()
        .filter(|(_, n)| *n == name)
        .nth(1)
        .map_or(0, |(i, _)| i)
}

/// serde_json appends " at line L column C"; the position is reported
/// separately.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(cut) => message[..cut].to_string(),
        None => message.to_string(),
    }
}

pub fn read_document(path: &Path) -> Result<SpaceDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    SpaceDocument::from_json(&text, &path.display().to_string())
}

/// Loads a soft set from a document without requiring it to be a covering.
pub fn load_soft_set(path: &Path) -> Result<SoftSet> {
    read_document(path)?.to_soft_set()
}

/// Loads and validates a soft covering space.
pub fn parse_space(path: &Path) -> Result<SoftCoveringSpace> {
    read_document(path)?.to_space()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPACE_C: &str = r#"{
  "universe": ["h1", "h2", "h3", "h4", "h5"],
  "blocks": {"e1": ["h1", "h2", "h3"], "e2": ["h3", "h4"], "e3": ["h4", "h5"]}
}"#;

    fn doc(text: &str) -> Result<SpaceDocument> {
        SpaceDocument::from_json(text, "test.json")
    }

    #[test]
    fn loads_space_c() {
        let space = doc(SPACE_C).unwrap().to_space().unwrap();
        assert_eq!(space.universe().len(), 5);
        assert_eq!(space.soft_set().len(), 3);
        assert_eq!(space.soft_set().image("e1").unwrap().to_string(), "{h1,h2,h3}");
    }

    #[test]
    fn round_trip() {
        let first = doc(SPACE_C).unwrap();
        let soft = first.to_soft_set().unwrap();
        let again = doc(&SpaceDocument::from_soft_set(&soft).to_json()).unwrap();
        assert_eq!(again, first);
        assert_eq!(again.to_soft_set().unwrap(), soft);
    }

    #[test]
    fn keeps_parameter_order() {
        let d = doc(r#"{"universe": ["a"], "blocks": {"z": ["a"], "b": ["a"]}}"#).unwrap();
        assert_eq!(d.to_soft_set().unwrap().parameters(), ["z", "b"]);
    }

    #[test]
    fn unknown_element_is_named() {
        let err = doc(r#"{"universe": ["a", "b"], "blocks": {"e1": ["a"], "e2": ["b", "z"]}}"#)
            .unwrap()
            .to_space()
            .unwrap_err();
        assert_eq!(err.to_string(), r#"blocks.e2[1]: unknown element "z""#);
    }

    #[test]
    fn empty_block_is_not_a_covering() {
        let d = doc(r#"{"universe": ["a"], "blocks": {"e1": ["a"], "e2": []}}"#).unwrap();
        let err = d.to_space().unwrap_err();
        assert!(err.to_string().contains("not a covering soft set"), "{err}");
        assert!(d.to_soft_set().is_ok());
    }

    #[test]
    fn duplicates_are_rejected() {
        let err = doc(r#"{"universe": ["a", "b", "a"], "blocks": {}}"#)
            .unwrap()
            .to_soft_set()
            .unwrap_err();
        assert_eq!(err.to_string(), r#"universe[2]: duplicate element name "a""#);

        let err = doc(r#"{"universe": ["a"], "blocks": {"e1": ["a"], "e1": ["a"]}}"#).unwrap_err();
        assert!(matches!(&err, Error::Parse { line: 1, message, .. } if message.contains("duplicate parameter")), "{err}");

        let err = doc(r#"{"universe": ["a"], "blocks": {"e1": ["a", "a"]}}"#)
            .unwrap()
            .to_soft_set()
            .unwrap_err();
        assert_eq!(err.to_string(), r#"blocks.e1[1]: duplicate element "a""#);
    }

    #[test]
    fn malformed_json_has_a_position() {
        let err = doc("{\n  \"universe\": [\"a\",\n}").unwrap_err();
        match err {
            Error::Parse { path, line, .. } => {
                assert_eq!(path, "test.json");
                assert_eq!(line, 3);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(doc(r#"{"universe": ["a"]}"#), Err(Error::Parse { .. })));
        assert!(matches!(doc(r#"{"universe": ["a"], "blocks": {}, "x": 1}"#), Err(Error::Parse { .. })));
    }
}
