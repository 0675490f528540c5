//! JSON input documents and their detection.
//!
//! | document     | shape                                                    |
//! |--------------|----------------------------------------------------------|
//! | poset        | `{"elements": [..], "covers": [[lo, hi], ..]}`           |
//! | skew shape   | `{"lambda": [..], "mu": [..]}`                           |
//! | marked poset | poset fields plus `{"marked": {"label": value, ..}}`     |
//! | family       | `{"family": "ps"|"gt"|"gt-flagged", "k", "m", "y", "z", "a"?, "b"?}` |

use serde_json::Value;

use crate::families::{Family, FamilyJson};
use crate::marked::{MarkedJson, MarkedPoset};
use crate::poset::{Poset, PosetJson, ShapeJson, SkewShape};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Poset(Poset),
    Shape(SkewShape),
    Marked(MarkedPoset),
    Family(Family),
}

fn decode<T: serde::de::DeserializeOwned>(value: Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::InvalidInput(e.to_string()))
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))?;
    let Some(object) = value.as_object() else {
        return Err(Error::InvalidInput("expected a JSON object".into()));
    };
    if object.contains_key("family") {
        Ok(Document::Family(Family::from_json(&decode::<FamilyJson>(value)?)?))
    } else if object.contains_key("marked") {
        Ok(Document::Marked(MarkedPoset::from_json(&decode::<MarkedJson>(value)?)?))
    } else if object.contains_key("lambda") {
        Ok(Document::Shape(decode::<ShapeJson>(value)?.to_shape()?))
    } else if object.contains_key("elements") {
        Ok(Document::Poset(Poset::from_json(&decode::<PosetJson>(value)?)?))
    } else {
        Err(Error::InvalidInput(
            "unrecognized document: expected a poset, skew shape, marked poset or family spec".into(),
        ))
    }
}

impl Document {
    /// The marked poset described by a marked-poset or family document.
    pub fn to_marked(&self) -> Result<MarkedPoset> {
        match self {
            Document::Marked(m) => Ok(m.clone()),
            Document::Family(f) => f.marked_poset(),
            _ => Err(Error::InvalidInput("expected a marked poset or family spec".into())),
        }
    }

    /// The unmarked poset of a poset or skew-shape document.
    pub fn to_poset(&self) -> Result<Poset> {
        match self {
            Document::Poset(p) => Ok(p.clone()),
            Document::Shape(s) => Poset::skew_shape(s),
            _ => Err(Error::InvalidInput("expected a poset or skew shape".into())),
        }
    }

    pub fn to_json(&self) -> Value {
        let value = match self {
            Document::Poset(p) => serde_json::to_value(p.to_json()),
            Document::Shape(s) => serde_json::to_value(s.to_json()),
            Document::Marked(m) => serde_json::to_value(m.to_json()),
            Document::Family(f) => serde_json::to_value(f.to_json()),
        };
        value.expect("documents serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    #[test]
    fn detects_each_kind() {
        let docs = [
            Document::Poset(Poset::grid(2, 2)),
            Document::Shape(SkewShape::new(vec![6, 5, 3, 3], vec![2, 1, 1]).unwrap()),
            Document::Marked(MarkedPoset::new(Poset::chain(3), &[(0, 1), (2, 4)]).unwrap()),
            Document::Family(Family::PitmanStanley(FamilySpec::new(1, 1, vec![1], vec![0]).unwrap())),
        ];
        for doc in docs {
            let text = doc.to_json().to_string();
            assert_eq!(parse_document(&text).unwrap(), doc);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_document("[1,2]").is_err());
        assert!(parse_document("{\"foo\": 1}").is_err());
        assert!(parse_document("{").is_err());
        assert!(parse_document(r#"{"elements":["a"],"covers":[],"marked":{"b":1}}"#).is_err());
    }
}
