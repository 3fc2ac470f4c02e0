//! JSON documents for spaces, lattices and posets.
//!
//! ```text
//! {"kind":"space","points":2,"opens":[[],[1],[0,1]]}
//! {"kind":"lattice","elements":3,"leq":[[0,0],[0,1],[0,2],[1,1],[1,2],[2,2]]}
//! {"kind":"poset","elements":2,"leq":[[0,0],[1,1]]}
//! ```
//!
//! A lattice or poset document lists the full order relation. Serialization
//! is canonical: opens sorted by bitmask, point lists ascending, order pairs
//! sorted. Extra keys are ignored on input.

use mtkit_core::completions::FinPoset;
use mtkit_core::{ElementSet, FinSpace, FiniteLattice, MtError};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocError {
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Invalid(#[from] MtError),
}

impl DocError {
    fn schema(path: impl Into<String>, message: impl Into<String>) -> DocError {
        DocError::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Space(FinSpace),
    Lattice(FiniteLattice),
    Poset(FinPoset),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Space(_) => "space",
            Document::Lattice(_) => "lattice",
            Document::Poset(_) => "poset",
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            Document::Space(s) => space_value(s),
            Document::Lattice(l) => lattice_value(l),
            Document::Poset(p) => poset_value(p),
        }
    }
}

#[derive(Deserialize)]
struct SpaceDoc {
    points: usize,
    opens: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct OrderDoc {
    elements: usize,
    leq: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct Kind {
    kind: String,
}

fn typed<T: for<'de> Deserialize<'de>>(value: &Value) -> Result<T, DocError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        DocError::schema(path, e.into_inner().to_string())
    })
}

pub fn parse_document(text: &str) -> Result<Document, DocError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocError::schema(".", e.to_string()))?;
    parse_value(&value)
}

pub fn parse_value(value: &Value) -> Result<Document, DocError> {
    let Kind { kind } = typed(value)?;
    match kind.as_str() {
        "space" => {
            let doc: SpaceDoc = typed(value)?;
            let mut opens = Vec::with_capacity(doc.opens.len());
            for (i, open) in doc.opens.iter().enumerate() {
                if let Some((j, &x)) = open.iter().enumerate().find(|(_, &x)| x >= 32) {
                    return Err(DocError::schema(format!("opens[{i}][{j}]"), format!("point index {x} too large")));
                }
                opens.push(ElementSet::from_points(open.iter().copied()));
            }
            Ok(Document::Space(FinSpace::new(doc.points, opens)?))
        }
        "lattice" => {
            let doc: OrderDoc = typed(value)?;
            Ok(Document::Lattice(mtkit_core::frames::validate_lattice(doc.elements, &doc.leq)?))
        }
        "poset" => {
            let doc: OrderDoc = typed(value)?;
            Ok(Document::Poset(FinPoset::new(doc.elements, &doc.leq)?))
        }
        other => Err(DocError::schema("kind", format!("unknown kind {other:?}"))),
    }
}

pub fn space_value(s: &FinSpace) -> Value {
    let opens: Vec<Vec<usize>> = s.opens().iter().map(|o| o.points().collect()).collect();
    json!({"kind": "space", "points": s.n(), "opens": opens})
}

pub fn lattice_value(l: &FiniteLattice) -> Value {
    let leq: Vec<[usize; 2]> = l.leq_pairs().into_iter().map(|(a, b)| [a, b]).collect();
    json!({"kind": "lattice", "elements": l.size(), "leq": leq})
}

pub fn poset_value(p: &FinPoset) -> Value {
    let leq: Vec<[usize; 2]> = p.order().pairs().map(|(a, b)| [a, b]).collect();
    json!({"kind": "poset", "elements": p.size(), "leq": leq})
}

/// Parse, serialize, parse again; the two parses must agree and the
/// serialized form must be a fixed point.
pub fn io_roundtrip(text: &str) -> Result<Document, DocError> {
    let first = parse_document(text)?;
    let canonical = first.to_value().to_string();
    let second = parse_document(&canonical)?;
    assert_eq!(first, second, "round trip changed the document");
    assert_eq!(second.to_value().to_string(), canonical, "serialization is not canonical");
    Ok(second)
}

/// Element sets as ascending point lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Points(pub Vec<usize>);

impl From<ElementSet> for Points {
    fn from(a: ElementSet) -> Points {
        Points(a.points().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mtkit_core::FiniteFrame;

    #[test]
    fn spec_documents() {
        let s = io_roundtrip(r#"{"kind":"space","points":2,"opens":[[],[1],[0,1]]}"#).unwrap();
        assert_eq!(s, Document::Space(FinSpace::sierpinski()));
        let l = io_roundtrip(r#"{"kind":"lattice","elements":3,"leq":[[0,0],[0,1],[0,2],[1,1],[1,2],[2,2]]}"#)
            .unwrap();
        assert_eq!(l, Document::Lattice(FiniteFrame::chain(3).lattice().clone()));
        let bad = parse_document(r#"{"kind":"space","points":2,"opens":[[1],[0,1]]}"#);
        assert!(matches!(bad, Err(DocError::Invalid(MtError::NotATopology(_)))));
    }

    #[test]
    fn schema_errors_carry_paths() {
        let err = parse_document(r#"{"kind":"space","points":2,"opens":[[],["x"]]}"#).unwrap_err();
        match err {
            DocError::Schema { path, .. } => assert_eq!(path, "opens[1][0]"),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_document(r#"{"kind":"cube"}"#).unwrap_err();
        assert!(matches!(err, DocError::Schema { .. }));
        let err = parse_document("not json").unwrap_err();
        assert!(matches!(err, DocError::Schema { .. }));
        let err = parse_document(r#"{"points":2}"#).unwrap_err();
        assert!(matches!(err, DocError::Schema { .. }));
    }

    #[test]
    fn canonical_output() {
        let doc = io_roundtrip(r#"{"kind":"space","points":2,"opens":[[0,1],[1],[]]}"#).unwrap();
        assert_eq!(
            doc.to_value().to_string(),
            r#"{"kind":"space","opens":[[],[1],[0,1]],"points":2}"#
        );
        let p = io_roundtrip(r#"{"kind":"poset","elements":2,"leq":[[1,1],[0,0]]}"#).unwrap();
        assert_eq!(p.kind(), "poset");
    }
}
