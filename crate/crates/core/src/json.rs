//! JSON form of tableaux.
//!
//! ```json
//! {"schema_version": 1,
//!  "shape": {"kind": "triangle", "r": 2, "boxes": [[1,1],[1,2],[2,1]]},
//!  "symbol_bound": 4,
//!  "entries": [[1,1,1],[1,2,2],[2,1,3]]}
//! ```
//!
//! `kind` is `square`, `triangle`, `strip` (with `width` and `word`) or
//! `explicit`. Entries follow the canonical box order. `symbol_bound`
//! defaults to the largest entry.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::strips::{word_string, Step, StripShape};
use crate::tableau::{LatticeBox, Shape, ShapeKind, Tableau};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    pub boxes: Vec<[u32; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub shape: ShapeJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol_bound: Option<u32>,
    pub entries: Vec<[u32; 3]>,
}

fn default_version() -> u32 {
    SCHEMA_VERSION
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        let (kind, r, width, word) = match t.shape().kind() {
            ShapeKind::Square { r } => ("square", Some(*r), None, None),
            ShapeKind::Triangle { n } => ("triangle", Some(*n), None, None),
            ShapeKind::Strip { r, width, word } => ("strip", Some(*r), Some(*width), Some(word_string(word))),
            ShapeKind::Explicit => ("explicit", None, None, None),
        };
        TableauJson {
            schema_version: SCHEMA_VERSION,
            shape: ShapeJson {
                kind: kind.into(),
                r,
                width,
                word,
                boxes: t.shape().boxes().iter().map(|b| [b.x, b.y]).collect(),
            },
            symbol_bound: Some(t.symbol_bound()),
            entries: t.iter().map(|(b, v)| [b.x, b.y, v]).collect(),
        }
    }
}

fn to_box(x: u32, y: u32) -> Result<LatticeBox> {
    if x == 0 || y == 0 {
        return invalid(format!("box ({x}, {y}) is outside the quadrant"));
    }
    Ok(LatticeBox::new(x, y))
}

impl TableauJson {
    fn shape(&self) -> Result<Shape> {
        let s = &self.shape;
        let need_r = || match s.r {
            Some(r) => Ok(r),
            None => invalid(format!("shape kind {} needs r", s.kind)),
        };
        let built = match s.kind.as_str() {
            "square" => Shape::square(need_r()?),
            "triangle" => Shape::triangle(need_r()?),
            "strip" => {
                let (Some(width), Some(word)) = (s.width, s.word.as_deref()) else {
                    return invalid("strip shapes need width and word");
                };
                StripShape::new(need_r()?, width, Step::parse_word(word)?)?.shape().as_ref().clone()
            }
            "explicit" => {
                let boxes = s.boxes.iter().map(|&[x, y]| to_box(x, y)).collect::<Result<Vec<_>>>()?;
                return Shape::explicit(boxes);
            }
            other => return invalid(format!("unknown shape kind {other:?}")),
        };
        let listed = s.boxes.iter().map(|&[x, y]| to_box(x, y)).collect::<Result<BTreeSet<_>>>()?;
        if !s.boxes.is_empty() && (listed.len() != s.boxes.len() || !built.boxes().iter().eq(listed.iter())) {
            return invalid(format!("listed boxes do not match the {} shape", s.kind));
        }
        Ok(built)
    }

    pub fn to_tableau(&self) -> Result<Tableau> {
        if self.schema_version != SCHEMA_VERSION {
            return invalid(format!("unsupported schema version {}", self.schema_version));
        }
        let shape = Arc::new(self.shape()?);
        let mut entries = vec![0u32; shape.len()];
        for &[x, y, v] in &self.entries {
            let b = to_box(x, y)?;
            let Some(i) = shape.index_of(b) else {
                return invalid(format!("entry at {b} lies outside the shape"));
            };
            if entries[i] != 0 {
                return invalid(format!("box {b} is filled twice"));
            }
            if v == 0 {
                return invalid(format!("symbol at {b} must be positive"));
            }
            entries[i] = v;
        }
        if let Some(i) = entries.iter().position(|&v| v == 0) {
            return invalid(format!("box {} has no entry", shape.boxes()[i]));
        }
        let bound = self.symbol_bound.unwrap_or_else(|| entries.iter().copied().max().unwrap_or(1));
        Tableau::new(shape, entries, bound)
    }
}

pub fn tableau_to_json(t: &Tableau) -> String {
    serde_json::to_string(&TableauJson::from(t)).expect("plain data serializes")
}

pub fn tableau_from_json(s: &str) -> Result<Tableau> {
    let parsed: TableauJson =
        serde_json::from_str(s).map_err(|e| crate::Error::InvalidInput(format!("bad tableau JSON: {e}")))?;
    parsed.to_tableau()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn round_trips() {
        for t in [examples::staircase_size6_torsion3(), examples::reflection_input(), examples::strip_example()] {
            let s = tableau_to_json(&t);
            let back = tableau_from_json(&s).unwrap();
            assert_eq!(back, t);
            assert_eq!(tableau_to_json(&back), s);
        }
        let st = examples::strip_example_shape();
        let t = Tableau::from_fn(st.shape().clone(), 30, |b| b.anti_diagonal()).unwrap();
        assert_eq!(tableau_from_json(&tableau_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn rejects_bad_input() {
        let dup = r#"{"shape":{"kind":"triangle","r":1,"boxes":[]},"entries":[[1,1,1],[1,1,2]]}"#;
        assert!(tableau_from_json(dup).unwrap_err().to_string().contains("twice"));
        let outside = r#"{"shape":{"kind":"triangle","r":1,"boxes":[]},"entries":[[2,1,1]]}"#;
        assert!(tableau_from_json(outside).unwrap_err().to_string().contains("outside"));
        let missing = r#"{"shape":{"kind":"triangle","r":2,"boxes":[]},"entries":[[1,1,1]]}"#;
        assert!(tableau_from_json(missing).unwrap_err().to_string().contains("no entry"));
        let mismatch = r#"{"shape":{"kind":"triangle","r":1,"boxes":[[1,2]]},"entries":[[1,1,1]]}"#;
        assert!(tableau_from_json(mismatch).is_err());
        let version = r#"{"schema_version":9,"shape":{"kind":"triangle","r":1,"boxes":[]},"entries":[[1,1,1]]}"#;
        assert!(tableau_from_json(version).is_err());
    }

    #[test]
    fn bound_defaults_to_largest_entry() {
        let s = r#"{"shape":{"kind":"explicit","boxes":[[1,1],[2,1]]},"entries":[[1,1,2],[2,1,5]]}"#;
        assert_eq!(tableau_from_json(s).unwrap().symbol_bound(), 5);
    }
}
