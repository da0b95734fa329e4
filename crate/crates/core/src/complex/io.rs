//! JSON manifold files.
//!
//! ```json
//! { "name": "square", "dim": 2,
//!   "faces": [ {"id": "v0", "dim": 0, "orientation": 1}, ... ],
//!   "incidence": [ ["e0", "v0", 1], ... ] }
//! ```

use serde::{Deserialize, Serialize};

use super::{CornerComplex, Face, IncidenceEntry};
use crate::error::ComplexError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldFile {
    pub name: String,
    pub dim: usize,
    pub faces: Vec<FaceRecord>,
    #[serde(default)]
    pub incidence: Vec<(String, String, i8)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceRecord {
    pub id: String,
    pub dim: usize,
    pub orientation: i8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl ManifoldFile {
    pub fn from_complex(c: &CornerComplex) -> Self {
        Self {
            name: c.name().to_string(),
            dim: c.dim(),
            faces: c
                .faces()
                .iter()
                .map(|f| FaceRecord {
                    id: f.id.clone(),
                    dim: f.dim,
                    orientation: f.orientation,
                    label: f.label.clone(),
                })
                .collect(),
            incidence: c
                .incidence_entries()
                .into_iter()
                .map(|e| (e.high, e.low, e.sign))
                .collect(),
        }
    }

    pub fn into_complex(self) -> Result<CornerComplex, ComplexError> {
        let faces = self
            .faces
            .into_iter()
            .map(|f| Face {
                id: f.id,
                dim: f.dim,
                orientation: f.orientation,
                label: f.label,
            })
            .collect();
        let incidences = self
            .incidence
            .into_iter()
            .map(|(h, l, s)| IncidenceEntry::new(h, l, s))
            .collect();
        CornerComplex::new(self.name, self.dim, faces, incidences)
    }

    pub fn parse(text: &str) -> Result<Self, ComplexError> {
        serde_json::from_str(text).map_err(|e| ComplexError::Json(e.to_string()))
    }
}

impl CornerComplex {
    pub fn from_json(text: &str) -> Result<Self, ComplexError> {
        ManifoldFile::parse(text)?.into_complex()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ManifoldFile::from_complex(self)).expect("serializable")
    }
}
