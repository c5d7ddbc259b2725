//! JSON graph files.
//!
//! ```json
//! {
//!   "vertices": ["v1", "v2", "v3"],
//!   "edges": [
//!     {"id": "e1", "from": "v1", "to": "v2", "gain": "i"},
//!     {"id": "e2", "from": "v2", "to": "v3", "gain": [0, 0.70710678118654752, 0.70710678118654752, 0]}
//!   ]
//! }
//! ```
//!
//! The gain belongs to the `from → to` orientation; the reverse orientation
//! carries its conjugate.

use std::collections::HashMap;
use std::path::Path;

use log::warn;
use qgain_core::{GainGraph, OrientedEdge, Quaternion};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Gains further than this from unit norm are rejected.
pub const RENORMALIZE_LIMIT: f64 = 1e-6;

/// Deviations below this are left untouched, so emitted files parse back to
/// identical bits.
const SILENT_DEVIATION: f64 = 1e-12;

const TOKENS: [&str; 8] = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub id: String,
    pub from: String,
    pub to: String,
    pub gain: GainSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GainSpec {
    Token(String),
    Components([f64; 4]),
}

impl GainSpec {
    /// Exact Lipschitz units are written as tokens, anything else as a
    /// component array.
    pub fn from_quaternion(q: Quaternion) -> Self {
        match Quaternion::LIPSCHITZ_UNITS.iter().position(|u| *u == q) {
            Some(k) => GainSpec::Token(TOKENS[k].to_string()),
            None => GainSpec::Components(q.components()),
        }
    }

    fn resolve(&self, edge: &str) -> Result<Quaternion, Error> {
        match self {
            GainSpec::Token(t) => TOKENS
                .iter()
                .position(|s| s == t)
                .map(|k| Quaternion::LIPSCHITZ_UNITS[k])
                .ok_or_else(|| Error::UnknownToken {
                    edge: edge.to_string(),
                    token: t.clone(),
                }),
            GainSpec::Components(c) => {
                let q = Quaternion::from_components(*c)?;
                let norm = q.norm();
                let deviation = (norm - 1.0).abs();
                if deviation > RENORMALIZE_LIMIT {
                    return Err(Error::NonUnitGain {
                        edge: edge.to_string(),
                        norm,
                    });
                }
                if deviation <= SILENT_DEVIATION {
                    return Ok(q);
                }
                warn!("edge {edge}: gain norm {norm} renormalized to 1");
                Ok(q.normalized()?)
            }
        }
    }
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn to_graph(&self) -> Result<GainGraph, Error> {
        let index: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.as_str(), k))
            .collect();
        let lookup = |edge: &str, label: &str| {
            index
                .get(label)
                .copied()
                .ok_or_else(|| Error::UnknownVertex {
                    edge: edge.to_string(),
                    label: label.to_string(),
                })
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let from = lookup(&e.id, &e.from)?;
            let to = lookup(&e.id, &e.to)?;
            edges.push(OrientedEdge::new(
                e.id.clone(),
                from,
                to,
                e.gain.resolve(&e.id)?,
            ));
        }
        Ok(GainGraph::new(self.vertices.clone(), edges)?)
    }

    pub fn from_graph(graph: &GainGraph) -> Self {
        let labels = graph.labels();
        Self {
            vertices: labels.to_vec(),
            edges: graph
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    id: e.id.clone(),
                    from: labels[e.from].clone(),
                    to: labels[e.to].clone(),
                    gain: GainSpec::from_quaternion(e.gain),
                })
                .collect(),
        }
    }
}
