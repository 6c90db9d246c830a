//! JSON records: configuration certificates, classifications and scan lines.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::config::{Configuration, Violation};
use crate::graph::{Graph, VertexSet};
use crate::rational;
use crate::synthesis::Classification;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphRecord {
    pub fn of(g: &Graph) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, CertificateError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edge_list(self.n, &edges).map_err(|e| CertificateError::Malformed(e.to_string()))
    }
}

/// A `(k, s)`-configuration as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphRecord>,
    pub k: usize,
    pub s: usize,
    pub sets: Vec<Vec<usize>>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("certificate was issued for a different graph")]
    GraphMismatch,
    #[error("k = {k} but {sets} sets are listed")]
    CountMismatch { k: usize, sets: usize },
    #[error("claimed value {claimed} but k/s = {actual}")]
    ValueMismatch { claimed: String, actual: String },
    #[error("{0}")]
    Violation(Violation),
}

impl CertificateError {
    /// Input that cannot be read as a certificate for this graph at all,
    /// as opposed to a readable certificate that is wrong.
    pub fn is_malformed(&self) -> bool {
        matches!(
            self,
            CertificateError::Malformed(_) | CertificateError::VertexOutOfRange { .. }
        )
    }
}

impl Certificate {
    pub fn from_configuration(c: &Configuration) -> Self {
        Self {
            graph: Some(GraphRecord::of(c.graph())),
            k: c.k(),
            s: c.s(),
            sets: c.sets().iter().map(VertexSet::to_vec).collect(),
            value: rational::format(&c.value()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    /// Reads a certificate, either bare or as the `certificate` field of an
    /// enclosing object such as a classification record.
    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        let malformed = |e: serde_json::Error| CertificateError::Malformed(e.to_string());
        let v: Value = serde_json::from_str(text).map_err(malformed)?;
        let inner = match v.get("certificate") {
            Some(c) if v.get("sets").is_none() => c.clone(),
            _ => v,
        };
        serde_json::from_value(inner).map_err(malformed)
    }

    /// Checks the certificate against `g` and returns it as a configuration.
    pub fn check(&self, g: &Graph) -> Result<Configuration, CertificateError> {
        if let Some(record) = &self.graph {
            if record.to_graph()? != *g {
                return Err(CertificateError::GraphMismatch);
            }
        }
        let n = g.n();
        let mut sets = Vec::with_capacity(self.sets.len());
        for members in &self.sets {
            if let Some(&vertex) = members.iter().find(|&&v| v >= n) {
                return Err(CertificateError::VertexOutOfRange { vertex, n });
            }
            sets.push(VertexSet::from_members(n, members.iter().copied()));
        }
        let claimed = rational::parse(&self.value)
            .ok_or_else(|| CertificateError::Malformed(format!("bad value {:?}", self.value)))?;
        if self.k != sets.len() {
            return Err(CertificateError::CountMismatch {
                k: self.k,
                sets: sets.len(),
            });
        }
        let c = Configuration::new(Arc::new(g.clone()), sets, self.s);
        c.verify().map_err(CertificateError::Violation)?;
        if c.value() != claimed {
            return Err(CertificateError::ValueMismatch {
                claimed: self.value.clone(),
                actual: rational::format(&c.value()),
            });
        }
        Ok(c)
    }
}

/// `{"verdict", "reason", "witness"?, "value"?, "certificate"?}`.
pub fn classification_json(c: &Classification, with_certificate: bool) -> Value {
    let mut out = json!({
        "verdict": c.verdict,
        "reason": c.reason.tag(),
    });
    if let Some(w) = c.reason.witness() {
        out["witness"] = json!(w);
    }
    if let Some(cert) = &c.certificate {
        out["value"] = json!(rational::format(&cert.value()));
        if with_certificate {
            out["certificate"] = serde_json::to_value(Certificate::from_configuration(cert))
                .expect("certificate serializes");
        }
    }
    out
}
