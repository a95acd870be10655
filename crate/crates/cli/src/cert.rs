//! Standalone certificate files: `{type, graph_hash, payload}`.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use broadcast_core::chordal::check_strong_elim;
use broadcast_core::exact::{verify_dominating_broadcast, verify_multipacking};
use broadcast_core::graph::diametrical_path;
use broadcast_core::lp::{verify_fractional, FractionalWeighting, Rational};
use broadcast_core::treemp::{verify_split_set, SplitSet};
use broadcast_core::{Broadcast, LabeledGraph};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::input::{graph_hash, vertex, vertices};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    Broadcast,
    Multipacking,
    Fractional,
    StrongElim,
    SplitSet,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateFile {
    #[serde(rename = "type")]
    pub kind: CertKind,
    pub graph_hash: String,
    pub payload: Value,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BroadcastPayload {
    pub powers: BTreeMap<String, usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MultipackingPayload {
    pub members: Vec<String>,
    /// Horizon; the diameter when absent.
    #[serde(default)]
    pub k: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FractionalPayload {
    /// Unlisted vertices weigh zero.
    pub weights: BTreeMap<String, Rational>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StrongElimPayload {
    pub ordering: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SplitSetPayload {
    /// Diametrical path; the canonical one when absent.
    #[serde(default)]
    pub path: Option<Vec<String>>,
    pub edges: Vec<(String, String)>,
}

impl CertificateFile {
    pub fn new(lg: &LabeledGraph, kind: CertKind, payload: impl Serialize) -> CertificateFile {
        CertificateFile {
            kind,
            graph_hash: graph_hash(&lg.graph),
            payload: serde_json::to_value(payload).expect("payload serializes"),
        }
    }
}

pub struct Verdict {
    pub valid: bool,
    pub report: Value,
}

/// Checks a certificate against `lg`. Malformed payloads are reported as
/// invalid rather than as errors.
pub fn verify(lg: &LabeledGraph, cert: &CertificateFile) -> Verdict {
    let hash_ok = cert.graph_hash == graph_hash(&lg.graph);
    let (valid, mut report) = match check(lg, cert) {
        Ok((valid, report)) => (valid, report),
        Err(e) => (false, json!({ "error": format!("{e:#}") })),
    };
    report["type"] = serde_json::to_value(cert.kind).expect("kind serializes");
    report["graph_hash_matches"] = json!(hash_ok);
    report["valid"] = json!(valid && hash_ok);
    Verdict {
        valid: valid && hash_ok,
        report,
    }
}

fn check(lg: &LabeledGraph, cert: &CertificateFile) -> Result<(bool, Value)> {
    let g = &lg.graph;
    let payload = cert.payload.clone();
    Ok(match cert.kind {
        CertKind::Broadcast => {
            let p: BroadcastPayload = serde_json::from_value(payload)?;
            let mut pairs = Vec::new();
            for (name, &k) in &p.powers {
                pairs.push((vertex(lg, name)?, k));
            }
            let b = Broadcast::from_pairs(g, &pairs)?;
            let c = verify_dominating_broadcast(g, &b);
            let report = json!({ "cost": b.cost(), "uncovered": lg.names_of(&c.uncovered) });
            (c.dominating, report)
        }
        CertKind::Multipacking => {
            let p: MultipackingPayload = serde_json::from_value(payload)?;
            let members = vertices(lg, &p.members)?;
            let k = p.k.unwrap_or(g.distances().diameter());
            let c = verify_multipacking(g, &members, k)?;
            let violation = c.violation.map(|(v, s)| json!({ "vertex": lg.name(v), "s": s }));
            (c.valid, json!({ "size": members.len(), "k": k, "violation": violation }))
        }
        CertKind::Fractional => {
            let p: FractionalPayload = serde_json::from_value(payload)?;
            let mut w = vec![Rational::zero(); g.n()];
            for (name, q) in p.weights {
                w[vertex(lg, &name)?] = q;
            }
            let y = FractionalWeighting::new(w)?;
            let c = verify_fractional(g, &y);
            let violation = c.violation.map(|(v, s)| json!({ "vertex": lg.name(v), "s": s }));
            (c.valid, json!({ "total": y.total(), "violation": violation }))
        }
        CertKind::StrongElim => {
            let p: StrongElimPayload = serde_json::from_value(payload)?;
            let order = vertices(lg, &p.ordering)?;
            (check_strong_elim(g, &order)?, json!({}))
        }
        CertKind::SplitSet => {
            let p: SplitSetPayload = serde_json::from_value(payload)?;
            let path = match &p.path {
                Some(names) => vertices(lg, names)?,
                None => diametrical_path(g),
            };
            let mut edges = Vec::new();
            for (u, v) in &p.edges {
                let (u, v) = (vertex(lg, u)?, vertex(lg, v)?);
                if !g.is_adjacent(u, v) {
                    bail!("{} {} is not an edge", lg.name(u), lg.name(v));
                }
                edges.push((u, v));
            }
            let ok = verify_split_set(g, &path, &SplitSet { edges })?;
            (ok, json!({ "path": lg.names_of(&path) }))
        }
    })
}
