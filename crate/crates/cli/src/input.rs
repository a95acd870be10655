use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use broadcast_core::generators::InstanceSpec;
use broadcast_core::{Graph, LabeledGraph};
use clap::Args;
use sha2::{Digest, Sha256};

/// Exactly one graph source.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Graph file, either `n m` followed by `u v` lines or a `vertices`
    /// line followed by `name name` lines.
    #[arg(long, short)]
    pub graph: Option<PathBuf>,
    /// Generated instance such as `cycle:6`, `gk:1` or `random-tree:9:7`.
    #[arg(long = "gen")]
    pub generator: Option<InstanceSpec>,
}

impl Input {
    pub fn load(&self) -> Result<LabeledGraph> {
        match (&self.graph, &self.generator) {
            (Some(path), None) => read_graph(path),
            (None, Some(spec)) => Ok(spec.build()?),
            _ => bail!("give exactly one of --graph and --gen"),
        }
    }
}

pub fn read_graph(path: &Path) -> Result<LabeledGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Accepts both text formats, told apart by a leading `vertices` line.
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let labeled = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("vertices"));
    if labeled {
        return Ok(LabeledGraph::parse(text)?);
    }
    let g = Graph::parse_edge_list(text)?;
    let names = (0..g.n()).map(|v| v.to_string()).collect();
    Ok(LabeledGraph::from_parts(g, names))
}

/// Hex SHA-256 of the canonical `n m` edge list.
pub fn graph_hash(g: &Graph) -> String {
    let digest = Sha256::digest(g.to_edge_list().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn vertex(lg: &LabeledGraph, name: &str) -> Result<usize> {
    match lg.try_id(name) {
        Some(v) => Ok(v),
        None => bail!("no vertex named {name:?}"),
    }
}

pub fn vertices(lg: &LabeledGraph, names: &[String]) -> Result<Vec<usize>> {
    names.iter().map(|s| vertex(lg, s)).collect()
}
