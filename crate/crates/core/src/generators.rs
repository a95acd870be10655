//! Deterministic constructors for the named instance families.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledGraph};

const FIGURE1: &str = include_str!("../data/figure1.txt");
const APPENDIX_TREE: &str = include_str!("../data/appendix_tree.txt");
const APPENDIX_BIG_TREE: &str = include_str!("../data/appendix_big_tree.txt");

fn require(ok: bool, msg: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange(msg.into()))
    }
}

pub fn path_graph(n: usize) -> Result<Graph> {
    require(n >= 2, "path needs n >= 2")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    require(n >= 2, "complete graph needs n >= 2")?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, &edges).expect("Petersen graph is valid")
}

/// Split graph on `2n` vertices: independent `w_i = i`, clique
/// `u_i = n + i`, and `w_i ~ u_j` iff `i = j` or `i = j + 1 (mod n)`.
pub fn trampoline(n: usize) -> Result<LabeledGraph> {
    require(n >= 3, "trampoline needs n >= 3")?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((n + i, n + j));
        }
        edges.push((i, n + i));
        edges.push((i, n + (i + n - 1) % n));
    }
    let names = (1..=n)
        .map(|i| format!("w{i}"))
        .chain((1..=n).map(|i| format!("u{i}")))
        .collect();
    Ok(LabeledGraph::from_parts(Graph::new(2 * n, &edges)?, names))
}

/// `3k` copies of K_{2,4} with parts `{c_i, u_i}` and `{a_i, r_i, s_i, b_i}`,
/// chained by `b_i ~ a_{i+1}`. Block `i` occupies ids `6(i-1)..6i` in the
/// order c, u, a, r, s, b.
pub fn hartnell_mynhardt_gk(k: usize) -> Result<LabeledGraph> {
    require(k >= 1, "G_k needs k >= 1")?;
    let blocks = 3 * k;
    let id = |i: usize, part: usize| 6 * i + part;
    let mut edges = Vec::new();
    let mut names = Vec::new();
    for i in 0..blocks {
        for part in ["c", "u", "a", "r", "s", "b"] {
            names.push(format!("{part}{}", i + 1));
        }
        for x in 0..2 {
            for y in 2..6 {
                edges.push((id(i, x), id(i, y)));
            }
        }
        if i + 1 < blocks {
            edges.push((id(i, 5), id(i + 1, 2)));
        }
    }
    Ok(LabeledGraph::from_parts(Graph::new(6 * blocks, &edges)?, names))
}

pub fn figure1_graph() -> LabeledGraph {
    LabeledGraph::parse(FIGURE1).expect("figure1 data is valid")
}

pub fn appendix_tree() -> LabeledGraph {
    LabeledGraph::parse(APPENDIX_TREE).expect("appendix tree data is valid")
}

pub fn appendix_big_tree() -> LabeledGraph {
    LabeledGraph::parse(APPENDIX_BIG_TREE).expect("appendix big tree data is valid")
}

/// Uniform labelled tree decoded from a Prüfer sequence drawn with a seeded
/// ChaCha8 generator.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 2, "tree needs n >= 2")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("a leaf remains");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges)
}

/// A family name with its parameters, e.g. `cycle:6` or `random-tree:9:7`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub family: String,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
}

impl InstanceSpec {
    pub fn build(&self) -> Result<LabeledGraph> {
        let p = |i: usize| {
            self.params
                .get(i)
                .copied()
                .ok_or_else(|| Error::ParamOutOfRange(format!("{} needs parameter {}", self.family, i + 1)))
        };
        let unlabeled = |g: Graph| {
            let names = (0..g.n()).map(|v| v.to_string()).collect();
            LabeledGraph::from_parts(g, names)
        };
        Ok(match self.family.as_str() {
            "path" => unlabeled(path_graph(p(0)?)?),
            "cycle" => unlabeled(cycle_graph(p(0)?)?),
            "complete" => unlabeled(complete_graph(p(0)?)?),
            "petersen" => unlabeled(petersen()),
            "trampoline" => trampoline(p(0)?)?,
            "gk" => hartnell_mynhardt_gk(p(0)?)?,
            "figure1" => figure1_graph(),
            "appendix-tree" => appendix_tree(),
            "appendix-big-tree" => appendix_big_tree(),
            "random-tree" => unlabeled(random_tree(p(0)?, self.seed.unwrap_or(0))?),
            other => return Err(Error::ParamOutOfRange(format!("unknown family {other:?}"))),
        })
    }
}

impl FromStr for InstanceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<InstanceSpec> {
        let mut parts = s.split(':');
        let family = parts.next().unwrap_or("").to_string();
        let mut nums = Vec::new();
        for part in parts {
            nums.push(part.parse::<u64>().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad parameter {part:?} in {s:?}"),
            })?);
        }
        let seed = if family == "random-tree" && nums.len() >= 2 {
            nums.pop()
        } else {
            None
        };
        Ok(InstanceSpec {
            family,
            params: nums.into_iter().map(|x| x as usize).collect(),
            seed,
        })
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for p in &self.params {
            write!(f, ":{p}")?;
        }
        if let Some(s) = self.seed {
            write!(f, ":{s}")?;
        }
        Ok(())
    }
}
