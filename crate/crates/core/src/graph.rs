//! Simple connected graphs over dense vertex ids, hop distances, balls and
//! the broadcast / multipacking value types built on top of them.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Immutable simple connected graph on vertices `0..n`.
#[derive(Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    dist: OnceLock<DistanceMatrix>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            edges: self.edges.clone(),
            adj: self.adj.clone(),
            dist: self.dist.clone(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Validates `edges` and builds the adjacency lists. Edges are stored
    /// normalized as `(min, max)` and sorted.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::ParamOutOfRange("graph needs at least one vertex".into()));
        }
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::IdOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph {
            n,
            edges: seen.into_iter().collect(),
            adj,
            dist: OnceLock::new(),
        };
        if !g.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// `u ~ v`: equal or adjacent.
    pub fn is_close(&self, u: usize, v: usize) -> bool {
        u == v || self.is_adjacent(u, v)
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::IdOutOfRange { id: v, n: self.n })
        }
    }

    /// Closed neighbourhood `N[v]`, sorted.
    pub fn closed_neighbourhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
        out
    }

    /// All-pairs hop distances, computed once on first use.
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| DistanceMatrix::compute(self))
    }

    /// Vertices within distance `k` of `v`, sorted by id. Always contains `v`.
    pub fn ball(&self, v: usize, k: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.distances().ball(v, k))
    }

    /// Errors with `TrivialGraph` on the one-vertex graph.
    pub fn require_nontrivial(&self) -> Result<()> {
        if self.n < 2 {
            Err(Error::TrivialGraph)
        } else {
            Ok(())
        }
    }

    /// Parses the edge-list text format: a header `n m` followed by `m`
    /// lines `u v`. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two fields, found {}", fields.len()),
                });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|e| Error::Parse {
                    line: line_no,
                    msg: format!("{s:?}: {e}"),
                })
            };
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            match header {
                None => header = Some((a, b)),
                Some(_) => edges.push((a, b)),
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dot(&self, names: Option<&[String]>) -> String {
        let label = |v: usize| match names {
            Some(ns) => ns[v].clone(),
            None => v.to_string(),
        };
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", label(v));
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Hop distances with eccentricities, diameter and radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    dist: Vec<Vec<usize>>,
    ecc: Vec<usize>,
    diameter: usize,
    radius: usize,
}

impl DistanceMatrix {
    fn compute(g: &Graph) -> DistanceMatrix {
        let n = g.n();
        let mut dist = vec![vec![usize::MAX; n]; n];
        let mut queue = VecDeque::new();
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbours(u) {
                    if row[w] == usize::MAX {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let ecc: Vec<usize> = dist.iter().map(|row| *row.iter().max().unwrap()).collect();
        let diameter = *ecc.iter().max().unwrap();
        let radius = *ecc.iter().min().unwrap();
        DistanceMatrix {
            dist,
            ecc,
            diameter,
            radius,
        }
    }

    pub fn n(&self) -> usize {
        self.dist.len()
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u][v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.dist[u]
    }

    pub fn ecc(&self, v: usize) -> usize {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[usize] {
        &self.ecc
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn ball(&self, v: usize, k: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.dist[v][u] <= k).collect()
    }

    pub fn ball_size(&self, v: usize, k: usize) -> usize {
        self.dist[v].iter().filter(|&&d| d <= k).count()
    }

    pub fn peripheral(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.ecc[v] == self.diameter).collect()
    }

    pub fn centers(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.ecc[v] == self.radius).collect()
    }

    /// The canonical shortest `u`-`v` path: from each vertex step to the
    /// lowest-id neighbour one hop closer to `v`.
    pub fn shortest_path(&self, g: &Graph, u: usize, v: usize) -> Vec<usize> {
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let want = self.dist[cur][v] - 1;
            cur = *g
                .neighbours(cur)
                .iter()
                .find(|&&w| self.dist[w][v] == want)
                .expect("connected graph has a next hop");
            path.push(cur);
        }
        path
    }
}

/// The canonical diametrical path `v_0, ..., v_d`: `v_0` is the lowest-id
/// peripheral vertex, `v_d` the lowest-id vertex at distance `d` from it,
/// and each step goes to the lowest-id neighbour that stays on a shortest path.
pub fn diametrical_path(g: &Graph) -> Vec<usize> {
    let d = g.distances();
    let start = d.peripheral()[0];
    let end = (0..g.n())
        .find(|&v| d.dist(start, v) == d.diameter())
        .expect("peripheral vertex reaches the diameter");
    d.shortest_path(g, start, end)
}

/// A broadcast: one non-negative power per vertex, bounded by eccentricity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Broadcast {
    power: Vec<usize>,
}

impl Broadcast {
    pub fn new(g: &Graph, power: Vec<usize>) -> Result<Broadcast> {
        if power.len() != g.n() {
            return Err(Error::ParamOutOfRange(format!(
                "broadcast has {} entries for {} vertices",
                power.len(),
                g.n()
            )));
        }
        let d = g.distances();
        for (v, &p) in power.iter().enumerate() {
            if p > d.ecc(v) {
                return Err(Error::PowerExceedsEccentricity {
                    vertex: v,
                    power: p,
                    ecc: d.ecc(v),
                });
            }
        }
        Ok(Broadcast { power })
    }

    /// Builds a broadcast from `(vertex, power)` pairs; repeated vertices
    /// keep the largest power.
    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Broadcast> {
        let mut power = vec![0; g.n()];
        for &(v, p) in pairs {
            g.check_vertex(v)?;
            power[v] = power[v].max(p);
        }
        Broadcast::new(g, power)
    }

    pub fn power(&self, v: usize) -> usize {
        self.power[v]
    }

    pub fn powers(&self) -> &[usize] {
        &self.power
    }

    pub fn cost(&self) -> usize {
        self.power.iter().sum()
    }

    /// Broadcasting vertices (`V_f^+`) with their powers.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.power
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(v, &p)| (v, p))
            .collect()
    }
}

/// A vertex subset subject to ball-capacity constraints up to `horizon`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multipacking {
    members: Vec<usize>,
    horizon: usize,
}

impl Multipacking {
    /// Members are sorted and deduplicated; validity is not checked here.
    pub fn new(mut members: Vec<usize>, horizon: usize) -> Multipacking {
        members.sort_unstable();
        members.dedup();
        Multipacking { members, horizon }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A graph whose vertices carry names.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub names: Vec<String>,
}

impl LabeledGraph {
    /// Parses the labeled edge format: a `vertices` line listing names in id
    /// order, then one `name name` edge per line. `#` starts a comment.
    pub fn parse(text: &str) -> Result<LabeledGraph> {
        let mut names: Option<Vec<String>> = None;
        let mut index = HashMap::new();
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] == "vertices" {
                let list: Vec<String> = fields[1..].iter().map(|s| s.to_string()).collect();
                for (i, name) in list.iter().enumerate() {
                    index.insert(name.clone(), i);
                }
                names = Some(list);
                continue;
            }
            if names.is_none() || fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "expected `vertices` header, then `name name` edges".into(),
                });
            }
            let lookup = |s: &str| {
                index.get(s).copied().ok_or_else(|| Error::Parse {
                    line: line_no,
                    msg: format!("unknown vertex {s:?}"),
                })
            };
            edges.push((lookup(fields[0])?, lookup(fields[1])?));
        }
        let names = names.ok_or(Error::Parse {
            line: 0,
            msg: "missing `vertices` line".into(),
        })?;
        let graph = Graph::new(names.len(), &edges)?;
        Ok(LabeledGraph { graph, names })
    }

    /// Writes the format read by [`LabeledGraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.names.join(" "));
        for &(u, v) in self.graph.edges() {
            let _ = writeln!(out, "{} {}", self.names[u], self.names[v]);
        }
        out
    }

    pub fn from_parts(graph: Graph, names: Vec<String>) -> LabeledGraph {
        assert_eq!(graph.n(), names.len());
        LabeledGraph { graph, names }
    }

    /// Id of the vertex called `name`. Panics on unknown names.
    pub fn id(&self, name: &str) -> usize {
        self.try_id(name)
            .unwrap_or_else(|| panic!("no vertex named {name:?}"))
    }

    pub fn try_id(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn ids(&self, names: &[&str]) -> Vec<usize> {
        names.iter().map(|s| self.id(s)).collect()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names_of(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.names[v].clone()).collect()
    }
}
