//! Shadow trees and the direct maximum-multipacking algorithm for trees.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{diametrical_path, Graph, Multipacking};

/// A branch `B_i`: the path from `path[index]` out to `u_i`, excluding the
/// path vertex itself. Its length is `alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub index: usize,
    pub vertices: Vec<usize>,
}

impl Branch {
    pub fn alpha(&self) -> usize {
        self.vertices.len()
    }

    /// Path positions `[i - alpha, i + alpha]` spanned by the triangle.
    pub fn span(&self) -> (i64, i64) {
        let (i, a) = (self.index as i64, self.alpha() as i64);
        (i - a, i + a)
    }
}

fn nested_in(a: (i64, i64), b: (i64, i64)) -> bool {
    b.0 <= a.0 && a.1 <= b.1
}

/// Shadow tree of a tree with respect to its canonical diametrical path.
/// All vertices are ids of the original tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowTree {
    pub path: Vec<usize>,
    pub branches: Vec<Branch>,
    /// Indices into `branches` whose triangle lies inside another one.
    pub nested: Vec<usize>,
    /// Path edges `(path[j], path[j + 1])` inside no triangle.
    pub free_edges: Vec<(usize, usize)>,
}

impl ShadowTree {
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.path
            .iter()
            .chain(self.branches.iter().flat_map(|b| b.vertices.iter()))
            .copied()
            .collect()
    }

    pub fn triangles(&self) -> Vec<(i64, i64)> {
        self.branches.iter().map(Branch::span).collect()
    }

    /// Edges of the shadow tree as a subgraph of the original.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.path.windows(2).map(|w| (w[0], w[1])).collect();
        for b in &self.branches {
            let mut prev = self.path[b.index];
            for &v in &b.vertices {
                out.push((prev, v));
                prev = v;
            }
        }
        for e in out.iter_mut() {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        out.sort_unstable();
        out
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = std::collections::HashMap::new();
        for (u, v) in self.edges() {
            *deg.entry(u).or_insert(0) += 1;
            *deg.entry(v).or_insert(0) += 1;
        }
        deg.values().copied().max().unwrap_or(0)
    }
}

fn nested_indices(branches: &[Branch]) -> Vec<usize> {
    (0..branches.len())
        .filter(|&i| {
            (0..branches.len()).any(|j| j != i && nested_in(branches[i].span(), branches[j].span()))
        })
        .collect()
}

fn free_edges(path: &[usize], branches: &[Branch]) -> Vec<(usize, usize)> {
    (0..path.len().saturating_sub(1))
        .filter(|&j| {
            let j = j as i64;
            !branches.iter().any(|b| {
                let (lo, hi) = b.span();
                lo <= j && j < hi
            })
        })
        .map(|j| (path[j], path[j + 1]))
        .collect()
}

fn require_tree(g: &Graph) -> Result<()> {
    g.require_nontrivial()?;
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(())
}

/// For each path vertex, keeps one longest path leaving the diametrical
/// path (farthest vertex, lowest id on ties).
pub fn shadow_tree(g: &Graph) -> Result<ShadowTree> {
    require_tree(g)?;
    let d = g.distances();
    let path = diametrical_path(g);
    let mut on_path = vec![false; g.n()];
    for &v in &path {
        on_path[v] = true;
    }
    let mut branches = Vec::new();
    for (i, &vi) in path.iter().enumerate() {
        // U_i: reachable from v_i without touching another path vertex.
        let mut seen = vec![false; g.n()];
        seen[vi] = true;
        let mut stack = vec![vi];
        let mut reach = Vec::new();
        while let Some(x) = stack.pop() {
            for &y in g.neighbours(x) {
                if !seen[y] && !on_path[y] {
                    seen[y] = true;
                    reach.push(y);
                    stack.push(y);
                }
            }
        }
        let Some(&u) = reach.iter().min_by_key(|&&u| (std::cmp::Reverse(d.dist(vi, u)), u)) else {
            continue;
        };
        let mut vertices = d.shortest_path(g, vi, u);
        vertices.remove(0);
        branches.push(Branch { index: i, vertices });
    }
    Ok(ShadowTree {
        nested: nested_indices(&branches),
        free_edges: free_edges(&path, &branches),
        path,
        branches,
    })
}

/// The shadow tree as a graph on its own vertices, which keep their
/// relative id order. Returns the graph and the original id of each vertex.
pub fn shadow_graph(s: &ShadowTree) -> (Graph, Vec<usize>) {
    let ids: Vec<usize> = s.vertices().into_iter().collect();
    let local = |v: usize| ids.binary_search(&v).expect("shadow vertex");
    let edges: Vec<(usize, usize)> = s.edges().iter().map(|&(u, v)| (local(u), local(v))).collect();
    (Graph::new(ids.len(), &edges).expect("shadow tree is a tree"), ids)
}

/// Path edges recorded by the algorithm, as `(v_c, v_{c-1})` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SplitSet {
    pub edges: Vec<(usize, usize)>,
}

/// True iff every component of `g - s` has positive even diameter and
/// meets `path` in one of its diametrical paths.
pub fn verify_split_set(g: &Graph, path: &[usize], s: &SplitSet) -> Result<bool> {
    let on_path = |u: usize, v: usize| {
        path.windows(2)
            .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
    };
    for &(u, v) in &s.edges {
        if !on_path(u, v) {
            return Err(Error::EdgeNotOnPath(u, v));
        }
    }
    let cut = |u: usize, v: usize| s.edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
    let mut comp = vec![usize::MAX; g.n()];
    let mut count = 0;
    for start in 0..g.n() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in g.neighbours(x) {
                if comp[y] == usize::MAX && !cut(x, y) {
                    comp[y] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    // Distances inside a component of a tree equal distances in the tree.
    let d = g.distances();
    for c in 0..count {
        let members: Vec<usize> = (0..g.n()).filter(|&v| comp[v] == c).collect();
        let diam = members
            .iter()
            .flat_map(|&u| members.iter().map(move |&v| d.dist(u, v)))
            .max()
            .unwrap_or(0);
        let on: Vec<usize> = path.iter().copied().filter(|&v| comp[v] == c).collect();
        let path_len = on.len().saturating_sub(1);
        if diam == 0 || diam % 2 == 1 || path_len != diam {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One iteration of the main loop, or the closing steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeMpStep {
    /// Loop iteration, from 1; 0 for the steps outside the loop.
    pub iteration: usize,
    pub op: String,
    pub multipacking: Vec<usize>,
    pub split: Vec<(usize, usize)>,
    pub path: Vec<usize>,
    /// |V(T)| after the step.
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeMpRun {
    pub multipacking: Multipacking,
    pub split: SplitSet,
    pub trace: Vec<TreeMpStep>,
}

struct Work {
    path: Vec<usize>,
    branches: Vec<Branch>,
    m: Vec<usize>,
    s: Vec<(usize, usize)>,
    trace: Vec<TreeMpStep>,
    iteration: usize,
}

impl Work {
    fn size(&self) -> usize {
        self.path.len() + self.branches.iter().map(Branch::alpha).sum::<usize>()
    }

    fn log(&mut self, op: impl Into<String>) {
        let step = TreeMpStep {
            iteration: self.iteration,
            op: op.into(),
            multipacking: self.m.clone(),
            split: self.s.clone(),
            path: self.path.clone(),
            size: self.size(),
        };
        self.trace.push(step);
    }

    fn sort(&mut self) {
        self.branches.sort_by_key(|b| b.index);
    }

    /// Makes the leading endpath the first branch when that branch is the
    /// only one and longer than it.
    fn swap_leading(&mut self) -> bool {
        if self.branches.len() != 1 {
            return false;
        }
        let b = &self.branches[0];
        let c = b.index;
        if b.alpha() <= c {
            return false;
        }
        let mut path: Vec<usize> = b.vertices.iter().rev().copied().collect();
        let new_index = path.len();
        path.extend_from_slice(&self.path[c..]);
        let old: Vec<usize> = self.path[..c].iter().rev().copied().collect();
        self.path = path;
        self.branches.clear();
        if !old.is_empty() {
            self.branches.push(Branch {
                index: new_index,
                vertices: old,
            });
        }
        true
    }

    /// Removes the first nested triangle in path order, if any.
    fn drop_nested(&mut self) -> Option<usize> {
        let i = nested_indices(&self.branches).into_iter().next()?;
        Some(self.branches.remove(i).index)
    }

    fn trailing_free_edges(&self) -> i64 {
        let d = self.path.len() as i64 - 1;
        match self.branches.last() {
            Some(b) => d - (b.index + b.alpha()) as i64,
            None => d,
        }
    }

    fn trim_end(&mut self) {
        let v = *self.path.last().expect("non-empty path");
        self.m.push(v);
        let keep = self.path.len() - 3;
        self.path.truncate(keep);
    }
}

/// |V(T)| at the start and after each loop iteration.
pub fn iteration_sizes(run: &TreeMpRun) -> Vec<usize> {
    let mut out = vec![run.trace[0].size];
    for (k, step) in run.trace.iter().enumerate() {
        let last_of_iteration = step.iteration > 0
            && run.trace.get(k + 1).is_none_or(|next| next.iteration != step.iteration);
        if last_of_iteration {
            out.push(step.size);
        }
    }
    out
}

/// Runs the algorithm on the shadow tree of `g`, recording every step.
pub fn find_tree_multipacking_traced(g: &Graph) -> Result<TreeMpRun> {
    let shadow = shadow_tree(g)?;
    let mut w = Work {
        path: shadow.path,
        branches: shadow.branches,
        m: Vec::new(),
        s: Vec::new(),
        trace: Vec::new(),
        iteration: 0,
    };
    w.log("shadow");
    while w.size() > 3 {
        w.iteration += 1;
        if w.swap_leading() {
            w.log("swap leading endpath");
        }
        while let Some(i) = w.drop_nested() {
            w.log(format!("delete nested triangle at {}", w.path[i]));
        }
        let t = w.trailing_free_edges();
        if t >= 3 {
            w.trim_end();
            w.log("take end, trim three");
        } else if t == 2 {
            w.trim_end();
            let b = w.branches.pop().expect("a last branch");
            let tail = w.path.split_off(b.index + 1);
            w.path.extend(b.vertices);
            if !tail.is_empty() {
                w.branches.push(Branch {
                    index: b.index,
                    vertices: tail,
                });
            }
            w.sort();
            w.log("take end, trim three, swap trailing endpath");
        } else if t == 1 {
            let b = w.branches.last_mut().expect("a last branch");
            let c = b.index;
            b.index = c - 1;
            let edge = (w.path[c], w.path[c - 1]);
            w.s.push(edge);
            w.sort();
            w.log("shift last branch");
        } else {
            let b = w.branches.last_mut().expect("a last branch");
            b.vertices.pop();
            if b.vertices.is_empty() {
                w.branches.pop();
            }
            w.log("shrink last branch");
        }
    }
    w.iteration = 0;
    w.m.push(w.path[0]);
    w.log("take start");
    let before: BTreeSet<usize> = w.m.iter().copied().collect();
    for &(u, v) in &w.s {
        if before.contains(&u) {
            let pos = w.m.iter().position(|&x| x == u).expect("member");
            w.m[pos] = v;
        }
    }
    w.log("apply split swaps");
    Ok(TreeMpRun {
        multipacking: Multipacking::new(w.m, g.distances().diameter()),
        split: SplitSet { edges: w.s },
        trace: w.trace,
    })
}

pub fn find_tree_multipacking(g: &Graph) -> Result<Multipacking> {
    Ok(find_tree_multipacking_traced(g)?.multipacking)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn path_is_its_own_shadow() {
        let s = shadow_tree(&path(6)).unwrap();
        assert!(s.branches.is_empty());
        assert_eq!(s.free_edges.len(), 5);
        assert_eq!(s.path, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn spider_has_one_branch() {
        // Center 0 with legs 1-2-3, 4-5-6, 7-8-9.
        let g = Graph::new(10, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7), (7, 8), (8, 9)]).unwrap();
        let s = shadow_tree(&g).unwrap();
        assert_eq!(s.path.len(), 7);
        assert_eq!(s.branches.len(), 1);
        assert_eq!(s.branches[0].alpha(), 3);
        assert_eq!(s.path[s.branches[0].index], 0);
    }

    #[test]
    fn small_paths() {
        assert_eq!(find_tree_multipacking(&path(2)).unwrap().len(), 1);
        assert_eq!(find_tree_multipacking(&path(4)).unwrap().len(), 2);
        assert_eq!(find_tree_multipacking(&path(7)).unwrap().len(), 3);
    }

    #[test]
    fn split_set_checks() {
        let g = path(5);
        let p = [0, 1, 2, 3, 4];
        assert!(verify_split_set(&g, &p, &SplitSet::default()).unwrap());
        // Cutting 1-2 leaves P_2 (diameter 1) and P_3.
        let s = SplitSet { edges: vec![(1, 2)] };
        assert!(!verify_split_set(&g, &p, &s).unwrap());
        let bad = SplitSet { edges: vec![(0, 2)] };
        assert_eq!(verify_split_set(&g, &p, &bad), Err(Error::EdgeNotOnPath(0, 2)));
        // P_6 cut after vertex 2: P_3 and P_3, both of diameter 2.
        let g6 = path(6);
        let s = SplitSet { edges: vec![(2, 3)] };
        assert!(verify_split_set(&g6, &[0, 1, 2, 3, 4, 5], &s).unwrap());
    }
}
