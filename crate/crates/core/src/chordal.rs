//! Strong elimination orderings and strongly chordal recognition by
//! repeated removal of simple vertices.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::check_permutation;

/// A vertex permutation together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl EliminationOrdering {
    /// Wraps `order` after checking that it is a strong elimination
    /// ordering of `g`.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<EliminationOrdering> {
        if !check_strong_elim(g, &order)? {
            return Err(Error::InvalidOrdering);
        }
        Ok(EliminationOrdering::new_unchecked(order))
    }

    pub(crate) fn new_unchecked(order: Vec<usize>) -> EliminationOrdering {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        EliminationOrdering { order, position }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }
}

/// Checks the four-index form: for positions `i <= j`, `k <= l` with
/// `i ~ k`, `i ~ l` and `j ~ k`, also `j ~ l`.
pub fn check_strong_elim(g: &Graph, ordering: &[usize]) -> Result<bool> {
    check_permutation(g.n(), ordering)?;
    let n = g.n();
    let close = |a: usize, b: usize| g.is_close(ordering[a], ordering[b]);
    for i in 0..n {
        for k in 0..n {
            if !close(i, k) {
                continue;
            }
            for l in k..n {
                if !close(i, l) {
                    continue;
                }
                for j in i..n {
                    if close(j, k) && !close(j, l) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    StronglyChordal,
    NotStronglyChordal,
}

/// Outcome of recognition: an ordering when strongly chordal, otherwise the
/// vertex set of an induced subgraph that has no simple vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalityReport {
    pub verdict: Verdict,
    pub ordering: Option<EliminationOrdering>,
    pub witness: Option<Vec<usize>>,
}

/// Simple vertices of the subgraph induced by `alive`: those whose
/// neighbours' closed neighbourhoods form a chain under inclusion.
fn simple_vertices(closed: &[BitSet], alive: &BitSet) -> Vec<usize> {
    let local: Vec<BitSet> = closed.iter().map(|s| s.intersection(alive)).collect();
    alive
        .iter()
        .filter(|&v| {
            let nbrs: Vec<usize> = local[v].iter().collect();
            nbrs.iter().enumerate().all(|(a, &x)| {
                nbrs[a + 1..]
                    .iter()
                    .all(|&y| local[x].is_subset(&local[y]) || local[y].is_subset(&local[x]))
            })
        })
        .collect()
}

/// Runs the simple-vertex elimination with the accumulated neighbourhood
/// order. Each round keeps `v < u` from the previous round, adds
/// `N_i[v] ⊊ N_i[u]`, closes transitively, and removes the lowest-id vertex
/// that is simple and minimal.
pub fn strongly_chordal(g: &Graph) -> ChordalityReport {
    let n = g.n();
    let closed: Vec<BitSet> = (0..n)
        .map(|v| BitSet::from_iter(n, g.closed_neighbourhood(v)))
        .collect();
    let mut alive = BitSet::full(n);
    // below[u] holds every v with v < u.
    let mut below: Vec<BitSet> = vec![BitSet::new(n); n];
    let mut order = Vec::with_capacity(n);
    while !alive.is_empty() {
        let simple = simple_vertices(&closed, &alive);
        if simple.is_empty() {
            return not_strongly_chordal(alive.iter().collect());
        }
        let local: Vec<BitSet> = closed.iter().map(|s| s.intersection(&alive)).collect();
        for u in alive.iter() {
            for v in alive.iter() {
                if v != u && local[v].is_subset(&local[u]) && local[v] != local[u] {
                    below[u].insert(v);
                }
            }
        }
        transitive_close(&mut below, &alive);
        let minimal = simple
            .iter()
            .copied()
            .find(|&v| below[v].intersection(&alive).is_empty());
        let Some(v) = minimal else {
            // No simple vertex is minimal; shrink to an induced subgraph
            // without simple vertices to report.
            return not_strongly_chordal(strip_simple(&closed, alive));
        };
        order.push(v);
        alive.remove(v);
    }
    ChordalityReport {
        verdict: Verdict::StronglyChordal,
        ordering: Some(EliminationOrdering::new_unchecked(order)),
        witness: None,
    }
}

fn not_strongly_chordal(witness: Vec<usize>) -> ChordalityReport {
    ChordalityReport {
        verdict: Verdict::NotStronglyChordal,
        ordering: None,
        witness: Some(witness),
    }
}

fn strip_simple(closed: &[BitSet], mut alive: BitSet) -> Vec<usize> {
    loop {
        match simple_vertices(closed, &alive).first() {
            Some(&v) => alive.remove(v),
            None => return alive.iter().collect(),
        }
    }
}

fn transitive_close(below: &mut [BitSet], alive: &BitSet) {
    let verts: Vec<usize> = alive.iter().collect();
    for &k in &verts {
        for &u in &verts {
            if below[u].contains(k) {
                let via = below[k].clone();
                for w in via.iter() {
                    below[u].insert(w);
                }
            }
        }
    }
}

/// True iff no vertex of the induced subgraph on `vertices` is simple.
pub fn has_no_simple_vertex(g: &Graph, vertices: &[usize]) -> bool {
    let n = g.n();
    let closed: Vec<BitSet> = (0..n)
        .map(|v| BitSet::from_iter(n, g.closed_neighbourhood(v)))
        .collect();
    simple_vertices(&closed, &BitSet::from_iter(n, vertices.iter().copied())).is_empty()
}
