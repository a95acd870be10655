//! Primal-dual covering and packing on Γ-free matrices: weighted
//! domination on strongly chordal graphs, and broadcasts on trees through
//! the rooted ball matrix.

use serde::{Deserialize, Serialize};

use crate::chordal::check_strong_elim;
use crate::error::{Error, Result};
use crate::graph::{Broadcast, Graph, Multipacking};
use crate::lp::{FractionalWeighting, Rational};
use crate::matrix::{neighbourhood_matrix, BinaryMatrix, ExtendedMatrix};

/// One scan step of the two-stage algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "stage")]
pub enum TraceStep {
    /// Stage 1 sets `y` of a row to the least slack among its columns;
    /// `h` is every column's slack afterwards.
    #[serde(rename = "1")]
    Dual { row: String, y: u64, h: Vec<u64> },
    /// Stage 2 inspects a column; `tight` is `h = 0`, `fits` is `T_c ⊆ T`.
    #[serde(rename = "2")]
    Primal {
        column: String,
        slack: u64,
        tight: bool,
        fits: bool,
        selected: bool,
        remaining: Vec<String>,
    },
}

/// Final state of a run: duals per row, chosen columns, slacks per column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarberState {
    pub y: Vec<u64>,
    pub x: Vec<bool>,
    pub h: Vec<u64>,
    pub trace: Vec<TraceStep>,
}

/// Runs both stages on `m` (rows and columns in scan order) with column
/// costs `w`.
fn primal_dual(m: &BinaryMatrix, w: &[u64]) -> FarberState {
    let (rows, cols) = (m.rows(), m.cols());
    let support: Vec<Vec<usize>> = (0..cols)
        .map(|c| (0..rows).filter(|&r| m.get(r, c)).collect())
        .collect();
    let mut h = w.to_vec();
    let mut y = vec![0; rows];
    let mut trace = Vec::new();
    for r in 0..rows {
        let incident: Vec<usize> = (0..cols).filter(|&c| m.get(r, c)).collect();
        let min = incident
            .iter()
            .map(|&c| h[c])
            .min()
            .expect("every row lies in some column");
        y[r] = min;
        for &c in &incident {
            h[c] -= min;
        }
        trace.push(TraceStep::Dual {
            row: m.row_labels[r].clone(),
            y: min,
            h: h.clone(),
        });
    }
    // Uncovered rows. Only packed rows are ever removed.
    let mut t = vec![true; rows];
    let mut x = vec![false; cols];
    for c in (0..cols).rev() {
        let tc: Vec<usize> = support[c].iter().copied().filter(|&r| y[r] > 0).collect();
        let tight = h[c] == 0;
        let fits = tc.iter().all(|&r| t[r]);
        let selected = tight && fits;
        if selected {
            x[c] = true;
            for &r in &tc {
                t[r] = false;
            }
        }
        trace.push(TraceStep::Primal {
            column: m.col_labels[c].clone(),
            slack: h[c],
            tight,
            fits,
            selected,
            remaining: (0..rows).filter(|&r| t[r]).map(|r| m.row_labels[r].clone()).collect(),
        });
    }
    FarberState { y, x, h, trace }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationOutcome {
    pub packing: FractionalWeighting,
    pub dominating: Vec<usize>,
    pub state: FarberState,
}

/// Weighted domination along a strong elimination ordering. `y` is an
/// integral weighted 2-packing, the chosen vertices a dominating set of
/// equal weight.
pub fn farber_domination(g: &Graph, ordering: &[usize], weights: &[u64]) -> Result<DominationOutcome> {
    if weights.len() != g.n() {
        return Err(Error::ParamOutOfRange(format!(
            "{} weights for {} vertices",
            weights.len(),
            g.n()
        )));
    }
    if let Some(v) = weights.iter().position(|&w| w == 0) {
        return Err(Error::NonPositiveWeight(v));
    }
    if !check_strong_elim(g, ordering)? {
        return Err(Error::InvalidOrdering);
    }
    let m = neighbourhood_matrix(g, ordering)?;
    let w: Vec<u64> = ordering.iter().map(|&v| weights[v]).collect();
    let state = primal_dual(&m, &w);
    let mut y = vec![Rational::zero(); g.n()];
    for (pos, &v) in ordering.iter().enumerate() {
        y[v] = Rational::from_integer(state.y[pos] as i64);
    }
    let mut dominating: Vec<usize> = (0..g.n()).filter(|&p| state.x[p]).map(|p| ordering[p]).collect();
    dominating.sort_unstable();
    Ok(DominationOutcome {
        packing: FractionalWeighting::new(y)?,
        dominating,
        state,
    })
}

/// Rooted ball matrix of a tree. The root is the center with the highest
/// id; each vertex `v` contributes balls of radius `1..=max(1, l(v))`, with
/// `l(v)` the height of its subtree. Rows go by descending depth (ties by
/// id); columns ascend lexicographically on their bits read from the last
/// row upwards, ties by `(center, radius)`.
pub fn tree_ball_matrix(g: &Graph) -> Result<ExtendedMatrix> {
    g.require_nontrivial()?;
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let d = g.distances();
    let root = *d.centers().iter().max().expect("a center exists");
    let depth = d.row(root);
    // Height of v's subtree: the farthest descendant.
    let height: Vec<usize> = (0..g.n())
        .map(|v| {
            (0..g.n())
                .filter(|&u| depth[u] == depth[v] + d.dist(v, u))
                .map(|u| d.dist(v, u))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut rows: Vec<usize> = (0..g.n()).collect();
    rows.sort_by_key(|&v| (std::cmp::Reverse(depth[v]), v));
    let mut balls: Vec<(usize, usize)> = (0..g.n())
        .flat_map(|v| (1..=height[v].max(1)).map(move |k| (v, k)))
        .collect();
    let key = |&(c, k): &(usize, usize)| -> Vec<bool> { rows.iter().rev().map(|&v| d.dist(v, c) <= k).collect() };
    balls.sort_by(|a, b| key(a).cmp(&key(b)).then(a.cmp(b)));
    Ok(ExtendedMatrix::from_balls(g, rows, balls))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BroadcastOutcome {
    pub multipacking: Multipacking,
    pub broadcast: Broadcast,
    pub state: FarberState,
}

/// Primal-dual over the rooted ball matrix of a tree: returns a dominating
/// broadcast and a multipacking of equal size.
pub fn farber_broadcast(g: &Graph) -> Result<BroadcastOutcome> {
    let a = tree_ball_matrix(g)?;
    let w: Vec<u64> = a.col_cost.iter().map(|&k| k as u64).collect();
    let state = primal_dual(&a.matrix, &w);
    let members = (0..a.rows()).filter(|&r| state.y[r] > 0).map(|r| a.row_index[r]).collect();
    let pairs: Vec<(usize, usize)> = (0..a.cols()).filter(|&c| state.x[c]).map(|c| a.col_index[c]).collect();
    Ok(BroadcastOutcome {
        multipacking: Multipacking::new(members, g.distances().diameter()),
        broadcast: Broadcast::from_pairs(g, &pairs)?,
        state,
    })
}

/// The trace as JSON lines, one record per scan step.
pub fn trace_json_lines(state: &FarberState) -> String {
    state
        .trace
        .iter()
        .map(|s| serde_json::to_string(s).expect("trace serializes") + "\n")
        .collect()
}
