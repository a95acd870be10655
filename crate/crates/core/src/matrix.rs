//! 0/1 incidence matrices: closed-neighbourhood matrices, extended
//! (vertex x ball) matrices, and the Γ / cycle submatrix searches used to
//! recognise totally balanced matrices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BinaryMatrix {
        BinaryMatrix {
            rows,
            cols,
            bits: vec![false; rows * cols],
            row_labels: (0..rows).map(|i| i.to_string()).collect(),
            col_labels: (0..cols).map(|j| j.to_string()).collect(),
        }
    }

    /// Builds a matrix from rows of 0/1 values. Panics on ragged input or
    /// entries other than 0 and 1.
    pub fn from_rows(rows: &[Vec<u8>]) -> BinaryMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = BinaryMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                assert!(x <= 1, "entry {x} is not 0/1");
                m.set(i, j, x == 1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    /// Row-major `0`/`1` string.
    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// A `Γ = [[1,1],[1,0]]` occurrence at rows `r1 < r2` and columns `c1 < c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaWitness {
    pub r1: usize,
    pub r2: usize,
    pub c1: usize,
    pub c2: usize,
}

/// Returns the lexicographically least Γ submatrix, or `None` when the
/// matrix is Γ-free.
pub fn gamma_free_check(m: &BinaryMatrix) -> Option<GammaWitness> {
    for r1 in 0..m.rows() {
        for r2 in r1 + 1..m.rows() {
            let mut first_both = None;
            for c in 0..m.cols() {
                if !m.get(r1, c) {
                    continue;
                }
                match (m.get(r2, c), first_both) {
                    (true, None) => first_both = Some(c),
                    (false, Some(c1)) => return Some(GammaWitness { r1, r2, c1, c2: c }),
                    _ => {}
                }
            }
        }
    }
    None
}

/// `m_ij = 1` iff `ordering[i]` is in the closed neighbourhood of `ordering[j]`.
pub fn neighbourhood_matrix(g: &Graph, ordering: &[usize]) -> Result<BinaryMatrix> {
    check_permutation(g.n(), ordering)?;
    let n = g.n();
    let mut m = BinaryMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, g.is_close(ordering[i], ordering[j]));
        }
    }
    m.row_labels = ordering.iter().map(|v| v.to_string()).collect();
    m.col_labels = ordering.iter().map(|v| format!("N[{v}]")).collect();
    Ok(m)
}

pub(crate) fn check_permutation(n: usize, ordering: &[usize]) -> Result<()> {
    if ordering.len() != n {
        return Err(Error::InvalidPermutation);
    }
    let mut seen = vec![false; n];
    for &v in ordering {
        if v >= n || seen[v] {
            return Err(Error::InvalidPermutation);
        }
        seen[v] = true;
    }
    Ok(())
}

/// Vertex x ball incidence matrix. Column `(j, k)` is the ball `N_k[v_j]`
/// and costs `k`. Row `i` corresponds to vertex `row_index[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedMatrix {
    pub matrix: BinaryMatrix,
    pub row_index: Vec<usize>,
    pub col_index: Vec<(usize, usize)>,
    pub col_cost: Vec<usize>,
}

impl ExtendedMatrix {
    /// Assembles the matrix for the given row order and ball list, taking
    /// supports from the graph's distances.
    pub fn from_balls(g: &Graph, row_index: Vec<usize>, balls: Vec<(usize, usize)>) -> ExtendedMatrix {
        let d = g.distances();
        let mut matrix = BinaryMatrix::zeros(row_index.len(), balls.len());
        for (i, &v) in row_index.iter().enumerate() {
            for (c, &(center, k)) in balls.iter().enumerate() {
                matrix.set(i, c, d.dist(v, center) <= k);
            }
        }
        matrix.row_labels = row_index.iter().map(|v| v.to_string()).collect();
        matrix.col_labels = balls.iter().map(|(j, k)| format!("({j},{k})")).collect();
        let col_cost = balls.iter().map(|&(_, k)| k).collect();
        ExtendedMatrix {
            matrix,
            row_index,
            col_index: balls,
            col_cost,
        }
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Row positions covered by column `c`.
    pub fn support(&self, c: usize) -> Vec<usize> {
        (0..self.rows()).filter(|&i| self.matrix.get(i, c)).collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows(),
            cols: self.cols(),
            row_index: self.row_index.clone(),
            col_index: self.col_index.clone(),
            col_cost: self.col_cost.clone(),
            bits: self.matrix.bit_string(),
        }
    }
}

/// Serialized form of an [`ExtendedMatrix`]; `bits` is row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub row_index: Vec<usize>,
    pub col_index: Vec<(usize, usize)>,
    pub col_cost: Vec<usize>,
    pub bits: String,
}

impl MatrixJson {
    pub fn into_matrix(self) -> Result<ExtendedMatrix> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: msg.to_string(),
        };
        if self.bits.len() != self.rows * self.cols
            || self.col_index.len() != self.cols
            || self.col_cost.len() != self.cols
            || self.row_index.len() != self.rows
        {
            return Err(bad("matrix dimensions do not match its labels"));
        }
        let mut matrix = BinaryMatrix::zeros(self.rows, self.cols);
        for (pos, ch) in self.bits.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => matrix.set(pos / self.cols, pos % self.cols, true),
                _ => return Err(bad("bits must be 0 or 1")),
            }
        }
        matrix.row_labels = self.row_index.iter().map(|v| v.to_string()).collect();
        matrix.col_labels = self.col_index.iter().map(|(j, k)| format!("({j},{k})")).collect();
        Ok(ExtendedMatrix {
            matrix,
            row_index: self.row_index,
            col_index: self.col_index,
            col_cost: self.col_cost,
        })
    }
}

/// The full extended neighbourhood matrix: rows are vertices in id order,
/// columns are `(j, k)` for every vertex `j` and `1 <= k <= ecc(j)`.
pub fn extended_matrix(g: &Graph) -> Result<ExtendedMatrix> {
    g.require_nontrivial()?;
    let d = g.distances();
    let balls = (0..g.n())
        .flat_map(|j| (1..=d.ecc(j)).map(move |k| (j, k)))
        .collect();
    Ok(ExtendedMatrix::from_balls(g, (0..g.n()).collect(), balls))
}

/// Largest matrix accepted by [`find_cycle_submatrix`] in either dimension.
pub const CYCLE_SEARCH_LIMIT: usize = 12;

/// Searches for a square submatrix that is the incidence matrix of a cycle
/// of length at least three. Returns its rows and columns in cycle order.
///
/// Such a submatrix is a chordless cycle of length >= 6 in the bipartite
/// row/column graph, found by exhaustive path extension; only matrices up
/// to `CYCLE_SEARCH_LIMIT` in each dimension are accepted.
pub fn find_cycle_submatrix(m: &BinaryMatrix) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if m.rows() > CYCLE_SEARCH_LIMIT || m.cols() > CYCLE_SEARCH_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "cycle submatrix search is limited to {CYCLE_SEARCH_LIMIT}x{CYCLE_SEARCH_LIMIT}"
        )));
    }
    // Bipartite nodes: rows are 0..r, columns r..r+c.
    let r = m.rows();
    let total = r + m.cols();
    let adjacent = |a: usize, b: usize| -> bool {
        match (a < r, b < r) {
            (true, false) => m.get(a, b - r),
            (false, true) => m.get(b, a - r),
            _ => false,
        }
    };
    fn extend(
        path: &mut Vec<usize>,
        total: usize,
        adjacent: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        for next in start + 1..total {
            if path.contains(&next) || !adjacent(last, next) {
                continue;
            }
            // `next` may touch only `last` and, when closing, `start`.
            let inner = &path[1.min(path.len() - 1)..path.len() - 1];
            if inner.iter().any(|&p| adjacent(p, next)) {
                continue;
            }
            path.push(next);
            if path.len() > 2 && adjacent(next, start) {
                if path.len() >= 6 {
                    return true;
                }
            } else if extend(path, total, adjacent) {
                return true;
            }
            path.pop();
        }
        false
    }
    for start in 0..total {
        let mut path = vec![start];
        if extend(&mut path, total, &adjacent) {
            let rows = path.iter().filter(|&&p| p < r).copied().collect();
            let cols = path.iter().filter(|&&p| p >= r).map(|&p| p - r).collect();
            return Ok(Some((rows, cols)));
        }
    }
    Ok(None)
}
