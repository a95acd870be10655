//! Dense exact dual simplex for `min c·x, Ax >= 1, x >= 0` with `c > 0`.
//!
//! Written as `-Ax + s = -1` the slack basis is dual feasible, so the dual
//! simplex runs from it directly. The optimal packing `y` of the dual
//! `max y·1, yA <= c, y >= 0` is read off the reduced costs of the slacks.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub struct CoverOptimum {
    pub value: BigRational,
    pub x: Vec<BigRational>,
    pub y: Vec<BigRational>,
}

/// `a[i][j]` tells whether row `i` is covered by column `j`.
pub fn solve_cover(a: &[Vec<bool>], costs: &[u64]) -> Result<CoverOptimum> {
    let m = a.len();
    let ncols = costs.len();
    let width = ncols + m;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = vec![zero.clone(); width];
            for j in 0..ncols {
                if a[i][j] {
                    row[j] = -one.clone();
                }
            }
            row[ncols + i] = one.clone();
            row
        })
        .collect();
    let mut rhs = vec![-one.clone(); m];
    let mut reduced: Vec<BigRational> = costs
        .iter()
        .map(|&c| BigRational::from_integer(c.into()))
        .chain(std::iter::repeat_n(zero.clone(), m))
        .collect();
    let mut basis: Vec<usize> = (ncols..width).collect();

    loop {
        // Leaving row: infeasible row whose basic variable has least index.
        let Some(r) = (0..m)
            .filter(|&i| rhs[i].is_negative())
            .min_by_key(|&i| basis[i])
        else {
            break;
        };
        let mut entering: Option<(usize, BigRational)> = None;
        for j in 0..width {
            if !t[r][j].is_negative() {
                continue;
            }
            let ratio = &reduced[j] / -&t[r][j];
            if entering.as_ref().is_none_or(|(_, best)| ratio < *best) {
                entering = Some((j, ratio));
            }
        }
        let Some((e, _)) = entering else {
            return Err(Error::Infeasible);
        };
        let piv = t[r][e].clone();
        for v in t[r].iter_mut() {
            *v /= &piv;
        }
        rhs[r] /= &piv;
        let prow = t[r].clone();
        let prhs = rhs[r].clone();
        for i in 0..m {
            if i == r || t[i][e].is_zero() {
                continue;
            }
            let f = t[i][e].clone();
            for (v, p) in t[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            rhs[i] -= &f * &prhs;
        }
        let f = reduced[e].clone();
        if !f.is_zero() {
            for (v, p) in reduced.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        basis[r] = e;
    }

    let mut x = vec![zero.clone(); ncols];
    for (i, &b) in basis.iter().enumerate() {
        if b < ncols {
            x[b] = rhs[i].clone();
        }
    }
    let y: Vec<BigRational> = reduced[ncols..].to_vec();
    let value: BigRational = x
        .iter()
        .zip(costs)
        .map(|(xi, &c)| xi * BigRational::from_integer(c.into()))
        .sum();
    Ok(CoverOptimum { value, x, y })
}

/// Checks primal and dual feasibility and equality of objectives.
pub fn certify(a: &[Vec<bool>], costs: &[u64], opt: &CoverOptimum) -> bool {
    let one = BigRational::one();
    let primal = opt.x.iter().all(|v| !v.is_negative())
        && a.iter().all(|row| {
            let s: BigRational = row.iter().zip(&opt.x).filter(|(&b, _)| b).map(|(_, v)| v.clone()).sum();
            s >= one
        });
    let dual = opt.y.iter().all(|v| !v.is_negative())
        && (0..costs.len()).all(|j| {
            let s: BigRational = (0..a.len()).filter(|&i| a[i][j]).map(|i| opt.y[i].clone()).sum();
            s <= BigRational::from_integer(costs[j].into())
        });
    let ysum: BigRational = opt.y.iter().cloned().sum();
    primal && dual && ysum == opt.value
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn triangle_edge_cover() {
        // Rows are vertices of a triangle, columns its edges, unit cost.
        let a = vec![
            vec![true, false, true],
            vec![true, true, false],
            vec![false, true, true],
        ];
        let opt = solve_cover(&a, &[1, 1, 1]).unwrap();
        assert_eq!(opt.value, q(3, 2));
        assert!(certify(&a, &[1, 1, 1], &opt));
    }

    #[test]
    fn uncoverable_row_is_infeasible() {
        let a = vec![vec![true], vec![false]];
        assert!(matches!(solve_cover(&a, &[1]), Err(Error::Infeasible)));
    }
}
