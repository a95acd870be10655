//! Shared fixtures: a seeded random connected graph generator and
//! brute-force oracles written directly from the definitions.
#![allow(dead_code)]

use broadcast_core::generators::random_tree;
use broadcast_core::lp::{solve_lp, Rational, Sense};
use broadcast_core::matrix::extended_matrix;
use broadcast_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use num_rational::BigRational;
use num_traits::One;

/// Random spanning tree on `n` vertices plus each remaining pair with
/// probability `p_percent / 100`.
pub fn random_connected(n: usize, p_percent: u32, seed: u64) -> Graph {
    let tree = random_tree(n, seed).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.is_adjacent(u, v) && rng.gen_range(0..100) < p_percent {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

pub fn is_multipacking(g: &Graph, m: &[usize], k: usize) -> bool {
    let d = g.distances();
    (0..g.n()).all(|v| (1..=k).all(|s| m.iter().filter(|&&u| d.dist(u, v) <= s).count() <= s))
}

pub fn brute_mp(g: &Graph, k: usize) -> usize {
    subsets(g.n()).filter(|m| is_multipacking(g, m, k)).map(|m| m.len()).max().unwrap()
}

pub fn brute_gamma(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| (0..g.n()).all(|v| s.iter().any(|&u| u == v || g.is_adjacent(u, v))))
        .map(|s| s.len())
        .min()
        .unwrap()
}

pub fn brute_rho(g: &Graph) -> usize {
    brute_mp(g, 1)
}

pub fn is_dominating(g: &Graph, powers: &[usize]) -> bool {
    let d = g.distances();
    (0..g.n()).all(|v| (0..g.n()).any(|u| powers[u] > 0 && d.dist(u, v) <= powers[u]))
}

/// Minimum cost over every power vector with `f(v) <= e(v)`.
pub fn brute_gamma_b(g: &Graph) -> usize {
    fn rec(g: &Graph, v: usize, powers: &mut Vec<usize>, cost: usize, best: &mut usize) {
        if cost >= *best {
            return;
        }
        if v == g.n() {
            if is_dominating(g, powers) {
                *best = cost;
            }
            return;
        }
        for p in 0..=g.distances().ecc(v) {
            powers[v] = p;
            rec(g, v + 1, powers, cost + p, best);
        }
        powers[v] = 0;
    }
    let mut best = g.n() + 1;
    rec(g, 0, &mut vec![0; g.n()], 0, &mut best);
    best
}

pub fn q(n: usize) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Checks both solutions of the LP pair against the matrix directly:
/// `x >= 0`, `Ax >= 1`, `y >= 0`, `yA <= c`, and `c·x = y·1 = optimum`.
pub fn strong_duality(g: &Graph) -> Rational {
    let a = extended_matrix(g).unwrap();
    let cover = solve_lp(&a, Sense::Cover).unwrap();
    let pack = solve_lp(&a, Sense::Pack).unwrap();
    assert_eq!(cover.optimum, pack.optimum);
    let (x, y) = (&cover.primal_solution, &cover.dual_solution);
    assert_eq!(&pack.primal_solution, y);
    assert!(x.iter().chain(y).all(|v| !v.is_negative()));
    for i in 0..a.rows() {
        let load: BigRational = (0..a.cols()).filter(|&c| a.matrix.get(i, c)).map(|c| x[c].0.clone()).sum();
        assert!(load >= BigRational::one());
    }
    for c in 0..a.cols() {
        let load: BigRational = a.support(c).iter().map(|&i| y[i].0.clone()).sum();
        assert!(load <= q(a.col_cost[c]));
    }
    let primal: BigRational = (0..a.cols()).map(|c| &x[c].0 * q(a.col_cost[c])).sum();
    let dual: BigRational = y.iter().map(|v| v.0.clone()).sum();
    assert_eq!(primal, cover.optimum.0);
    assert_eq!(dual, cover.optimum.0);
    cover.optimum
}
