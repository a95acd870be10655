mod common;

use broadcast_core::chordal::{strongly_chordal, Verdict};
use broadcast_core::exact::*;
use broadcast_core::farber::*;
use broadcast_core::generators::random_tree;
use broadcast_core::matrix::{gamma_free_check, neighbourhood_matrix};
use broadcast_core::Graph;
use common::*;
use num_traits::Zero;
use proptest::prelude::*;

fn brute_weighted_gamma(g: &Graph, w: &[u64]) -> u64 {
    (1u64..1 << g.n())
        .filter(|m| (0..g.n()).all(|v| g.closed_neighbourhood(v).iter().any(|&u| m >> u & 1 == 1)))
        .map(|m| (0..g.n()).filter(|&v| m >> v & 1 == 1).map(|v| w[v]).sum())
        .min()
        .unwrap()
}

/// Checks the scan invariants against the matrix the run used.
fn check_state(m: &broadcast_core::matrix::BinaryMatrix, w: &[u64], s: &FarberState) {
    for c in 0..m.cols() {
        let load: u64 = (0..m.rows()).filter(|&r| m.get(r, c)).map(|r| s.y[r]).sum();
        assert_eq!(load + s.h[c], w[c], "slack bookkeeping");
        if s.x[c] {
            assert_eq!(s.h[c], 0, "chosen columns are tight");
        }
    }
    for r in 0..m.rows() {
        assert!((0..m.cols()).any(|c| m.get(r, c) && s.h[c] == 0), "row without a tight column");
        let hits = (0..m.cols()).filter(|&c| m.get(r, c) && s.x[c]).count();
        assert!(hits >= 1, "row not covered");
        if s.y[r] > 0 {
            assert_eq!(hits, 1, "packed row covered more than once");
        }
    }
    let primal: u64 = (0..m.cols()).filter(|&c| s.x[c]).map(|c| w[c]).sum();
    assert_eq!(primal, s.y.iter().sum::<u64>());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn broadcast_on_trees(n in 2usize..=14, seed in any::<u64>()) {
        let g = random_tree(n, seed).unwrap();
        let out = farber_broadcast(&g).unwrap();
        let a = tree_ball_matrix(&g).unwrap();
        prop_assert!(gamma_free_check(&a.matrix).is_none());
        let w: Vec<u64> = a.col_cost.iter().map(|&k| k as u64).collect();
        check_state(&a.matrix, &w, &out.state);
        prop_assert!(verify_dominating_broadcast(&g, &out.broadcast).dominating);
        prop_assert!(verify_multipacking(&g, out.multipacking.members(), g.distances().diameter()).unwrap().valid);
        prop_assert_eq!(out.broadcast.cost(), out.multipacking.len());
        prop_assert_eq!(out.broadcast.cost(), brute_gamma_b(&g));
    }

    #[test]
    fn domination_on_strongly_chordal_graphs(
        n in 2usize..=9,
        p in 0u32..60,
        seed in any::<u64>(),
        weights in proptest::collection::vec(1u64..5, 9),
    ) {
        let g = random_connected(n, p, seed);
        let report = strongly_chordal(&g);
        prop_assume!(report.verdict == Verdict::StronglyChordal);
        let order = report.ordering.unwrap().order().to_vec();
        let w = &weights[..n];
        let out = farber_domination(&g, &order, w).unwrap();
        let m = neighbourhood_matrix(&g, &order).unwrap();
        let wo: Vec<u64> = order.iter().map(|&v| w[v]).collect();
        check_state(&m, &wo, &out.state);
        let cost: u64 = out.dominating.iter().map(|&v| w[v]).sum();
        prop_assert_eq!(cost, brute_weighted_gamma(&g, w));
        if w.iter().all(|&x| x == 1) {
            prop_assert_eq!(cost as usize, brute_rho(&g));
        }
    }

    #[test]
    fn unit_weights_give_gamma_and_rho(n in 2usize..=12, seed in any::<u64>()) {
        let g = random_tree(n, seed).unwrap();
        let order = strongly_chordal(&g).ordering.unwrap().order().to_vec();
        let out = farber_domination(&g, &order, &vec![1; n]).unwrap();
        let support: Vec<usize> = (0..n).filter(|&v| !out.packing.weight(v).0.is_zero()).collect();
        prop_assert_eq!(out.dominating.len(), domination_number(&g).unwrap().value);
        prop_assert_eq!(support.len(), two_packing_number(&g).unwrap().value);
        prop_assert!(verify_multipacking(&g, &support, 1).unwrap().valid);
    }
}
