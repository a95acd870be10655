mod common;

use broadcast_core::exact::*;
use broadcast_core::Graph;
use common::*;
use proptest::prelude::*;

fn check_certificate(g: &Graph, r: &SolveResult) -> bool {
    match &r.certificate {
        Certificate::Broadcast(b) => verify_dominating_broadcast(g, b).dominating && b.cost() == r.value,
        Certificate::Multipacking(m) => {
            verify_multipacking(g, m.members(), m.horizon()).unwrap().valid && m.len() == r.value
        }
        Certificate::VertexSet { vertices } => vertices.len() == r.value,
    }
}

/// Minimum dominating sets from the definition, with efficiency tested by
/// counting how often each vertex is dominated.
fn brute_efficient_gamma_set_exists(g: &Graph, gamma: usize) -> bool {
    (0u64..1 << g.n()).filter(|m| m.count_ones() as usize == gamma).any(|m| {
        (0..g.n()).all(|v| {
            (0..g.n())
                .filter(|&u| m >> u & 1 == 1 && (u == v || g.is_adjacent(u, v)))
                .count()
                == 1
        })
    })
}

/// γ = γ_b = 2 with no efficient γ-set, yet mp = 2: the hypothesis does
/// not force a gap under the 0/1-broadcast reading of efficiency.
#[test]
fn spider_has_no_gap_despite_hypothesis() {
    let g = Graph::new(5, &[(0, 4), (1, 2), (1, 4), (3, 4)]).unwrap();
    assert_eq!(domination_number(&g).unwrap().value, 2);
    assert_eq!(broadcast_number(&g).unwrap().value, 2);
    assert!(!brute_efficient_gamma_set_exists(&g, 2));
    assert_eq!(multipacking_number(&g, None).unwrap().value, 2);
    assert_eq!(efficient_gamma_set_gap(&g).unwrap(), Some(false));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn solvers_match_exhaustive_search(n in 2usize..=7, p in 0u32..70, seed in any::<u64>()) {
        let g = random_connected(n, p, seed);
        let gamma = domination_number(&g).unwrap();
        let rho = two_packing_number(&g).unwrap();
        let gamma_b = broadcast_number(&g).unwrap();
        let mp = multipacking_number(&g, None).unwrap();
        prop_assert_eq!(gamma.value, brute_gamma(&g));
        prop_assert_eq!(rho.value, brute_rho(&g));
        prop_assert_eq!(gamma_b.value, brute_gamma_b(&g));
        prop_assert_eq!(mp.value, brute_mp(&g, g.distances().diameter()));
        for r in [&gamma, &rho, &gamma_b, &mp] {
            prop_assert!(check_certificate(&g, r));
        }
        for k in 1..g.distances().diameter() {
            prop_assert_eq!(multipacking_number(&g, Some(k)).unwrap().value, brute_mp(&g, k));
        }
    }

    #[test]
    fn bound_chain_holds(n in 2usize..=10, p in 0u32..50, seed in any::<u64>()) {
        let g = random_connected(n, p, seed);
        let r = bound_report(&g).unwrap();
        let d = g.distances();
        prop_assert_eq!(r.diameter_lb, (d.diameter() + 1).div_ceil(3));
        prop_assert!(r.diameter_lb <= r.mp);
        prop_assert!(r.mp <= r.gamma_b);
        prop_assert!(r.gamma_b <= d.radius().min(r.gamma));
        prop_assert!(r.gamma_b < 3 * r.mp);
        prop_assert!(r.mp < 2 || r.gamma_b + 2 <= 3 * r.mp);
        prop_assert!(r.rho <= r.gamma);
        prop_assert!(r.chain_ok);
    }

    #[test]
    fn diametrical_bound_verifies(n in 2usize..=16, p in 0u32..40, seed in any::<u64>()) {
        let g = random_connected(n, p, seed);
        let m = diametrical_lower_bound(&g).unwrap();
        let d = g.distances();
        prop_assert_eq!(m.len(), (d.diameter() + 1).div_ceil(3));
        prop_assert!(verify_multipacking(&g, m.members(), d.diameter()).unwrap().valid);
    }

    #[test]
    fn efficient_gamma_set_gap_holds(n in 2usize..=8, p in 0u32..50, seed in any::<u64>()) {
        let g = random_connected(n, p, seed);
        let gamma = brute_gamma(&g);
        let gamma_b = brute_gamma_b(&g);
        let expected = (gamma == gamma_b && !brute_efficient_gamma_set_exists(&g, gamma))
            .then(|| gamma_b > brute_mp(&g, g.distances().diameter()));
        let got = efficient_gamma_set_gap(&g).unwrap();
        prop_assert_eq!(got, expected);
    }
}
