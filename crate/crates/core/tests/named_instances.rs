use broadcast_core::exact::*;
use broadcast_core::generators::*;
use broadcast_core::lp::{fractional_multipacking_number, uniform_closed_form, trivial_lower_bound, Rational};
use broadcast_core::{Broadcast, Error};

fn check_certificate(g: &broadcast_core::Graph, r: &SolveResult) {
    match &r.certificate {
        Certificate::Broadcast(b) => {
            assert!(verify_dominating_broadcast(g, b).dominating);
            assert_eq!(b.cost(), r.value);
        }
        Certificate::Multipacking(m) => {
            assert!(verify_multipacking(g, m.members(), m.horizon()).unwrap().valid);
            assert_eq!(m.len(), r.value);
        }
        Certificate::VertexSet { vertices } => assert_eq!(vertices.len(), r.value),
    }
}

#[test]
fn figure1_values() {
    let g = figure1_graph().graph;
    let gb = broadcast_number(&g).unwrap();
    let mp = multipacking_number(&g, None).unwrap();
    check_certificate(&g, &gb);
    check_certificate(&g, &mp);
    assert_eq!((gb.value, mp.value), (4, 2));
}

#[test]
fn gk_values() {
    let g1 = hartnell_mynhardt_gk(1).unwrap();
    let gb = broadcast_number(&g1.graph).unwrap();
    let mp = multipacking_number(&g1.graph, None).unwrap();
    assert_eq!((gb.value, mp.value), (4, 3));
    check_certificate(&g1.graph, &gb);
    let u = g1.ids(&["u1", "u2", "u3"]);
    assert!(verify_multipacking(&g1.graph, &u, 8).unwrap().valid);
    assert_eq!(diametrical_lower_bound(&g1.graph).unwrap().len(), 3);

    // f(c_i) = 4 for i = 2 (mod 3).
    let b = Broadcast::from_pairs(&g1.graph, &[(g1.id("c2"), 4)]).unwrap();
    assert!(verify_dominating_broadcast(&g1.graph, &b).dominating);
}

#[test]
fn g2_values() {
    let g2 = hartnell_mynhardt_gk(2).unwrap();
    let gb = broadcast_number(&g2.graph).unwrap();
    let mp = multipacking_number(&g2.graph, None).unwrap();
    assert_eq!((gb.value, mp.value), (8, 6));
    check_certificate(&g2.graph, &gb);
    check_certificate(&g2.graph, &mp);
    let b = Broadcast::from_pairs(&g2.graph, &[(g2.id("c2"), 4), (g2.id("c5"), 4)]).unwrap();
    assert!(verify_dominating_broadcast(&g2.graph, &b).dominating);
}

#[test]
fn petersen_values() {
    let g = petersen();
    assert_eq!(broadcast_number(&g).unwrap().value, 2);
    assert_eq!(multipacking_number(&g, None).unwrap().value, 1);
    assert_eq!(two_packing_number(&g).unwrap().value, 1);
    let (mp_f, _) = fractional_multipacking_number(&g).unwrap();
    assert_eq!(mp_f, Rational::from_integer(2));
    let u = uniform_closed_form(&g).unwrap();
    assert_eq!((u.w_star, u.r_star, u.mp_f), (Rational::new(1, 5), 2, Rational::from_integer(2)));
    assert_eq!(trivial_lower_bound(&g).unwrap(), Rational::from_integer(2));
}

#[test]
fn appendix_tree_values() {
    let t = appendix_tree();
    let g = &t.graph;
    let gamma = domination_number(g).unwrap();
    let rho = two_packing_number(g).unwrap();
    assert_eq!((gamma.value, rho.value), (4, 4));
    assert_eq!(broadcast_number(g).unwrap().value, 3);
    assert_eq!(multipacking_number(g, None).unwrap().value, 3);
    let rho_set = t.ids(&["v1", "v2", "v3", "v9"]);
    assert!(verify_multipacking(g, &rho_set, 1).unwrap().valid);
    let b = Broadcast::from_pairs(g, &[(t.id("v7"), 2), (t.id("v6"), 1)]).unwrap();
    assert!(verify_dominating_broadcast(g, &b).dominating);
    // N_2[v7] and N_1[v6] partition the vertex set.
    assert!(verify_efficient(g, &b).unwrap());
    assert_eq!(uniform_closed_form(g), Err(Error::NotBallUniform(1)));
}

#[test]
fn appendix_big_tree_mp() {
    let g = appendix_big_tree().graph;
    assert_eq!(multipacking_number(&g, None).unwrap().value, 6);
    assert_eq!(broadcast_number(&g).unwrap().value, 6);
}

#[test]
fn gk_fractional() {
    for k in 1..=2 {
        let g = hartnell_mynhardt_gk(k).unwrap();
        let (mp_f, _) = fractional_multipacking_number(&g.graph).unwrap();
        assert_eq!(mp_f, Rational::from_integer(4 * k as i64));
    }
}
