use broadcast_core::chordal::{check_strong_elim, strongly_chordal, Verdict};
use broadcast_core::exact::{verify_dominating_broadcast, verify_multipacking};
use broadcast_core::farber::*;
use broadcast_core::generators::appendix_tree;
use broadcast_core::matrix::{gamma_free_check, neighbourhood_matrix};

#[test]
fn example_a1_domination() {
    let t = appendix_tree();
    let order: Vec<usize> = (0..10).collect();
    let out = farber_domination(&t.graph, &order, &[1; 10]).unwrap();
    let support: Vec<usize> = (0..10).filter(|&v| out.state.y[v] > 0).collect();
    assert_eq!(support, t.ids(&["v1", "v2", "v3", "v9"]));
    assert_eq!(out.dominating, t.ids(&["v4", "v5", "v6", "v10"]));
}

#[test]
fn neighbourhood_matrix_of_appendix_tree() {
    // Closed neighbourhoods in order v1..v10.
    let expected = [
        "1001000000",
        "0100100000",
        "0010010000",
        "1001001000",
        "0100101000",
        "0010010100",
        "0001101010",
        "0000010101",
        "0000001011",
        "0000000111",
    ];
    let t = appendix_tree();
    let order: Vec<usize> = (0..10).collect();
    let m = neighbourhood_matrix(&t.graph, &order).unwrap();
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|b| b.to_string()).collect())
        .collect();
    assert_eq!(rows, expected);
    assert!(m.is_symmetric());
    assert!(gamma_free_check(&m).is_none());
    assert!(check_strong_elim(&t.graph, &order).unwrap());
    assert_eq!(strongly_chordal(&t.graph).verdict, Verdict::StronglyChordal);
}

#[test]
fn ball_matrix_column_order() {
    let t = appendix_tree();
    let m = tree_ball_matrix(&t.graph).unwrap();
    let named: Vec<(String, usize)> = m
        .col_index
        .iter()
        .map(|&(c, k)| (t.name(c)[1..].to_string(), k))
        .collect();
    let expected = [
        (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (8, 1), (9, 1),
        (7, 2), (10, 1), (8, 2), (9, 2), (10, 2), (9, 3), (10, 3), (10, 4),
    ];
    let expected: Vec<(String, usize)> = expected.iter().map(|&(c, k)| (c.to_string(), k)).collect();
    assert_eq!(named, expected);
    assert_eq!(m.row_index, (0..10).collect::<Vec<_>>());
    assert!(gamma_free_check(&m.matrix).is_none());
}

#[test]
fn example_a2_broadcast() {
    let t = appendix_tree();
    let out = farber_broadcast(&t.graph).unwrap();
    assert_eq!(out.multipacking.members(), t.ids(&["v1", "v2", "v3"]).as_slice());
    assert_eq!(out.broadcast.support(), vec![(t.id("v6"), 1), (t.id("v7"), 2)]);
    assert_eq!(out.broadcast.cost(), 3);
    let picked: Vec<&str> = out
        .state
        .trace
        .iter()
        .filter_map(|s| match s {
            TraceStep::Primal { column, selected: true, .. } => Some(column.as_str()),
            _ => None,
        })
        .collect();
    // (7,2) is reached before (6,1) in the descending scan.
    assert_eq!(picked, ["(6,2)", "(5,1)"]);
    assert!(verify_dominating_broadcast(&t.graph, &out.broadcast).dominating);
    assert!(verify_multipacking(&t.graph, out.multipacking.members(), 4).unwrap().valid);
}
