//! The named-instance suite behind `bcast reproduce`.

use anyhow::Result;
use broadcast_core::exact::{broadcast_number, domination_number, multipacking_number, two_packing_number};
use broadcast_core::farber::{farber_broadcast, farber_domination, tree_ball_matrix};
use broadcast_core::generators::*;
use broadcast_core::lp::{fractional_multipacking_number, uniform_closed_form, verify_fractional, FractionalWeighting, Rational};
use broadcast_core::treemp::find_tree_multipacking;
use broadcast_core::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub instance: String,
    pub quantity: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

struct Table(Vec<Row>);

impl Table {
    fn push(&mut self, instance: &str, quantity: &str, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.0.push(Row {
            instance: instance.into(),
            quantity: quantity.into(),
            pass: expected == actual,
            expected,
            actual,
        });
    }
}

fn set(mut names: Vec<String>) -> String {
    names.sort();
    format!("{{{}}}", names.join(","))
}

fn mp(g: &Graph) -> Result<usize> {
    Ok(multipacking_number(g, None)?.value)
}

fn gamma_b(g: &Graph) -> Result<usize> {
    Ok(broadcast_number(g)?.value)
}

pub fn run() -> Result<Vec<Row>> {
    let mut t = Table(Vec::new());

    let p = petersen();
    t.push("petersen", "mp", 1, mp(&p)?);
    t.push("petersen", "gamma_b", 2, gamma_b(&p)?);
    t.push("petersen", "mp_f", "2/1", fractional_multipacking_number(&p)?.0);
    let u = uniform_closed_form(&p)?;
    t.push("petersen", "w*", "1/5", u.w_star);
    t.push("petersen", "r*", 2, u.r_star);

    let f = figure1_graph().graph;
    t.push("figure1", "gamma_b", 4, gamma_b(&f)?);
    t.push("figure1", "mp", 2, mp(&f)?);

    for k in 1..=2 {
        let lg = hartnell_mynhardt_gk(k)?;
        let g = &lg.graph;
        let name = format!("gk:{k}");
        t.push(&name, "gamma_b", 4 * k, gamma_b(g)?);
        t.push(&name, "mp", 3 * k, mp(g)?);
        t.push(&name, "mp_f", format!("{}/1", 4 * k), fractional_multipacking_number(g)?.0);
        let w = (0..g.n())
            .map(|v| match &lg.name(v)[..1] {
                "r" | "s" | "c" | "u" => Rational::new(1, 3),
                _ => Rational::zero(),
            })
            .collect();
        let y = FractionalWeighting::new(w)?;
        let ok = verify_fractional(g, &y).valid;
        t.push(&name, "1/3 weighting", format!("feasible, {}/1", 4 * k), format!("{}, {}", if ok { "feasible" } else { "infeasible" }, y.total()));
    }

    for n in 3..=12 {
        let c = cycle_graph(n)?;
        t.push(&format!("cycle:{n}"), "mp = gamma_b", n % 3 == 0, mp(&c)? == gamma_b(&c)?);
    }

    let a = appendix_tree();
    let order: Vec<usize> = (0..10).collect();
    let d = farber_domination(&a.graph, &order, &[1; 10])?;
    let packing: Vec<usize> = (0..10).filter(|&v| d.state.y[v] > 0).collect();
    t.push("appendix-tree", "2-packing", "{v1,v2,v3,v9}", set(a.names_of(&packing)));
    t.push("appendix-tree", "dominating set", "{v10,v4,v5,v6}", set(a.names_of(&d.dominating)));
    t.push("appendix-tree", "gamma", 4, domination_number(&a.graph)?.value);
    t.push("appendix-tree", "rho", 4, two_packing_number(&a.graph)?.value);
    let m = tree_ball_matrix(&a.graph)?;
    let cols: Vec<String> = m.col_index.iter().map(|&(c, k)| format!("({},{k})", &a.name(c)[1..])).collect();
    t.push(
        "appendix-tree",
        "ball matrix columns",
        "(1,1)(2,1)(3,1)(4,1)(5,1)(6,1)(7,1)(8,1)(9,1)(7,2)(10,1)(8,2)(9,2)(10,2)(9,3)(10,3)(10,4)",
        cols.concat(),
    );
    let b = farber_broadcast(&a.graph)?;
    t.push("appendix-tree", "multipacking", "{v1,v2,v3}", set(a.names_of(b.multipacking.members())));
    let support: Vec<String> = b.broadcast.support().iter().map(|&(v, k)| format!("{}:{k}", a.name(v))).collect();
    t.push("appendix-tree", "broadcast", "{v6:1,v7:2}", set(support));
    t.push("appendix-tree", "broadcast cost", 3, b.broadcast.cost());

    let big = appendix_big_tree();
    let tm = find_tree_multipacking(&big.graph)?;
    t.push("appendix-big-tree", "tree multipacking", "{d,j,m,n,t,v}", set(big.names_of(tm.members())));
    t.push("appendix-big-tree", "mp", 6, mp(&big.graph)?);
    Ok(t.0)
}

/// Fixed-width table for `--pretty`.
pub fn render(rows: &[Row]) -> String {
    let w = |f: fn(&Row) -> &str, title: &str| rows.iter().map(|r| f(r).len()).chain([title.len()]).max().unwrap_or(0);
    let (wi, wq, we, wa) = (
        w(|r| &r.instance, "instance"),
        w(|r| &r.quantity, "quantity"),
        w(|r| &r.expected, "expected"),
        w(|r| &r.actual, "actual"),
    );
    let mut out = format!("{:wi$}  {:wq$}  {:we$}  {:wa$}  result\n", "instance", "quantity", "expected", "actual");
    for r in rows {
        let verdict = if r.pass { "pass" } else { "FAIL" };
        out += &format!("{:wi$}  {:wq$}  {:we$}  {:wa$}  {verdict}\n", r.instance, r.quantity, r.expected, r.actual);
    }
    out
}
