//! Distance conditions on the layers around a peripheral vertex, as
//! conjectured necessary for a graph with mp = 3 and γ_b = 7.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactOutcome {
    pub fact: String,
    pub passed: bool,
    /// Vertices exhibiting the failure.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactsReport {
    pub alpha: usize,
    pub diameter: usize,
    pub facts: Vec<FactOutcome>,
}

impl FactsReport {
    pub fn all_passed(&self) -> bool {
        self.facts.iter().all(|f| f.passed)
    }
}

struct Layers<'a> {
    d: &'a DistanceMatrix,
    of: Vec<usize>,
}

impl Layers<'_> {
    fn union(&self, lo: usize, hi: usize) -> Vec<usize> {
        (0..self.of.len())
            .filter(|&v| (lo..=hi).contains(&self.of[v]))
            .collect()
    }

    fn dist(&self, u: usize, v: usize) -> usize {
        self.d.dist(u, v)
    }

    /// A path of length at most four from `u` to `v` through layer `i`.
    fn short_path_via(&self, u: usize, v: usize, i: usize) -> bool {
        self.union(i, i)
            .iter()
            .any(|&w| self.dist(u, w) + self.dist(w, v) <= 4)
    }
}

fn outcome(fact: &str, failure: Option<Vec<usize>>) -> FactOutcome {
    FactOutcome {
        fact: fact.into(),
        passed: failure.is_none(),
        witness: failure,
    }
}

/// Evaluates facts (i) to (vii), with (v) split into its three parts.
pub fn extremal_facts_check(g: &Graph, alpha: usize) -> Result<FactsReport> {
    g.check_vertex(alpha)?;
    let d = g.distances();
    let diameter = d.diameter();
    if d.ecc(alpha) != diameter {
        return Err(Error::NotPeripheral(alpha));
    }
    let l = Layers {
        d,
        of: d.row(alpha).to_vec(),
    };
    let v34 = l.union(3, 4);
    let v4 = l.union(4, 4);
    let mut facts = Vec::new();

    let pairs34 = || {
        v34.iter()
            .flat_map(|&u| v34.iter().map(move |&v| (u, v)))
            .filter(|(u, v)| u < v)
    };

    facts.push(outcome(
        "i",
        pairs34().find(|&(u, v)| l.dist(u, v) > 4).map(|(u, v)| vec![u, v]),
    ));

    let far = l.union(5, 8);
    let v78 = l.union(7, 8);
    let mut fail = None;
    'ii: for &u in &v34 {
        for &y in &far {
            for &w in &v78 {
                if l.dist(u, y) > 4 && l.dist(y, w) > 2 {
                    fail = Some(vec![u, y, w]);
                    break 'ii;
                }
            }
        }
    }
    facts.push(outcome("ii", fail));

    let v5 = l.union(5, 5);
    let fail = (diameter == 8)
        .then(|| {
            v34.iter()
                .flat_map(|&u| v5.iter().map(move |&x| (u, x)))
                .find(|&(u, x)| l.dist(u, x) > 4)
                .map(|(u, x)| vec![u, x])
        })
        .flatten();
    facts.push(outcome("iii", fail));

    let fail = v34
        .iter()
        .find(|&&u| {
            let some_far = v4.iter().any(|&v| l.dist(u, v) >= 3);
            let exact = diameter != 7 || v4.iter().any(|&v| l.dist(u, v) == 4);
            !(some_far && exact)
        })
        .map(|&u| vec![u]);
    facts.push(outcome("iv", fail));

    let mid = |u: usize, v: usize| (3..=4).contains(&l.dist(u, v));
    let fail = (diameter == 8)
        .then(|| {
            pairs34()
                .filter(|&(u, v)| mid(u, v) && (l.of[u] == 3 || l.of[v] == 3))
                .find(|&(u, v)| !l.short_path_via(u, v, 2))
                .map(|(u, v)| vec![u, v])
        })
        .flatten();
    facts.push(outcome("v_a", fail));
    let fail = (diameter == 8)
        .then(|| {
            pairs34()
                .filter(|&(u, v)| mid(u, v) && l.of[u] == 4 && l.of[v] == 4)
                .find(|&(u, v)| !l.short_path_via(u, v, 2) && !l.short_path_via(u, v, 6))
                .map(|(u, v)| vec![u, v])
        })
        .flatten();
    facts.push(outcome("v_b", fail));
    let fail = (diameter == 7)
        .then(|| {
            pairs34()
                .filter(|&(u, v)| mid(u, v))
                .find(|&(u, v)| !l.short_path_via(u, v, 2) && !l.short_path_via(u, v, 5))
                .map(|(u, v)| vec![u, v])
        })
        .flatten();
    facts.push(outcome("v_c", fail));

    let v2 = l.union(2, 2);
    let v3 = l.union(3, 3);
    let fail = v3
        .iter()
        .find(|&&u| {
            !v2.iter()
                .any(|&v| l.dist(u, v) == 5 && reaches_avoiding(g, v, &v3, u))
        })
        .map(|&u| vec![u]);
    facts.push(outcome("vi", fail));

    let v67 = l.union(6, 7);
    let v7 = l.union(7, 7);
    let v8 = l.union(8, 8);
    let mut fail = v67
        .iter()
        .flat_map(|&u| v7.iter().map(move |&w| (u, w)))
        .find(|&(u, w)| l.dist(u, w) > 4)
        .map(|(u, w)| vec![u, w]);
    if fail.is_none() && diameter == 8 {
        fail = l
            .union(6, 8)
            .iter()
            .flat_map(|&u| v8.iter().map(move |&w| (u, w)))
            .find(|&(u, w)| l.dist(u, w) > 2)
            .map(|(u, w)| vec![u, w]);
    }
    facts.push(outcome("vii", fail));

    Ok(FactsReport {
        alpha,
        diameter,
        facts,
    })
}

/// Whether some vertex of `targets` other than `avoid` is reachable from
/// `start` in `g - avoid`.
fn reaches_avoiding(g: &Graph, start: usize, targets: &[usize], avoid: usize) -> bool {
    if start == avoid {
        return false;
    }
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    seen[avoid] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        if x != avoid && targets.contains(&x) {
            return true;
        }
        for &y in g.neighbours(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn p9_from_an_endpoint() {
        let r = extremal_facts_check(&path(9), 0).unwrap();
        assert_eq!(r.facts.len(), 9);
        // V_3 ∪ V_4 = {3, 4}, at distance 1.
        assert!(r.facts[0].passed);
        // V_4 = {4} is adjacent to 3 and equal to 4, so (iv) fails at u = 3.
        assert_eq!(r.facts[3].witness, Some(vec![3]));
        // d(3, 2) = 1, never 5.
        assert_eq!(r.facts[7].witness, Some(vec![3]));
    }

    #[test]
    fn small_diameter_is_vacuous() {
        let r = extremal_facts_check(&path(3), 0).unwrap();
        assert!(r.all_passed());
    }

    #[test]
    fn rejects_non_peripheral() {
        assert_eq!(extremal_facts_check(&path(5), 2), Err(Error::NotPeripheral(2)));
    }
}
