//! Exact minimum-cost set cover over a universe of at most 64 elements.
//!
//! Phase one finds the optimum by branching on the uncovered element with
//! the fewest candidate sets, pruned by a greedy dual (packing) bound.
//! Phase two re-searches with the optimum fixed, deciding sets in index
//! order with inclusion first, so the first cover found is the
//! lexicographically least one.

#[derive(Debug, Clone)]
pub struct CoverInstance {
    pub universe: u64,
    pub sets: Vec<u64>,
    pub costs: Vec<u64>,
    /// Order in which uncovered elements receive dual weight in the bound.
    pub dual_order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    pub cost: u64,
    pub chosen: Vec<usize>,
    pub nodes: u64,
}

struct Ctx<'a> {
    inst: &'a CoverInstance,
    sets_of: Vec<Vec<usize>>,
    nodes: u64,
}

impl<'a> Ctx<'a> {
    /// Greedy dual: each uncovered element takes the least residual slack
    /// of the sets (with index >= `from`) containing it.
    fn dual_bound(&self, uncovered: u64, from: usize, slack: &mut [u64]) -> u64 {
        for (s, c) in slack.iter_mut().enumerate() {
            *c = self.inst.costs[s];
        }
        let mut total = 0;
        for &u in &self.inst.dual_order {
            if uncovered >> u & 1 == 0 {
                continue;
            }
            let y = self.sets_of[u]
                .iter()
                .filter(|&&s| s >= from)
                .map(|&s| slack[s])
                .min()
                .unwrap_or(u64::MAX / 4);
            if y == 0 {
                continue;
            }
            for &s in &self.sets_of[u] {
                if s >= from {
                    slack[s] -= y;
                }
            }
            total += y;
        }
        total
    }

    fn optimize(&mut self, uncovered: u64, cost: u64, best: &mut (u64, Vec<usize>), chosen: &mut Vec<usize>, slack: &mut [u64]) {
        self.nodes += 1;
        if uncovered == 0 {
            if cost < best.0 {
                *best = (cost, chosen.clone());
            }
            return;
        }
        if cost + self.dual_bound(uncovered, 0, slack) >= best.0 {
            return;
        }
        let pivot = (0..64)
            .filter(|&u| uncovered >> u & 1 == 1)
            .min_by_key(|&u| (self.sets_of[u].len(), u))
            .unwrap();
        // Skip candidates dominated on the uncovered part by a cheaper or
        // equal-cost candidate.
        let cands = &self.sets_of[pivot];
        let mut keep: Vec<usize> = Vec::with_capacity(cands.len());
        for &s in cands {
            let cover_s = self.inst.sets[s] & uncovered;
            let dominated = cands.iter().any(|&t| {
                if t == s {
                    return false;
                }
                let cover_t = self.inst.sets[t] & uncovered;
                let sub = cover_s & !cover_t == 0;
                let (cs, ct) = (self.inst.costs[s], self.inst.costs[t]);
                sub && (ct < cs || (ct == cs && (cover_t != cover_s || t < s)))
            });
            if !dominated {
                keep.push(s);
            }
        }
        keep.sort_by_key(|&s| {
            let gain = (self.inst.sets[s] & uncovered).count_ones() as u64;
            // Prefer more coverage per unit cost.
            (std::cmp::Reverse(gain * 1000 / self.inst.costs[s]), s)
        });
        for s in keep {
            let c = cost + self.inst.costs[s];
            if c >= best.0 {
                continue;
            }
            chosen.push(s);
            self.optimize(uncovered & !self.inst.sets[s], c, best, chosen, slack);
            chosen.pop();
        }
    }

    fn lex_first(&mut self, idx: usize, uncovered: u64, budget: u64, chosen: &mut Vec<usize>, slack: &mut [u64]) -> bool {
        self.nodes += 1;
        if uncovered == 0 {
            return budget == 0;
        }
        if idx == self.inst.sets.len() || budget == 0 {
            return false;
        }
        if self.dual_bound(uncovered, idx, slack) > budget {
            return false;
        }
        // Every uncovered element needs a remaining set.
        let reachable = self.inst.sets[idx..].iter().fold(0u64, |acc, &s| acc | s);
        if uncovered & !reachable != 0 {
            return false;
        }
        let s = idx;
        if self.inst.sets[s] & uncovered != 0 && self.inst.costs[s] <= budget {
            chosen.push(s);
            if self.lex_first(idx + 1, uncovered & !self.inst.sets[s], budget - self.inst.costs[s], chosen, slack) {
                return true;
            }
            chosen.pop();
        }
        self.lex_first(idx + 1, uncovered, budget, chosen, slack)
    }
}

/// Solves the instance exactly. `upper` is the cost of some known cover
/// and only serves as the initial incumbent value.
pub fn solve(inst: &CoverInstance, upper: Option<u64>) -> Option<CoverSolution> {
    let mut sets_of = vec![Vec::new(); 64];
    for (s, &mask) in inst.sets.iter().enumerate() {
        for (u, list) in sets_of.iter_mut().enumerate() {
            if mask >> u & 1 == 1 {
                list.push(s);
            }
        }
    }
    let reachable = inst.sets.iter().fold(0u64, |acc, &s| acc | s);
    if inst.universe & !reachable != 0 {
        return None;
    }
    let mut ctx = Ctx {
        inst,
        sets_of,
        nodes: 0,
    };
    let mut slack = vec![0; inst.sets.len()];
    let mut best = (upper.map_or(u64::MAX, |c| c + 1), Vec::new());
    ctx.optimize(inst.universe, 0, &mut best, &mut Vec::new(), &mut slack);
    let opt = best.0;
    assert!(opt != u64::MAX && upper.is_none_or(|c| opt <= c));
    let mut chosen = Vec::new();
    let found = ctx.lex_first(0, inst.universe, opt, &mut chosen, &mut slack);
    assert!(found, "a cover of the optimal cost exists");
    Some(CoverSolution {
        cost: opt,
        chosen,
        nodes: ctx.nodes,
    })
}
