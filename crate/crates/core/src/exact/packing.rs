//! Exact maximum packing: the largest vertex set meeting each constraint
//! ball in at most its capacity.
//!
//! Branch and bound over vertex inclusion. Capacities are propagated: once
//! a ball is full, its remaining members leave the candidate pool. The
//! bound is a greedy clique partition of the candidates, where two
//! candidates conflict when some ball with one unit of residual capacity
//! holds both.

#[derive(Debug, Clone)]
pub struct PackingInstance {
    pub n: usize,
    /// `(ball, capacity)` pairs.
    pub constraints: Vec<(u64, u32)>,
    /// Branching order for the optimisation phase.
    pub order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingSolution {
    pub members: Vec<usize>,
    pub nodes: u64,
}

struct Ctx<'a> {
    inst: &'a PackingInstance,
    of_vertex: Vec<Vec<usize>>,
    residual: Vec<u32>,
    rank: Vec<usize>,
    nodes: u64,
}

impl<'a> Ctx<'a> {
    fn conflicts(&self, v: usize, pool: u64) -> u64 {
        let mut out = 0;
        for &c in &self.of_vertex[v] {
            if self.residual[c] == 1 {
                out |= self.inst.constraints[c].0;
            }
        }
        out & pool & !(1 << v)
    }

    fn bound(&self, pool: u64) -> u32 {
        let mut left = pool;
        let mut cliques = 0;
        while left != 0 {
            let v = self.first(left);
            let mut cand = self.conflicts(v, left);
            left &= !(1 << v);
            while cand != 0 {
                let u = self.first(cand);
                left &= !(1 << u);
                cand &= self.conflicts(u, left) & !(1 << u);
            }
            cliques += 1;
        }
        cliques
    }

    fn first(&self, pool: u64) -> usize {
        let mut best = usize::MAX;
        let mut m = pool;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if best == usize::MAX || self.rank[v] < self.rank[best] {
                best = v;
            }
        }
        best
    }

    /// Takes `v`; returns the candidates it excludes and the touched balls.
    fn take(&mut self, v: usize) -> u64 {
        let mut banned = 0;
        for &c in &self.of_vertex[v] {
            self.residual[c] -= 1;
            if self.residual[c] == 0 {
                banned |= self.inst.constraints[c].0;
            }
        }
        banned
    }

    fn untake(&mut self, v: usize) {
        for &c in &self.of_vertex[v] {
            self.residual[c] += 1;
        }
    }

    /// Optimisation phase: improves `best` whenever a larger set appears.
    fn optimize(&mut self, chosen: u64, pool: u64, best: &mut u64) {
        self.nodes += 1;
        let size = chosen.count_ones();
        if size > best.count_ones() {
            *best = chosen;
        }
        if pool == 0 || size + self.bound(pool) <= best.count_ones() {
            return;
        }
        let v = self.first(pool);
        let banned = self.take(v);
        self.optimize(chosen | 1 << v, pool & !banned & !(1 << v), best);
        self.untake(v);
        self.optimize(chosen, pool & !(1 << v), best);
    }

    /// Feasibility phase with ids decided in increasing order, inclusion
    /// first: the first set of size `target` found is lexicographically
    /// least.
    fn lex_first(&mut self, chosen: u64, pool: u64, target: u32) -> Option<u64> {
        self.nodes += 1;
        let size = chosen.count_ones();
        if size == target {
            return Some(chosen);
        }
        if pool == 0 || size + self.bound(pool) < target {
            return None;
        }
        let v = pool.trailing_zeros() as usize;
        let banned = self.take(v);
        let found = self.lex_first(chosen | 1 << v, pool & !banned & !(1 << v), target);
        self.untake(v);
        found.or_else(|| self.lex_first(chosen, pool & !(1 << v), target))
    }
}

pub fn solve(inst: &PackingInstance) -> PackingSolution {
    let n = inst.n;
    assert!(n <= 64);
    let mut of_vertex = vec![Vec::new(); n];
    for (c, &(mask, _)) in inst.constraints.iter().enumerate() {
        for (v, list) in of_vertex.iter_mut().enumerate() {
            if mask >> v & 1 == 1 {
                list.push(c);
            }
        }
    }
    let mut rank = vec![0; n];
    for (i, &v) in inst.order.iter().enumerate() {
        rank[v] = i;
    }
    let residual: Vec<u32> = inst.constraints.iter().map(|&(_, cap)| cap).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // Balls of capacity zero exclude their members outright.
    let pool = inst
        .constraints
        .iter()
        .filter(|&&(_, cap)| cap == 0)
        .fold(full, |p, &(mask, _)| p & !mask);
    let mut ctx = Ctx {
        inst,
        of_vertex,
        residual,
        rank,
        nodes: 0,
    };
    let mut best = 0;
    ctx.optimize(0, pool, &mut best);
    let target = best.count_ones();
    ctx.rank = (0..n).collect();
    let lex = ctx.lex_first(0, pool, target).expect("optimum is attainable");
    PackingSolution {
        members: (0..n).filter(|&v| lex >> v & 1 == 1).collect(),
        nodes: ctx.nodes,
    }
}
