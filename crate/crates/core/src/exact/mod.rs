//! Exact solvers for γ, ρ, γ_b and mp_k, certificate verifiers, and the
//! bound chain relating them.

pub(crate) mod cover;
mod facts;
pub(crate) mod packing;

use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{diametrical_path, Broadcast, Graph, Multipacking};

pub use facts::{extremal_facts_check, FactOutcome, FactsReport};

/// Largest graph accepted by the exact solvers.
pub const MAX_EXACT_VERTICES: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Broadcast(Broadcast),
    Multipacking(Multipacking),
    VertexSet { vertices: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub parameter: String,
    pub value: usize,
    pub certificate: Certificate,
    pub nodes_explored: u64,
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_EXACT_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "exact solvers accept at most {MAX_EXACT_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

fn mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

/// Peripheral-first order for the dual bound: vertices far from everything
/// lie in few cheap balls.
fn dual_order(g: &Graph) -> Vec<usize> {
    let d = g.distances();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(d.ecc(v)), v));
    order
}

fn min_dominating_set(g: &Graph) -> cover::CoverSolution {
    let inst = cover::CoverInstance {
        universe: full_mask(g.n()),
        sets: (0..g.n()).map(|v| mask(&g.closed_neighbourhood(v))).collect(),
        costs: vec![1; g.n()],
        dual_order: dual_order(g),
    };
    cover::solve(&inst, None).expect("closed neighbourhoods cover every vertex")
}

/// Minimum dominating set; the certificate is the lexicographically least
/// one.
pub fn domination_number(g: &Graph) -> Result<SolveResult> {
    check_size(g)?;
    let sol = min_dominating_set(g);
    Ok(SolveResult {
        parameter: "gamma".into(),
        value: sol.cost as usize,
        certificate: Certificate::VertexSet { vertices: sol.chosen },
        nodes_explored: sol.nodes,
    })
}

/// Maximum 2-packing: at most one vertex in every closed neighbourhood.
pub fn two_packing_number(g: &Graph) -> Result<SolveResult> {
    check_size(g)?;
    let inst = packing::PackingInstance {
        n: g.n(),
        constraints: (0..g.n())
            .map(|v| (mask(&g.closed_neighbourhood(v)), 1))
            .collect(),
        order: growth_order(g),
    };
    let sol = packing::solve(&inst);
    Ok(SolveResult {
        parameter: "rho".into(),
        value: sol.members.len(),
        certificate: Certificate::VertexSet {
            vertices: sol.members,
        },
        nodes_explored: sol.nodes,
    })
}

/// Exact γ_b as a minimum-cost cover by balls `N_k[j]` of cost `k`, with
/// `k <= rad`. Columns are ordered by `(center, radius)` and the certificate
/// is the lexicographically least optimal column set.
pub fn broadcast_number(g: &Graph) -> Result<SolveResult> {
    g.require_nontrivial()?;
    check_size(g)?;
    let d = g.distances();
    let rad = d.radius();
    let mut cols = Vec::new();
    for j in 0..g.n() {
        for k in 1..=d.ecc(j).min(rad) {
            cols.push((j, k));
        }
    }
    let gamma = min_dominating_set(g).cost;
    let inst = cover::CoverInstance {
        universe: full_mask(g.n()),
        sets: cols.iter().map(|&(j, k)| mask(&d.ball(j, k))).collect(),
        costs: cols.iter().map(|&(_, k)| k as u64).collect(),
        dual_order: dual_order(g),
    };
    let sol = cover::solve(&inst, Some(gamma.min(rad as u64))).expect("a radius ball covers");
    let pairs: Vec<(usize, usize)> = sol.chosen.iter().map(|&c| cols[c]).collect();
    let b = Broadcast::from_pairs(g, &pairs)?;
    debug_assert_eq!(b.cost() as u64, sol.cost);
    Ok(SolveResult {
        parameter: "gamma_b".into(),
        value: sol.cost as usize,
        certificate: Certificate::Broadcast(b),
        nodes_explored: sol.nodes,
    })
}

fn growth_order(g: &Graph) -> Vec<usize> {
    let d = g.distances();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (d.ball_size(v, 2), v));
    order
}

/// Ball constraints `|M ∩ N_s[v]| <= s` for `1 <= s <= k`, dropping those
/// that can never bind and duplicates of a tighter ball.
fn multipacking_constraints(g: &Graph, k: usize) -> Vec<(u64, u32)> {
    let d = g.distances();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for v in 0..g.n() {
        for s in 1..=k {
            if d.ball_size(v, s) <= s {
                continue;
            }
            out.push((mask(&d.ball(v, s)), s as u32));
        }
    }
    out.sort_unstable();
    out.dedup_by_key(|c| c.0);
    out
}

/// Exact mp_k; `k = None` means `k = diam`.
pub fn multipacking_number(g: &Graph, k: Option<usize>) -> Result<SolveResult> {
    g.require_nontrivial()?;
    check_size(g)?;
    let diameter = g.distances().diameter();
    let k = k.unwrap_or(diameter);
    if k < 1 || k > diameter {
        return Err(Error::HorizonOutOfRange { k, diameter });
    }
    let inst = packing::PackingInstance {
        n: g.n(),
        constraints: multipacking_constraints(g, k),
        order: growth_order(g),
    };
    let sol = packing::solve(&inst);
    Ok(SolveResult {
        parameter: if k == diameter { "mp".into() } else { format!("mp_{k}") },
        value: sol.members.len(),
        certificate: Certificate::Multipacking(Multipacking::new(sol.members, k)),
        nodes_explored: sol.nodes,
    })
}

/// Every third vertex of the canonical diametrical path.
pub fn diametrical_lower_bound(g: &Graph) -> Result<Multipacking> {
    g.require_nontrivial()?;
    let path = diametrical_path(g);
    let members = path.iter().step_by(3).copied().collect();
    Ok(Multipacking::new(members, g.distances().diameter()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageCheck {
    pub dominating: bool,
    pub uncovered: Vec<usize>,
}

fn coverage(g: &Graph, b: &Broadcast) -> Vec<usize> {
    let d = g.distances();
    let mut hits = vec![0; g.n()];
    for (u, p) in b.support() {
        for v in d.ball(u, p) {
            hits[v] += 1;
        }
    }
    hits
}

pub fn verify_dominating_broadcast(g: &Graph, b: &Broadcast) -> CoverageCheck {
    let uncovered: Vec<usize> = coverage(g, b)
        .iter()
        .enumerate()
        .filter(|(_, &h)| h == 0)
        .map(|(v, _)| v)
        .collect();
    CoverageCheck {
        dominating: uncovered.is_empty(),
        uncovered,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingCheck {
    pub valid: bool,
    /// First `(v, s)` with `|M ∩ N_s[v]| > s`, scanning `s` then `v`.
    pub violation: Option<(usize, usize)>,
}

pub fn verify_multipacking(g: &Graph, members: &[usize], k: usize) -> Result<PackingCheck> {
    for &v in members {
        g.check_vertex(v)?;
    }
    let d = g.distances();
    let mut set = vec![false; g.n()];
    for &v in members {
        set[v] = true;
    }
    for s in 1..=k {
        for v in 0..g.n() {
            let inside = d.row(v).iter().zip(&set).filter(|(&dv, &m)| m && dv <= s).count();
            if inside > s {
                return Ok(PackingCheck {
                    valid: false,
                    violation: Some((v, s)),
                });
            }
        }
    }
    Ok(PackingCheck {
        valid: true,
        violation: None,
    })
}

/// True iff every vertex hears exactly one broadcast.
pub fn verify_efficient(g: &Graph, b: &Broadcast) -> Result<bool> {
    let hits = coverage(g, b);
    if hits.contains(&0) {
        return Err(Error::NotDominating);
    }
    Ok(hits.iter().all(|&h| h == 1))
}

fn ratio_string<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub diameter_lb: usize,
    pub mp: usize,
    pub gamma_b: usize,
    pub gamma: usize,
    pub rho: usize,
    pub radius: usize,
    pub chain_ok: bool,
    #[serde(serialize_with = "ratio_string")]
    pub ratio: Ratio<u64>,
    /// For cycles: whether `mp = γ_b` holds exactly when `3 | n`.
    pub cycle_equality: Option<bool>,
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.edge_count() == g.n() && (0..g.n()).all(|v| g.degree(v) == 2)
}

pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    g.require_nontrivial()?;
    let d = g.distances();
    let diameter_lb = (d.diameter() + 1).div_ceil(3);
    let mp = multipacking_number(g, None)?.value;
    let gamma_b = broadcast_number(g)?.value;
    let gamma = domination_number(g)?.value;
    let rho = two_packing_number(g)?.value;
    let radius = d.radius();
    let ratio = Ratio::new(gamma_b as u64, mp as u64);
    let chain_ok = diameter_lb <= mp
        && mp <= gamma_b
        && gamma_b <= radius.min(gamma)
        && ratio < Ratio::from_integer(3)
        && (mp < 2 || gamma_b + 2 <= 3 * mp);
    let cycle_equality = is_cycle(g).then(|| (mp == gamma_b) == g.n().is_multiple_of(3));
    Ok(BoundReport {
        diameter_lb,
        mp,
        gamma_b,
        gamma,
        rho,
        radius,
        chain_ok,
        ratio,
        cycle_equality,
    })
}

/// Every minimum dominating set, in lexicographic order.
pub fn all_minimum_dominating_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check_size(g)?;
    let gamma = min_dominating_set(g).cost as usize;
    let closed: Vec<u64> = (0..g.n()).map(|v| mask(&g.closed_neighbourhood(v))).collect();
    let full = full_mask(g.n());
    let mut out = Vec::new();
    fn rec(next: usize, left: usize, covered: u64, cur: &mut Vec<usize>, closed: &[u64], full: u64, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if covered == full {
                out.push(cur.clone());
            }
            return;
        }
        for v in next..closed.len() {
            if closed.len() - v < left {
                break;
            }
            cur.push(v);
            rec(v + 1, left - 1, covered | closed[v], cur, closed, full, out);
            cur.pop();
        }
    }
    rec(0, gamma, 0, &mut Vec::new(), &closed, full, &mut out);
    Ok(out)
}

/// The sufficient condition for a gap: `γ = γ_b` and no minimum dominating
/// set is efficient as a 0/1 broadcast (each vertex dominated exactly
/// once). Returns `None` when the hypothesis fails, else whether
/// `γ_b − mp >= 1`.
pub fn efficient_gamma_set_gap(g: &Graph) -> Result<Option<bool>> {
    let gamma = domination_number(g)?.value;
    let gamma_b = broadcast_number(g)?.value;
    if gamma != gamma_b {
        return Ok(None);
    }
    let closed: Vec<u64> = (0..g.n()).map(|v| mask(&g.closed_neighbourhood(v))).collect();
    let any_efficient = all_minimum_dominating_sets(g)?.iter().any(|set| {
        let hits: u32 = set.iter().map(|&v| closed[v].count_ones()).sum();
        hits as usize == g.n()
    });
    if any_efficient {
        return Ok(None);
    }
    let mp = multipacking_number(g, None)?.value;
    Ok(Some(gamma_b > mp))
}
