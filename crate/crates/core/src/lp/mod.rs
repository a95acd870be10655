//! Fractional broadcasts and multipackings as exact rational LPs.

mod simplex;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{extended_matrix, ExtendedMatrix};

/// Columns accepted by [`solve_lp`].
pub const MAX_LP_COLUMNS: usize = 2000;

/// Exact rational in canonical form; serialized as `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(p: i64, q: i64) -> Rational {
        Rational(BigRational::new(p.into(), q.into()))
    }

    pub fn from_integer(p: i64) -> Rational {
        Rational(BigRational::from_integer(p.into()))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Rational {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("not a rational: {s:?}"),
        };
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p, q),
            None => (s.trim(), "1"),
        };
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(p, q)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Non-negative rational weight on each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalWeighting {
    weights: Vec<Rational>,
}

impl FractionalWeighting {
    pub fn new(weights: Vec<Rational>) -> Result<FractionalWeighting> {
        if let Some(v) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::ParamOutOfRange(format!("weight of vertex {v} is negative")));
        }
        Ok(FractionalWeighting { weights })
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn total(&self) -> Rational {
        Rational(self.weights.iter().map(|w| w.0.clone()).sum())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    /// `min c·x, Ax >= 1, x >= 0`: fractional broadcast.
    Cover,
    /// `max y·1, yA <= c, y >= 0`: fractional multipacking.
    Pack,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Optimum of one LP of the pair together with the other's solution.
/// `primal_solution` is indexed by columns for Cover and rows for Pack.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpResult {
    pub sense: Sense,
    pub status: LpStatus,
    pub optimum: Rational,
    pub primal_solution: Vec<Rational>,
    pub dual_solution: Vec<Rational>,
}

/// Solves the broadcast cover LP or its multipacking dual exactly; both
/// solutions are checked for feasibility and equal objectives.
pub fn solve_lp(a: &ExtendedMatrix, sense: Sense) -> Result<LpResult> {
    if a.cols() > MAX_LP_COLUMNS {
        return Err(Error::ResourceLimit(format!(
            "LP has {} columns, limit is {MAX_LP_COLUMNS}",
            a.cols()
        )));
    }
    if let Some(c) = a.col_cost.iter().position(|&c| c == 0) {
        return Err(Error::ParamOutOfRange(format!("column {c} has zero cost")));
    }
    let rows: Vec<Vec<bool>> = (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| a.matrix.get(i, j)).collect())
        .collect();
    let costs: Vec<u64> = a.col_cost.iter().map(|&c| c as u64).collect();
    let opt = simplex::solve_cover(&rows, &costs)?;
    assert!(simplex::certify(&rows, &costs, &opt), "simplex optimum failed its certificate");
    let x: Vec<Rational> = opt.x.into_iter().map(Rational).collect();
    let y: Vec<Rational> = opt.y.into_iter().map(Rational).collect();
    let (primal_solution, dual_solution) = match sense {
        Sense::Cover => (x, y),
        Sense::Pack => (y, x),
    };
    Ok(LpResult {
        sense,
        status: LpStatus::Optimal,
        optimum: Rational(opt.value),
        primal_solution,
        dual_solution,
    })
}

/// mp_f with an optimal weighting (a basic solution, not canonicalised).
pub fn fractional_multipacking_number(g: &Graph) -> Result<(Rational, FractionalWeighting)> {
    let a = extended_matrix(g)?;
    let res = solve_lp(&a, Sense::Pack)?;
    let mut weights = vec![Rational::zero(); g.n()];
    for (i, w) in res.primal_solution.into_iter().enumerate() {
        weights[a.row_index[i]] = w;
    }
    Ok((res.optimum, FractionalWeighting::new(weights)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalCheck {
    pub valid: bool,
    /// First `(v, s)` whose ball weight exceeds `s`, scanning `v` then `s`.
    pub violation: Option<(usize, usize)>,
}

pub fn verify_fractional(g: &Graph, y: &FractionalWeighting) -> FractionalCheck {
    let d = g.distances();
    for v in 0..g.n() {
        for s in 1..=d.ecc(v) {
            let load: BigRational = d.ball(v, s).iter().map(|&u| y.weights[u].0.clone()).sum();
            if load > BigRational::from_integer(s.into()) {
                return FractionalCheck {
                    valid: false,
                    violation: Some((v, s)),
                };
            }
        }
    }
    FractionalCheck {
        valid: true,
        violation: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformForm {
    pub w_star: Rational,
    pub r_star: usize,
    pub mp_f: Rational,
}

fn ratio(r: usize, size: usize) -> BigRational {
    BigRational::new(r.into(), size.into())
}

/// Closed form for graphs whose ball sizes `|N_r[v]|` do not depend on `v`:
/// the uniform weight `w* = min_r r / |N_r|` is optimal.
pub fn uniform_closed_form(g: &Graph) -> Result<UniformForm> {
    g.require_nontrivial()?;
    let d = g.distances();
    let mut best: Option<(BigRational, usize)> = None;
    for r in 1..=d.radius() {
        let size = d.ball_size(0, r);
        if (1..g.n()).any(|v| d.ball_size(v, r) != size) {
            return Err(Error::NotBallUniform(r));
        }
        let w = ratio(r, size);
        if best.as_ref().is_none_or(|(b, _)| w < *b) {
            best = Some((w, r));
        }
    }
    let (w, r_star) = best.expect("non-trivial graphs have radius >= 1");
    let mp_f = &w * BigRational::from_integer(g.n().into());
    Ok(UniformForm {
        w_star: Rational(w),
        r_star,
        mp_f: Rational(mp_f),
    })
}

/// `n · min r / |N_r[v]|` over all vertices and `1 <= r <= ecc(v)`: the
/// value of the best feasible uniform weighting.
pub fn trivial_lower_bound(g: &Graph) -> Result<Rational> {
    g.require_nontrivial()?;
    let d = g.distances();
    let w = (0..g.n())
        .flat_map(|v| (1..=d.ecc(v)).map(move |r| ratio(r, d.ball_size(v, r))))
        .min()
        .expect("non-trivial graphs have a ball");
    Ok(Rational(w * BigRational::from_integer(g.n().into())))
}

/// The ratio `mp / mp_f`, used to check the integrality gap.
pub fn integrality_ratio(mp: usize, mp_f: &Rational) -> Rational {
    if mp_f.0.is_zero() {
        return Rational(BigRational::one());
    }
    Rational(BigRational::from_integer(mp.into()) / &mp_f.0)
}
