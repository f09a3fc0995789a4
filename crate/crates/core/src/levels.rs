//! Distance levels around a chosen center set and the lower bound they give
//! on the radio number.
//!
//! For a center `L0` with `k = max d(u, v)` over `u, v ∈ L0`, every radio
//! labeling has span at least
//!
//! ```text
//! (p - 1)(d - k + 1) + δ - 2 Σ_v d(v, L0)
//! ```
//!
//! where `δ = 1` when `L0` is a single vertex and `0` otherwise.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    center: Vec<Vertex>,
    levels: Vec<Vec<Vertex>>,
    level_of: Vec<u32>,
    k: u32,
}

impl LevelDecomposition {
    /// Sorted, deduplicated center set `L0`.
    pub fn center(&self) -> &[Vertex] {
        &self.center
    }

    /// `L0, L1, ..., Lh`, each sorted by vertex index.
    pub fn levels(&self) -> &[Vec<Vertex>] {
        &self.levels
    }

    /// `d(v, L0)`.
    #[inline]
    pub fn level_of(&self, v: Vertex) -> u32 {
        self.level_of[v]
    }

    pub fn level_map(&self) -> &[u32] {
        &self.level_of
    }

    /// Maximum level index.
    pub fn h(&self) -> u32 {
        (self.levels.len() - 1) as u32
    }

    /// Largest graph distance between two center vertices.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// 1 for a single-vertex center, else 0. Also 0 on the one-vertex graph,
    /// where no vertex can follow the center.
    pub fn delta(&self) -> u32 {
        u32::from(self.center.len() == 1 && self.level_of.len() > 1)
    }

    /// `Σ |L_i| · i`.
    pub fn weight(&self) -> u64 {
        self.level_of.iter().map(|&l| u64::from(l)).sum()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.level_of[v] == 0
    }
}

/// Builds the level decomposition of `g` around `center`.
pub fn decompose(g: &Graph, dm: &DistanceMatrix, center: &[Vertex]) -> Result<LevelDecomposition> {
    if center.is_empty() {
        return Err(Error::EmptyCenter);
    }
    let p = g.order();
    let mut center = center.to_vec();
    center.sort_unstable();
    center.dedup();
    if let Some(&v) = center.iter().find(|&&v| v >= p) {
        return Err(Error::VertexOutOfRange { vertex: v, order: p });
    }
    let level_of = center_levels(dm, &center);
    let h = level_of.iter().copied().max().unwrap_or(0) as usize;
    let mut levels = vec![Vec::new(); h + 1];
    for (v, &l) in level_of.iter().enumerate() {
        levels[l as usize].push(v);
    }
    Ok(LevelDecomposition {
        k: center_spread(dm, &center),
        center,
        levels,
        level_of,
    })
}

fn center_levels(dm: &DistanceMatrix, center: &[Vertex]) -> Vec<u32> {
    let mut level = dm.row(center[0]).to_vec();
    for &c in &center[1..] {
        for (l, &d) in level.iter_mut().zip(dm.row(c)) {
            *l = (*l).min(d);
        }
    }
    level
}

fn center_spread(dm: &DistanceMatrix, center: &[Vertex]) -> u32 {
    let mut k = 0;
    for (i, &a) in center.iter().enumerate() {
        for &b in &center[i + 1..] {
            k = k.max(dm.get(a, b));
        }
    }
    k
}

/// The four ingredients of the bound: `bound = p_minus_1 * d_minus_k_plus_1 + delta - twice_weight`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTerms {
    pub p_minus_1: i64,
    pub d_minus_k_plus_1: i64,
    pub delta: i64,
    pub twice_weight: i64,
}

impl BoundTerms {
    pub fn total(&self) -> i64 {
        self.p_minus_1 * self.d_minus_k_plus_1 + self.delta - self.twice_weight
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: i64,
    pub p: usize,
    pub d: u32,
    pub k: u32,
    pub delta: u32,
    pub h: u32,
    pub weight: u64,
    pub terms: BoundTerms,
    pub center: Vec<Vertex>,
}

/// Evaluates the level bound for a decomposition of `g`. May be negative for
/// poorly chosen centers.
pub fn lower_bound(g: &Graph, dm: &DistanceMatrix, dec: &LevelDecomposition) -> BoundReport {
    let p = g.order();
    let d = dm.diameter();
    let terms = BoundTerms {
        p_minus_1: p as i64 - 1,
        d_minus_k_plus_1: i64::from(d) - i64::from(dec.k()) + 1,
        delta: i64::from(dec.delta()),
        twice_weight: 2 * dec.weight() as i64,
    };
    BoundReport {
        bound: terms.total(),
        p,
        d,
        k: dec.k(),
        delta: dec.delta(),
        h: dec.h(),
        weight: dec.weight(),
        terms,
        center: dec.center().to_vec(),
    }
}

/// Which family of center sets `best_center` searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterStrategy {
    Singletons,
    Edges,
    /// Maximal cliques.
    Cliques,
    /// Singletons, closed neighbourhoods and, on annotated product graphs,
    /// single columns and pairs of adjacent columns.
    Balls,
    /// Every nonempty subset with at most `max_size` vertices.
    Exhaustive {
        max_size: usize,
    },
}

impl fmt::Display for CenterStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterStrategy::Singletons => f.write_str("singletons"),
            CenterStrategy::Edges => f.write_str("edges"),
            CenterStrategy::Cliques => f.write_str("cliques"),
            CenterStrategy::Balls => f.write_str("balls"),
            CenterStrategy::Exhaustive { max_size } => write!(f, "exhaustive:{max_size}"),
        }
    }
}

impl FromStr for CenterStrategy {
    type Err = Error;

    /// Accepts `singletons`, `edges`, `cliques`, `balls`, `exhaustive` (no size
    /// limit) and `exhaustive:N`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            message: format!("unknown center strategy `{s}`"),
        };
        Ok(match s {
            "singletons" => CenterStrategy::Singletons,
            "edges" => CenterStrategy::Edges,
            "cliques" => CenterStrategy::Cliques,
            "balls" => CenterStrategy::Balls,
            "exhaustive" => CenterStrategy::Exhaustive { max_size: usize::MAX },
            _ => {
                let size = s.strip_prefix("exhaustive:").ok_or_else(bad)?;
                CenterStrategy::Exhaustive {
                    max_size: size.parse().map_err(|_| bad())?,
                }
            }
        })
    }
}

/// Largest subset order for which unrestricted exhaustive search is allowed.
pub const EXHAUSTIVE_MAX_ORDER: usize = 16;
/// Subset size up to which exhaustive search is allowed on any graph.
pub const EXHAUSTIVE_MAX_SUBSET: usize = 3;

/// Candidate center sets for `strategy`, each sorted.
pub fn candidate_centers(g: &Graph, strategy: CenterStrategy) -> Result<Vec<Vec<Vertex>>> {
    let p = g.order();
    let mut out: Vec<Vec<Vertex>> = match strategy {
        CenterStrategy::Singletons => (0..p).map(|v| vec![v]).collect(),
        CenterStrategy::Edges => g.edges().iter().map(|&(a, b)| vec![a, b]).collect(),
        CenterStrategy::Cliques => maximal_cliques(g),
        CenterStrategy::Balls => {
            let mut c: Vec<Vec<Vertex>> = (0..p).map(|v| vec![v]).collect();
            for v in 0..p {
                let mut ball = g.neighbors(v).to_vec();
                ball.push(v);
                ball.sort_unstable();
                c.push(ball);
            }
            if let Some((n, _)) = g.grid() {
                for i in 1..=n {
                    c.push(g.column(i));
                    if i < n {
                        let mut two = g.column(i);
                        two.extend(g.column(i + 1));
                        two.sort_unstable();
                        c.push(two);
                    }
                }
            }
            c
        }
        CenterStrategy::Exhaustive { max_size } => {
            if p > EXHAUSTIVE_MAX_ORDER && max_size > EXHAUSTIVE_MAX_SUBSET {
                return Err(Error::InfeasibleStrategy {
                    strategy: strategy.to_string(),
                    order: p,
                });
            }
            let mut c = Vec::new();
            let mut cur = Vec::new();
            subsets(p, max_size.min(p), 0, &mut cur, &mut c);
            c
        }
    };
    if out.is_empty() {
        out.push((0..p).collect());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn subsets(p: usize, max: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    if !cur.is_empty() {
        out.push(cur.clone());
    }
    if cur.len() == max {
        return;
    }
    for v in start..p {
        cur.push(v);
        subsets(p, max, v + 1, cur, out);
        cur.pop();
    }
}

/// Maximal cliques by Bron–Kerbosch with pivoting, each sorted.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
    fn expand(g: &Graph, r: &mut Vec<Vertex>, p: Vec<Vertex>, x: Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .expect("p or x is nonempty");
        let mut p = p;
        let mut x = x;
        let branch: Vec<_> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in branch {
            r.push(v);
            let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(g, &mut Vec::new(), (0..g.order()).collect(), Vec::new(), &mut out);
    out
}

/// Bound value for a center without materialising the level lists.
pub fn bound_for_center(dm: &DistanceMatrix, center: &[Vertex]) -> i64 {
    let p = dm.order() as i64;
    let weight: i64 = center_levels(dm, center).iter().map(|&l| i64::from(l)).sum();
    let k = i64::from(center_spread(dm, center));
    let delta = i64::from(center.len() == 1 && p > 1);
    (p - 1) * (i64::from(dm.diameter()) - k + 1) + delta - 2 * weight
}

/// Picks the candidate center with the largest bound. Ties go to the smaller
/// center, then to the lexicographically smaller sorted vertex list.
pub fn best_center(
    g: &Graph,
    dm: &DistanceMatrix,
    strategy: CenterStrategy,
) -> Result<(LevelDecomposition, BoundReport)> {
    let candidates = candidate_centers(g, strategy)?;
    let best = candidates
        .iter()
        .map(|c| (bound_for_center(dm, c), c))
        .min_by(|(ba, ca), (bb, cb)| bb.cmp(ba).then(ca.len().cmp(&cb.len())).then(ca.cmp(cb)))
        .map(|(_, c)| c.clone())
        .expect("at least one candidate");
    let dec = decompose(g, dm, &best)?;
    let report = lower_bound(g, dm, &dec);
    Ok((dec, report))
}
