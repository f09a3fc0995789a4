//! Backtracking over label orders with level-bound pruning.
//!
//! Every search here extends a prefix `x_0 .. x_t` one vertex at a time and
//! gives each new vertex the least label compatible with the prefix. A prefix
//! is cut as soon as its last label plus a lower bound on the remaining
//! increments exceeds the target.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::labeling::{canonical_increment, Labeling, Ordering};
use crate::levels::{lower_bound, LevelDecomposition};

/// Node budget shared by the searches unless overridden.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Remaining-increment bound from one level decomposition.
///
/// Summing `d(a, b) <= level(a) + level(b) + k` over the transitions still to
/// be made from `last` through the set `R` of unplaced vertices gives
/// `|R|(d + 1 - k) - level(last) - 2 Σ_R level + level(x_{p-1})`, and the
/// final vertex has level at least `min_R level`.
#[derive(Clone, Debug)]
pub(crate) struct LevelTracker {
    level: Vec<u32>,
    per_step: i64,
    remaining_sum: i64,
    counts: Vec<usize>,
}

impl LevelTracker {
    pub(crate) fn new(dm: &DistanceMatrix, dec: &LevelDecomposition) -> Self {
        let level = dec.level_map().to_vec();
        let mut counts = vec![0; dec.h() as usize + 1];
        for &l in &level {
            counts[l as usize] += 1;
        }
        LevelTracker {
            remaining_sum: level.iter().map(|&l| i64::from(l)).sum(),
            per_step: i64::from(dm.diameter()) + 1 - i64::from(dec.k()),
            level,
            counts,
        }
    }

    pub(crate) fn place(&mut self, v: Vertex) {
        let l = self.level[v];
        self.remaining_sum -= i64::from(l);
        self.counts[l as usize] -= 1;
    }

    pub(crate) fn unplace(&mut self, v: Vertex) {
        let l = self.level[v];
        self.remaining_sum += i64::from(l);
        self.counts[l as usize] += 1;
    }

    /// Lower bound on `f(x_{p-1}) - f(last)` given `remaining` unplaced vertices.
    pub(crate) fn bound(&self, last: Vertex, remaining: usize) -> i64 {
        if remaining == 0 {
            return 0;
        }
        let min_level = self.counts.iter().position(|&c| c > 0).unwrap_or(0) as i64;
        let levels =
            remaining as i64 * self.per_step - i64::from(self.level[last]) - 2 * self.remaining_sum + min_level;
        levels.max(remaining as i64)
    }
}

/// Least label for `v` after the placed prefix.
#[inline]
pub(crate) fn min_label(dm: &DistanceMatrix, prefix: &[Vertex], labels: &[i64], v: Vertex) -> i64 {
    let need = i64::from(dm.diameter()) + 1;
    let row = dm.row(v);
    prefix
        .iter()
        .map(|&u| labels[u] + (need - i64::from(row[u])).max(1))
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub target_span: i64,
    /// Cap on the number of increments exceeding the canonical increment.
    /// `None` leaves only the span target.
    pub max_jumps: Option<usize>,
    pub budget: u64,
}

impl SearchOptions {
    pub fn new(target_span: i64) -> Self {
        SearchOptions {
            target_span,
            max_jumps: None,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn max_jumps(mut self, jumps: usize) -> Self {
        self.max_jumps = Some(jumps);
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundOrdering {
    pub ordering: Ordering,
    pub labeling: Labeling,
    /// `(index, extra)` for every increment above the canonical one.
    pub jumps: Vec<(usize, u64)>,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(FoundOrdering),
    /// The whole tree was explored: no order meets the target.
    Infeasible {
        nodes: u64,
    },
    BudgetExhausted {
        nodes: u64,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&FoundOrdering> {
        match self {
            SearchOutcome::Found(f) => Some(f),
            _ => None,
        }
    }
}

struct OrderSearch<'a> {
    dm: &'a DistanceMatrix,
    dec: &'a LevelDecomposition,
    opts: SearchOptions,
    tracker: LevelTracker,
    prefix: Vec<Vertex>,
    labels: Vec<i64>,
    used: Vec<bool>,
    jumps: Vec<(usize, u64)>,
    nodes: u64,
    out_of_budget: bool,
}

impl OrderSearch<'_> {
    fn dfs(&mut self) -> bool {
        let p = self.used.len();
        let t = self.prefix.len();
        if t == p {
            return true;
        }
        let last = *self.prefix.last().expect("root placed by caller");
        let last_label = self.labels[last];
        let remaining_after = p - t - 1;
        let mut cands: Vec<(i64, i64, Vertex)> = Vec::new();
        for v in 0..p {
            if self.used[v] {
                continue;
            }
            let label = min_label(self.dm, &self.prefix, &self.labels, v);
            let surplus = (label - last_label) - canonical_increment(self.dm, self.dec, last, v);
            if surplus > 0 && self.opts.max_jumps.is_some_and(|j| self.jumps.len() >= j) {
                continue;
            }
            cands.push((surplus, label, v));
        }
        cands.sort_unstable();
        for (surplus, label, v) in cands {
            self.tracker.place(v);
            let feasible = label + self.tracker.bound(v, remaining_after) <= self.opts.target_span;
            if feasible {
                self.nodes += 1;
                if self.nodes > self.opts.budget {
                    self.out_of_budget = true;
                    self.tracker.unplace(v);
                    return false;
                }
                self.used[v] = true;
                self.labels[v] = label;
                self.prefix.push(v);
                if surplus > 0 {
                    self.jumps.push((t, surplus as u64));
                }
                if self.dfs() {
                    return true;
                }
                if surplus > 0 {
                    self.jumps.pop();
                }
                self.prefix.pop();
                self.used[v] = false;
            }
            self.tracker.unplace(v);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// Depth-first search for an order whose least labeling has span at most
/// `opts.target_span`. Targets below the level bound of `dec` are rejected
/// without searching.
pub fn search_ordering(
    g: &Graph,
    dm: &DistanceMatrix,
    dec: &LevelDecomposition,
    opts: SearchOptions,
) -> Result<SearchOutcome> {
    let bound = lower_bound(g, dm, dec).bound;
    if opts.target_span < bound {
        return Err(Error::TargetBelowBound {
            target: opts.target_span,
            bound,
        });
    }
    let p = g.order();
    let mut s = OrderSearch {
        dm,
        dec,
        opts,
        tracker: LevelTracker::new(dm, dec),
        prefix: Vec::with_capacity(p),
        labels: vec![0; p],
        used: vec![false; p],
        jumps: Vec::new(),
        nodes: 0,
        out_of_budget: false,
    };
    let mut roots: Vec<Vertex> = (0..p).collect();
    roots.sort_by_key(|&v| (dec.level_of(v), v));
    for x0 in roots {
        s.tracker.place(x0);
        if s.tracker.bound(x0, p - 1) <= opts.target_span {
            s.nodes += 1;
            if s.nodes > opts.budget {
                return Ok(SearchOutcome::BudgetExhausted { nodes: s.nodes });
            }
            s.used[x0] = true;
            s.labels[x0] = 0;
            s.prefix.push(x0);
            if s.dfs() {
                let ordering = Ordering::new(s.prefix.clone(), p)?;
                let labeling = Labeling::new(s.labels.iter().map(|&l| l as u64).collect());
                return Ok(SearchOutcome::Found(FoundOrdering {
                    ordering,
                    labeling,
                    jumps: s.jumps,
                    nodes: s.nodes,
                }));
            }
            if s.out_of_budget {
                return Ok(SearchOutcome::BudgetExhausted { nodes: s.nodes });
            }
            s.prefix.pop();
            s.used[x0] = false;
        }
        s.tracker.unplace(x0);
    }
    Ok(SearchOutcome::Infeasible { nodes: s.nodes })
}

/// Whether the level bound of a given center is attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapCertificate {
    /// A radio labeling with span equal to the bound.
    BoundAchievable(Labeling),
    /// No order meets the exactness conditions, so the radio number is at
    /// least bound + 1.
    BoundUnachievable,
    BudgetExhausted,
}

/// Exhaustively looks for an order that satisfies the three exactness
/// conditions for `dec`: tight distances between neighbours in the order,
/// endpoints in `L0` (or `L0`, `L1` for a one-vertex center), and canonical
/// increments throughout.
pub fn certify_gap(g: &Graph, dm: &DistanceMatrix, dec: &LevelDecomposition, budget: u64) -> GapCertificate {
    let p = g.order();
    let bound = lower_bound(g, dm, dec).bound;
    if p == 1 {
        return GapCertificate::BoundAchievable(Labeling::new(vec![0]));
    }
    let mut c = Certifier {
        dm,
        dec,
        need: i64::from(dm.diameter()) + 1,
        bound,
        tracker: LevelTracker::new(dm, dec),
        end_level: u32::from(dec.center().len() == 1),
        prefix: Vec::with_capacity(p),
        labels: vec![0; p],
        used: vec![false; p],
        nodes: 0,
        budget,
    };
    for &x0 in dec.center() {
        c.tracker.place(x0);
        c.used[x0] = true;
        c.prefix.push(x0);
        c.labels[x0] = 0;
        c.nodes += 1;
        match c.dfs() {
            Some(true) => {
                let labels = c.labels.iter().map(|&l| l as u64).collect();
                return GapCertificate::BoundAchievable(Labeling::new(labels));
            }
            None => return GapCertificate::BudgetExhausted,
            Some(false) => {}
        }
        c.prefix.pop();
        c.used[x0] = false;
        c.tracker.unplace(x0);
    }
    GapCertificate::BoundUnachievable
}

struct Certifier<'a> {
    dm: &'a DistanceMatrix,
    dec: &'a LevelDecomposition,
    need: i64,
    bound: i64,
    tracker: LevelTracker,
    end_level: u32,
    prefix: Vec<Vertex>,
    labels: Vec<i64>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Certifier<'_> {
    /// `Some(true)` found, `Some(false)` subtree exhausted, `None` out of budget.
    fn dfs(&mut self) -> Option<bool> {
        let p = self.used.len();
        let t = self.prefix.len();
        let last = self.prefix[t - 1];
        let k = self.dec.k();
        for v in 0..p {
            if self.used[v] {
                continue;
            }
            if t == p - 1 && self.dec.level_of(v) != self.end_level {
                continue;
            }
            if self.dm.get(last, v) != self.dec.level_of(last) + self.dec.level_of(v) + k {
                continue;
            }
            let inc = canonical_increment(self.dm, self.dec, last, v);
            if inc < 1 {
                continue;
            }
            let label = self.labels[last] + inc;
            let row = self.dm.row(v);
            if self.prefix[..t - 1]
                .iter()
                .any(|&u| label - self.labels[u] < self.need - i64::from(row[u]))
            {
                continue;
            }
            self.tracker.place(v);
            if label + self.tracker.bound(v, p - t - 1) <= self.bound {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return None;
                }
                self.used[v] = true;
                self.labels[v] = label;
                self.prefix.push(v);
                if t + 1 == p {
                    return Some(true);
                }
                match self.dfs() {
                    Some(false) => {}
                    other => return other,
                }
                self.prefix.pop();
                self.used[v] = false;
            }
            self.tracker.unplace(v);
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distances;
    use crate::graph::{self, Family};
    use crate::labeling::verify_radio;
    use crate::levels::decompose;

    fn two_columns(g: &Graph, a: usize) -> Vec<Vertex> {
        let mut c = g.column(a);
        c.extend(g.column(a + 1));
        c
    }

    #[test]
    fn p4_k3_bound_is_achievable() {
        let g = graph::generate(Family::PnKm, &[4, 3]).unwrap();
        let dm = distances(&g);
        let dec = decompose(&g, &dm, &two_columns(&g, 2)).unwrap();
        match certify_gap(&g, &dm, &dec, DEFAULT_BUDGET) {
            GapCertificate::BoundAchievable(lab) => {
                assert_eq!(lab.span(), 21);
                assert!(verify_radio(&g, &dm, &lab).unwrap().valid);
            }
            other => panic!("{other:?}"),
        }
        let found = search_ordering(&g, &dm, &dec, SearchOptions::new(21)).unwrap();
        let f = found.found().expect("target 21 is attainable");
        assert_eq!(f.labeling.span(), 21);
        assert!(f.jumps.is_empty());
        assert!(verify_radio(&g, &dm, &f.labeling).unwrap().valid);
    }

    #[test]
    fn complete_graph_certificate() {
        let g = graph::complete(4).unwrap();
        let dm = distances(&g);
        let dec = decompose(&g, &dm, &[0, 1, 2, 3]).unwrap();
        assert_eq!(
            certify_gap(&g, &dm, &dec, DEFAULT_BUDGET),
            GapCertificate::BoundAchievable(Labeling::new(vec![0, 1, 2, 3]))
        );
    }

    #[test]
    fn odd_p5_k3_needs_one_jump() {
        let g = graph::generate(Family::PnKm, &[5, 3]).unwrap();
        let dm = distances(&g);
        let dec = decompose(&g, &dm, &g.column(3)).unwrap();
        assert_eq!(lower_bound(&g, &dm, &dec).bound, 34);
        assert_eq!(
            certify_gap(&g, &dm, &dec, DEFAULT_BUDGET),
            GapCertificate::BoundUnachievable
        );
        let out = search_ordering(&g, &dm, &dec, SearchOptions::new(35).max_jumps(1)).unwrap();
        let f = out.found().expect("35 is attainable with one jump");
        assert_eq!(f.labeling.span(), 35);
        assert!(verify_radio(&g, &dm, &f.labeling).unwrap().valid);
    }

    #[test]
    fn target_below_bound_is_rejected() {
        let g = graph::generate(Family::PnPetersen, &[6]).unwrap();
        let dm = distances(&g);
        let dec = decompose(&g, &dm, &two_columns(&g, 3)).unwrap();
        assert_eq!(
            search_ordering(&g, &dm, &dec, SearchOptions::new(174)),
            Err(Error::TargetBelowBound {
                target: 174,
                bound: 175
            })
        );
    }

    #[test]
    fn budget_is_reported() {
        let g = graph::generate(Family::PnKm, &[5, 3]).unwrap();
        let dm = distances(&g);
        let dec = decompose(&g, &dm, &g.column(3)).unwrap();
        let out = search_ordering(&g, &dm, &dec, SearchOptions::new(34).budget(10)).unwrap();
        assert!(matches!(out, SearchOutcome::BudgetExhausted { .. }), "{out:?}");
        assert_eq!(certify_gap(&g, &dm, &dec, 3), GapCertificate::BudgetExhausted);
    }
}
