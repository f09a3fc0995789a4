//! Labelings, the orderings they induce, the radio-condition verifier and the
//! exact-bound characterisation check.

use serde::{Deserialize, Serialize};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::levels::{lower_bound, LevelDecomposition};

pub type Label = u64;

/// Vertex labels indexed by vertex.
///
/// Not required to be injective: the verifier is expected to see broken
/// labelings and report on them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<Label>,
}

impl Labeling {
    pub fn new(labels: Vec<Label>) -> Self {
        Labeling { labels }
    }

    /// Builds a labeling of a graph on `order` vertices from `(vertex, label)`
    /// pairs in any order. Every vertex must appear exactly once.
    pub fn from_pairs(order: usize, pairs: impl IntoIterator<Item = (Vertex, i64)>) -> Result<Self> {
        let mut labels: Vec<Option<Label>> = vec![None; order];
        let mut count = 0;
        for (v, label) in pairs {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            if label < 0 {
                return Err(Error::NegativeLabel { vertex: v, label });
            }
            if labels[v].replace(label as Label).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
            count += 1;
        }
        if count != order {
            return Err(Error::PartialLabeling {
                expected: order,
                got: count,
            });
        }
        Ok(Labeling {
            labels: labels.into_iter().map(|l| l.expect("counted")).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn label(&self, v: Vertex) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn min(&self) -> Label {
        self.labels.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> Label {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn span(&self) -> Label {
        self.max() - self.min()
    }

    pub fn is_injective(&self) -> bool {
        let mut sorted = self.labels.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Swaps the labels of two vertices.
    pub fn swap(&mut self, a: Vertex, b: Vertex) {
        self.labels.swap(a, b);
    }
}

/// A permutation `x_0 .. x_{p-1}` of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    seq: Vec<Vertex>,
}

impl Ordering {
    pub fn new(seq: Vec<Vertex>, order: usize) -> Result<Self> {
        if seq.len() != order {
            return Err(Error::NotAPermutation(format!(
                "{} entries for {order} vertices",
                seq.len()
            )));
        }
        let mut seen = vec![false; order];
        for &v in &seq {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(format!("vertex {v} repeated")));
            }
        }
        Ok(Ordering { seq })
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.seq[0]
    }

    pub fn last(&self) -> Vertex {
        self.seq[self.seq.len() - 1]
    }

    /// `position[v] = t` where `x_t = v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.seq.len()];
        for (t, &v) in self.seq.iter().enumerate() {
            pos[v] = t;
        }
        pos
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.seq
    }
}

impl std::ops::Index<usize> for Ordering {
    type Output = Vertex;

    fn index(&self, t: usize) -> &Vertex {
        &self.seq[t]
    }
}

/// One pair breaking `d(u, v) + |f(u) - f(v)| >= diam + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub dist: u32,
    pub gap: u64,
    pub required: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    /// Every violating pair `u < v`, in lexicographic order.
    pub violations: Vec<Violation>,
    pub span: u64,
}

/// Checks every vertex pair against the radio condition.
pub fn verify_radio(g: &Graph, dm: &DistanceMatrix, lab: &Labeling) -> Result<VerificationReport> {
    let p = g.order();
    if lab.len() != p {
        return Err(Error::PartialLabeling {
            expected: p,
            got: lab.len(),
        });
    }
    let need = u64::from(dm.diameter()) + 1;
    let mut violations = Vec::new();
    for u in 0..p {
        let row = dm.row(u);
        for (v, &dist) in row.iter().enumerate().skip(u + 1) {
            let gap = lab.label(u).abs_diff(lab.label(v));
            if u64::from(dist) + gap < need {
                violations.push(Violation {
                    u,
                    v,
                    dist,
                    gap,
                    required: need - u64::from(dist),
                });
            }
        }
    }
    Ok(VerificationReport {
        valid: violations.is_empty(),
        violations,
        span: lab.span(),
    })
}

/// Vertices sorted by label; equal labels fall back to vertex index.
pub fn ordering_of(lab: &Labeling) -> Ordering {
    let mut seq: Vec<Vertex> = (0..lab.len()).collect();
    seq.sort_by_key(|&v| (lab.label(v), v));
    Ordering { seq }
}

/// `d + 1 - level(a) - level(b) - k`: the smallest gap the level structure
/// allows between consecutive vertices `a`, `b`.
#[inline]
pub fn canonical_increment(dm: &DistanceMatrix, dec: &LevelDecomposition, a: Vertex, b: Vertex) -> i64 {
    i64::from(dm.diameter()) + 1 - i64::from(dec.level_of(a)) - i64::from(dec.level_of(b)) - i64::from(dec.k())
}

/// Labels `ord` by the canonical increment recursion starting from 0, adding
/// `extra` to the increment into position `index` for each `(index, extra)`
/// jump.
pub fn canonical_labeling(
    g: &Graph,
    dm: &DistanceMatrix,
    dec: &LevelDecomposition,
    ord: &Ordering,
    jumps: &[(usize, u64)],
) -> Result<Labeling> {
    let p = g.order();
    if ord.len() != p {
        return Err(Error::NotAPermutation(format!(
            "{} entries for {p} vertices",
            ord.len()
        )));
    }
    let mut extra = vec![0u64; p];
    let mut seen = vec![false; p];
    for &(index, e) in jumps {
        if index == 0 || index >= p {
            return Err(Error::InvalidJump {
                index,
                reason: "index must lie in [1, p-1]",
            });
        }
        if e == 0 {
            return Err(Error::InvalidJump {
                index,
                reason: "extra must be at least 1",
            });
        }
        if std::mem::replace(&mut seen[index], true) {
            return Err(Error::DuplicateJump(index));
        }
        extra[index] = e;
    }
    let mut labels = vec![0; p];
    let mut current: i64 = 0;
    for t in 1..p {
        let inc = canonical_increment(dm, dec, ord[t - 1], ord[t]) + extra[t] as i64;
        if inc < 1 {
            return Err(Error::NonPositiveIncrement {
                index: t,
                increment: inc,
            });
        }
        current += inc;
        labels[ord[t]] = current as Label;
    }
    Ok(Labeling::new(labels))
}

/// An increment that differs from the canonical one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncrementDeviation {
    /// Position `t`; the increment is `f(x_t) - f(x_{t-1})`. Position 0 means
    /// `f(x_0) != 0`.
    pub index: usize,
    /// Actual minus canonical.
    pub deviation: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Report {
    pub radio_valid: bool,
    /// Indices `i` with `d(x_i, x_{i+1}) != level(x_i) + level(x_{i+1}) + k`.
    pub cond_a_failures: Vec<usize>,
    /// Endpoint condition: both ends in `L0` when `|L0| >= 2`; `x_0 ∈ L0` and
    /// `x_{p-1} ∈ L1` when `|L0| = 1`.
    pub cond_b_ok: bool,
    pub cond_c_failures: Vec<IncrementDeviation>,
    pub span: u64,
    /// The level bound for the same decomposition.
    pub bound: i64,
}

impl Theorem2Report {
    pub fn all_clean(&self) -> bool {
        self.radio_valid && self.cond_a_failures.is_empty() && self.cond_b_ok && self.cond_c_failures.is_empty()
    }
}

/// Reports which of the three conditions characterising `span == bound` hold
/// for `lab` under `dec`. Runs the radio verifier first and records the result
/// in `radio_valid`.
pub fn check_theorem2(
    g: &Graph,
    dm: &DistanceMatrix,
    dec: &LevelDecomposition,
    lab: &Labeling,
) -> Result<Theorem2Report> {
    let report = verify_radio(g, dm, lab)?;
    let bound = lower_bound(g, dm, dec).bound;
    let ord = ordering_of(lab);
    let p = ord.len();
    let k = dec.k();
    let cond_a_failures = (0..p.saturating_sub(1))
        .filter(|&i| {
            let (a, b) = (ord[i], ord[i + 1]);
            dm.get(a, b) != dec.level_of(a) + dec.level_of(b) + k
        })
        .collect();
    let first = ord.first();
    let last = ord.last();
    let cond_b_ok = if p == 1 {
        true
    } else if dec.center().len() >= 2 {
        dec.level_of(first) == 0 && dec.level_of(last) == 0
    } else {
        dec.level_of(first) == 0 && dec.level_of(last) == 1
    };
    let mut cond_c_failures = Vec::new();
    if lab.label(first) != 0 {
        cond_c_failures.push(IncrementDeviation {
            index: 0,
            deviation: lab.label(first) as i64,
        });
    }
    for t in 1..p {
        let actual = lab.label(ord[t]) as i64 - lab.label(ord[t - 1]) as i64;
        let deviation = actual - canonical_increment(dm, dec, ord[t - 1], ord[t]);
        if deviation != 0 {
            cond_c_failures.push(IncrementDeviation { index: t, deviation });
        }
    }
    Ok(Theorem2Report {
        radio_valid: report.valid,
        cond_a_failures,
        cond_b_ok,
        cond_c_failures,
        span: report.span,
        bound,
    })
}

/// Smallest labels compatible with the label order `ord`: each vertex gets the
/// least label that clears every earlier vertex.
pub fn greedy_min_labeling(g: &Graph, dm: &DistanceMatrix, ord: &Ordering) -> Labeling {
    let p = g.order();
    let need = i64::from(dm.diameter()) + 1;
    let mut labels = vec![0; p];
    for t in 1..p {
        let v = ord[t];
        let row = dm.row(v);
        let label = ord.as_slice()[..t]
            .iter()
            .map(|&u| labels[u] as i64 + (need - i64::from(row[u])).max(1))
            .max()
            .unwrap_or(0);
        labels[v] = label as Label;
    }
    Labeling::new(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distances;
    use crate::graph;
    use crate::levels::decompose;

    #[test]
    fn single_vertex_is_valid() {
        let g = graph::path(1).unwrap();
        let dm = distances(&g);
        let r = verify_radio(&g, &dm, &Labeling::new(vec![0])).unwrap();
        assert!(r.valid);
        assert_eq!(r.span, 0);
    }

    #[test]
    fn k3_greedy_is_consecutive() {
        let g = graph::complete(3).unwrap();
        let dm = distances(&g);
        for seq in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            let ord = Ordering::new(seq.to_vec(), 3).unwrap();
            let lab = greedy_min_labeling(&g, &dm, &ord);
            assert_eq!(ordering_of(&lab), ord);
            assert_eq!(lab.span(), 2);
        }
    }

    #[test]
    fn p4_greedy_for_b_d_a_c() {
        // a-b-c-d = 0-1-2-3, d = 3
        let g = graph::path(4).unwrap();
        let dm = distances(&g);
        let ord = Ordering::new(vec![1, 3, 0, 2], 4).unwrap();
        let lab = greedy_min_labeling(&g, &dm, &ord);
        // b=0, d=2, a=3, c=5
        assert_eq!(lab.labels(), &[3, 0, 5, 2]);
        assert_eq!(lab.span(), 5);
    }

    #[test]
    fn triangle_order_by_label() {
        let lab = Labeling::new(vec![2, 0, 1]);
        assert_eq!(ordering_of(&lab).as_slice(), &[1, 2, 0]);
    }

    #[test]
    fn complete_graph_canonical_and_theorem2() {
        let g = graph::complete(4).unwrap();
        let dm = distances(&g);
        let dec = decompose(&g, &dm, &[0, 1, 2, 3]).unwrap();
        let ord = Ordering::new(vec![2, 0, 3, 1], 4).unwrap();
        let lab = canonical_labeling(&g, &dm, &dec, &ord, &[]).unwrap();
        assert_eq!(lab.labels(), &[1, 3, 0, 2]);
        let rep = check_theorem2(&g, &dm, &dec, &lab).unwrap();
        assert!(rep.all_clean(), "{rep:?}");
        assert_eq!(rep.span as i64, rep.bound);
    }

    #[test]
    fn canonical_rejects_bad_input() {
        let g = graph::path(3).unwrap();
        let dm = distances(&g);
        let dec = decompose(&g, &dm, &[1]).unwrap();
        let ord = Ordering::new(vec![1, 0, 2], 3).unwrap();
        // d=2, k=0: increments 3-0-1 = 2, 3-1-1 = 1
        let lab = canonical_labeling(&g, &dm, &dec, &ord, &[]).unwrap();
        assert_eq!(lab.labels(), &[2, 0, 3]);
        assert_eq!(
            canonical_labeling(&g, &dm, &dec, &ord, &[(1, 1), (1, 2)]),
            Err(Error::DuplicateJump(1))
        );
        assert!(matches!(
            canonical_labeling(&g, &dm, &dec, &ord, &[(0, 1)]),
            Err(Error::InvalidJump { .. })
        ));
        assert!(matches!(
            canonical_labeling(&g, &dm, &dec, &ord, &[(2, 0)]),
            Err(Error::InvalidJump { .. })
        ));
        // center = both ends of P3: k = 2, level(1) = 1 → increments 1, 1 → fine;
        // center = everything on P5: k = 4, d = 4 → increment 1 each
        let p5 = graph::path(5).unwrap();
        let dm5 = distances(&p5);
        let dec5 = decompose(&p5, &dm5, &[0, 4]).unwrap();
        let ord5 = Ordering::new(vec![0, 2, 4, 1, 3], 5).unwrap();
        // d=4, k=4: 0→2: 5-0-2-4 = -1
        assert_eq!(
            canonical_labeling(&p5, &dm5, &dec5, &ord5, &[]),
            Err(Error::NonPositiveIncrement {
                index: 1,
                increment: -1
            })
        );
    }

    #[test]
    fn from_pairs_errors() {
        assert_eq!(
            Labeling::from_pairs(2, [(0, 0)]),
            Err(Error::PartialLabeling { expected: 2, got: 1 })
        );
        assert_eq!(
            Labeling::from_pairs(2, [(0, 0), (1, -3)]),
            Err(Error::NegativeLabel { vertex: 1, label: -3 })
        );
        assert_eq!(
            Labeling::from_pairs(2, [(0, 0), (0, 1)]),
            Err(Error::DuplicateVertex(0))
        );
        assert_eq!(Labeling::from_pairs(2, [(1, 5), (0, 2)]).unwrap().labels(), &[2, 5]);
    }

    #[test]
    fn verify_collects_every_violation() {
        let g = graph::complete(3).unwrap();
        let dm = distances(&g);
        let r = verify_radio(&g, &dm, &Labeling::new(vec![0, 0, 0])).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violations.len(), 3);
        assert_eq!(
            (r.violations[0].u, r.violations[0].v, r.violations[0].required),
            (0, 1, 1)
        );
        assert!(verify_radio(&g, &dm, &Labeling::new(vec![0, 1])).is_err());
    }

    #[test]
    fn ordering_rejects_non_permutations() {
        assert!(Ordering::new(vec![0, 0, 1], 3).is_err());
        assert!(Ordering::new(vec![0, 1], 3).is_err());
        assert!(Ordering::new(vec![0, 1, 3], 3).is_err());
    }
}
