//! Reference computations written directly from the definitions, sharing no
//! code with the library. Used to cross-check it.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd–Warshall.
pub fn floyd(p: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; p]; p];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(a, b) in edges {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for m in 0..p {
        for a in 0..p {
            for b in 0..p {
                let via = d[a][m] + d[m][b];
                if via < d[a][b] {
                    d[a][b] = via;
                }
            }
        }
    }
    d
}

pub fn diameter(d: &[Vec<u32>]) -> u32 {
    d.iter().flatten().copied().max().unwrap_or(0)
}

/// Pairs `(u, v)`, `u < v`, violating `d(u,v) + |f(u) - f(v)| >= diam + 1`.
pub fn violations(d: &[Vec<u32>], labels: &[u64]) -> Vec<(usize, usize)> {
    let need = u64::from(diameter(d)) + 1;
    let p = labels.len();
    let mut out = Vec::new();
    for u in 0..p {
        for v in u + 1..p {
            if u64::from(d[u][v]) + labels[u].abs_diff(labels[v]) < need {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn is_radio(d: &[Vec<u32>], labels: &[u64]) -> bool {
    violations(d, labels).is_empty()
}

/// Least labels for the label order `order`, each chosen by scanning upward.
pub fn least_labels_for_order(d: &[Vec<u32>], order: &[usize]) -> Vec<u64> {
    let need = u64::from(diameter(d)) + 1;
    let mut labels = vec![0u64; order.len()];
    for t in 1..order.len() {
        let v = order[t];
        let mut f = labels[order[t - 1]] + 1;
        while order[..t].iter().any(|&u| u64::from(d[u][v]) + f - labels[u] < need) {
            f += 1;
        }
        labels[v] = f;
    }
    labels
}

pub fn for_each_permutation(p: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(k: usize, a: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if k == a.len() {
            visit(a);
            return;
        }
        for i in k..a.len() {
            a.swap(k, i);
            rec(k + 1, a, visit);
            a.swap(k, i);
        }
    }
    let mut a: Vec<usize> = (0..p).collect();
    rec(0, &mut a, &mut visit);
}

/// Radio number by trying every label order.
pub fn brute_force_rn(p: usize, edges: &[(usize, usize)]) -> u64 {
    let d = floyd(p, edges);
    let mut best = u64::MAX;
    for_each_permutation(p, |order| {
        let labels = least_labels_for_order(&d, order);
        best = best.min(labels[order[p - 1]]);
    });
    best
}

/// Smallest span over strictly increasing label sequences along `order`
/// starting at 0 and staying at most `cap`, by exhaustive enumeration.
pub fn min_span_for_order(d: &[Vec<u32>], order: &[usize], cap: u64) -> Option<u64> {
    fn rec(d: &[Vec<u32>], order: &[usize], t: usize, labels: &mut Vec<u64>, cap: u64, best: &mut Option<u64>) {
        if t == order.len() {
            let span = labels[order[t - 1]];
            *best = Some(best.map_or(span, |b: u64| b.min(span)));
            return;
        }
        let need = u64::from(diameter(d)) + 1;
        let from = labels[order[t - 1]] + 1;
        for f in from..=cap {
            let v = order[t];
            if order[..t].iter().all(|&u| u64::from(d[u][v]) + f - labels[u] >= need) {
                labels[v] = f;
                rec(d, order, t + 1, labels, cap, best);
            }
        }
    }
    let mut labels = vec![0u64; order.len()];
    let mut best = None;
    if order.len() == 1 {
        return Some(0);
    }
    rec(d, order, 1, &mut labels, cap, &mut best);
    best
}

/// Random connected graph: a random tree plus each other pair with
/// probability `density`.
pub fn random_connected(rng: &mut StdRng, p: usize, density: f64) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..p).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..p {
        let parent = perm[rng.gen_range(0..i)];
        let (a, b) = (perm[i], parent);
        edges.push((a.min(b), a.max(b)));
    }
    for a in 0..p {
        for b in a + 1..p {
            if !edges.contains(&(a, b)) && rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Level of every vertex: distance to the nearest center vertex.
pub fn levels(d: &[Vec<u32>], center: &[usize]) -> Vec<u32> {
    (0..d.len())
        .map(|v| center.iter().map(|&c| d[v][c]).min().unwrap())
        .collect()
}

/// `(p-1)(diam - k + 1) + delta - 2 * sum of levels`.
pub fn level_bound(d: &[Vec<u32>], center: &[usize]) -> i64 {
    let p = d.len() as i64;
    let diam = i64::from(diameter(d));
    let k = center
        .iter()
        .flat_map(|&a| center.iter().map(move |&b| d[a][b]))
        .max()
        .unwrap_or(0) as i64;
    let delta = i64::from(center.len() == 1 && p > 1);
    let weight: i64 = levels(d, center).iter().map(|&l| i64::from(l)).sum();
    (p - 1) * (diam - k + 1) + delta - 2 * weight
}

/// Edges of `P_n □ H` with vertex `(i, j)` (1-based) at index
/// `(i-1) * |H| + (j-1)`.
pub fn path_product_edges(n: usize, h: usize, h_edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for &(a, b) in h_edges {
            edges.push((i * h + a, i * h + b));
        }
        if i + 1 < n {
            for j in 0..h {
                edges.push((i * h + j, (i + 1) * h + j));
            }
        }
    }
    edges
}

/// Outer 5-cycle, inner pentagram and spokes.
pub fn petersen_edges() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((5 + i, 5 + (i + 2) % 5));
        e.push((i, 5 + i));
    }
    e
}

pub fn complete_edges(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect()
}

pub fn petersen_span(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        5 * n * n - n + 1
    } else {
        5 * n * n - n + 6
    }
}

pub fn km_span(n: u64, m: u64) -> u64 {
    if n.is_multiple_of(2) {
        (m * n * n - 2 * n + 2) / 2
    } else {
        (m * n * n - 2 * n + m + 2) / 2
    }
}
