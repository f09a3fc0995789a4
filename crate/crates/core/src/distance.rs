use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

/// All-pairs hop distances of a connected graph, by BFS from every source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let p = g.order();
        let mut dist = vec![u32::MAX; p * p];
        let mut queue = VecDeque::with_capacity(p);
        for s in 0..p {
            let row = &mut dist[s * p..(s + 1) * p];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let dv = row[v];
                for &w in g.neighbors(v) {
                    if row[w] == u32::MAX {
                        row[w] = dv + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d != u32::MAX));
        let diameter = dist.iter().copied().max().unwrap_or(0);
        DistanceMatrix {
            order: p,
            dist,
            diameter,
        }
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Eccentricity of `v`.
    pub fn eccentricity(&self, v: Vertex) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }
}

/// Convenience wrapper matching the free-function style of the other modules.
pub fn distances(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}
