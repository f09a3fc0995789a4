//! Simple connected graphs, the named families used throughout the crate,
//! and the Cartesian product.
//!
//! Vertices are dense `0..order` indices. Product graphs additionally carry a
//! 1-based `(i, j)` coordinate per vertex: `i` indexes the first factor
//! (the path `u_1..u_n` in every family we construct) and `j` the second.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// 1-based product coordinate `(i, j)`.
pub type Coord = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    coords: Option<Vec<Coord>>,
    grid: Option<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges, out-of-range endpoints
    /// and disconnected input.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); order];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph {
            order,
            edges,
            adj,
            coords: None,
            grid: None,
        };
        if let Some(v) = g.first_unreachable() {
            return Err(Error::Disconnected(v));
        }
        Ok(g)
    }

    /// Attaches product coordinates. They must form a bijection onto
    /// `{1..n} x {1..m}` for some `n, m` with `n * m == order`.
    pub fn with_coords(mut self, coords: Vec<Coord>) -> Result<Self> {
        if coords.len() != self.order {
            return Err(Error::BadCoordinates(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                self.order
            )));
        }
        let n = coords.iter().map(|c| c.0).max().unwrap_or(0);
        let m = coords.iter().map(|c| c.1).max().unwrap_or(0);
        if coords.iter().any(|&(i, j)| i == 0 || j == 0) {
            return Err(Error::BadCoordinates("coordinates are 1-based".into()));
        }
        if n * m != self.order {
            return Err(Error::BadCoordinates(format!(
                "{n} x {m} grid does not match {} vertices",
                self.order
            )));
        }
        let distinct: BTreeSet<_> = coords.iter().collect();
        if distinct.len() != coords.len() {
            return Err(Error::BadCoordinates("repeated coordinate".into()));
        }
        self.coords = Some(coords);
        self.grid = Some((n, m));
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn coords(&self) -> Option<&[Coord]> {
        self.coords.as_deref()
    }

    pub fn coord(&self, v: Vertex) -> Option<Coord> {
        self.coords.as_ref().map(|c| c[v])
    }

    /// `(n, m)` of the coordinate grid, if annotated.
    pub fn grid(&self) -> Option<(usize, usize)> {
        self.grid
    }

    /// Vertex carrying coordinate `(i, j)`.
    pub fn vertex_at(&self, coord: Coord) -> Option<Vertex> {
        self.coords.as_ref()?.iter().position(|&c| c == coord)
    }

    /// All vertices whose first coordinate is `i`, ordered by second coordinate.
    pub fn column(&self, i: usize) -> Vec<Vertex> {
        let Some(coords) = &self.coords else {
            return Vec::new();
        };
        let mut col: Vec<_> = (0..self.order).filter(|&v| coords[v].0 == i).collect();
        col.sort_by_key(|&v| coords[v].1);
        col
    }

    pub fn vertex_name(&self, v: Vertex) -> String {
        match self.coord(v) {
            Some((i, j)) => format!("(u{i},v{j})"),
            None => v.to_string(),
        }
    }

    fn first_unreachable(&self) -> Option<Vertex> {
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|s| !s)
    }
}

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Wheel,
    Gear,
    Petersen,
    /// `P_n □ Petersen`
    PnPetersen,
    /// `P_n □ K_m`
    PnKm,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::Wheel,
        Family::Gear,
        Family::Petersen,
        Family::PnPetersen,
        Family::PnKm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::Gear => "gear",
            Family::Petersen => "petersen",
            Family::PnPetersen => "pn-petersen",
            Family::PnKm => "pn-km",
        }
    }

    /// Number of integer parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::Petersen => 0,
            Family::PnKm => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

fn param(params: &[i64], idx: usize, name: &'static str, min: i64, expected: &'static str) -> Result<usize> {
    let value = *params.get(idx).ok_or(Error::InvalidParameter {
        name,
        value: 0,
        expected: "a value (parameter missing)",
    })?;
    if value < min {
        return Err(Error::InvalidParameter { name, value, expected });
    }
    Ok(value as usize)
}

/// Generates a member of a named family from its integer parameters.
pub fn generate(family: Family, params: &[i64]) -> Result<Graph> {
    if params.len() > family.arity() {
        return Err(Error::InvalidParameter {
            name: "params",
            value: params.len() as i64,
            expected: match family.arity() {
                0 => "no parameters",
                1 => "exactly one parameter",
                _ => "exactly two parameters",
            },
        });
    }
    match family {
        Family::Path => path(param(params, 0, "n", 1, "n >= 1")?),
        Family::Cycle => cycle(param(params, 0, "n", 3, "n >= 3")?),
        Family::Complete => complete(param(params, 0, "m", 1, "m >= 1")?),
        Family::Star => star(param(params, 0, "n", 1, "n >= 1 leaves")?),
        Family::Wheel => wheel(param(params, 0, "n", 3, "n >= 3 rim vertices")?),
        Family::Gear => gear(param(params, 0, "n", 3, "n >= 3")?),
        Family::Petersen => Ok(petersen()),
        Family::PnPetersen => {
            let n = param(params, 0, "n", 1, "n >= 1")?;
            Ok(cartesian_product(&path(n)?, &petersen()))
        }
        Family::PnKm => {
            let n = param(params, 0, "n", 1, "n >= 1")?;
            let m = param(params, 1, "m", 1, "m >= 1")?;
            Ok(cartesian_product(&path(n)?, &complete(m)?))
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            expected: "n >= 3",
        });
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(m: usize) -> Result<Graph> {
    Graph::new(m, (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))))
}

/// `K_{1,n}`; vertex 0 is the hub.
pub fn star(n: usize) -> Result<Graph> {
    Graph::new(n + 1, (1..=n).map(|v| (0, v)))
}

/// `W_n`: hub 0 joined to every vertex of the rim cycle `1..=n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            expected: "n >= 3 rim vertices",
        });
    }
    let spokes = (1..=n).map(|v| (0, v));
    let rim = (1..=n).map(move |v| (v, v % n + 1));
    Graph::new(n + 1, spokes.chain(rim))
}

/// `G_n`: the wheel `W_n` with one extra vertex subdividing every rim edge.
/// Hub 0, spoke ends `1..=n`, subdivision vertices `n+1..=2n`.
pub fn gear(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            expected: "n >= 3",
        });
    }
    let mut edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
    for v in 1..=n {
        let mid = n + v;
        edges.push((v, mid));
        edges.push((mid, v % n + 1));
    }
    Graph::new(2 * n + 1, edges)
}

/// Petersen graph with vertices `v_1..v_10` stored at indices `0..10`:
/// the path `v_1..v_6` plus the chords
/// `v1v6 v1v8 v2v7 v3v9 v4v8 v5v7 v6v9 v7v10 v8v10 v9v10`.
pub fn petersen() -> Graph {
    const EDGES: [(usize, usize); 15] = [
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (1, 6),
        (1, 8),
        (2, 7),
        (3, 9),
        (4, 8),
        (5, 7),
        (6, 9),
        (7, 10),
        (8, 10),
        (9, 10),
    ];
    Graph::new(10, EDGES.iter().map(|&(a, b)| (a - 1, b - 1))).expect("petersen edge list is valid")
}

/// `g □ h`. Vertex `(a, b)` is stored at `a * |h| + b` and annotated with
/// coordinate `(a + 1, b + 1)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let idx = |a: Vertex, b: Vertex| a * m + b;
    let mut edges = Vec::with_capacity(g.order() * h.size() + m * g.size());
    for a in 0..g.order() {
        for &(b, d) in h.edges() {
            edges.push((idx(a, b), idx(a, d)));
        }
    }
    for &(a, c) in g.edges() {
        for b in 0..m {
            edges.push((idx(a, b), idx(c, b)));
        }
    }
    let coords = (0..g.order())
        .flat_map(|a| (0..m).map(move |b| (a + 1, b + 1)))
        .collect();
    Graph::new(g.order() * m, edges)
        .and_then(|p| p.with_coords(coords))
        .expect("product of connected graphs is connected")
}
