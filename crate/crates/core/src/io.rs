//! Edge-list and labeling JSON formats.
//!
//! Edge list: a `p q` header, then `q` lines `a b` with 0-based endpoints.
//! Graphs with product coordinates append `p` lines `v | i j`, one per vertex.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coord, Graph, Vertex};
use crate::labeling::Labeling;

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    if let Some(coords) = g.coords() {
        for (v, (i, j)) in coords.iter().enumerate() {
            let _ = writeln!(out, "{v} | {i} {j}");
        }
    }
    out
}

fn parse_usize(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found `{s}`"),
    })
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `p q` header".into(),
    })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [p, q] = head[..] else {
        return Err(Error::Parse {
            line: hline,
            message: "header must be `p q`".into(),
        });
    };
    let (p, q) = (parse_usize(p, hline)?, parse_usize(q, hline)?);

    let mut edges = Vec::with_capacity(q);
    let mut coords: Vec<Option<Coord>> = vec![None; p];
    let mut n_coords = 0;
    for (line, l) in lines {
        if let Some((v, ij)) = l.split_once('|') {
            let v = parse_usize(v.trim(), line)?;
            let ij: Vec<&str> = ij.split_whitespace().collect();
            let [i, j] = ij[..] else {
                return Err(Error::Parse {
                    line,
                    message: "coordinate line must be `v | i j`".into(),
                });
            };
            let slot = coords
                .get_mut(v)
                .ok_or(Error::VertexOutOfRange { vertex: v, order: p })?;
            if slot.replace((parse_usize(i, line)?, parse_usize(j, line)?)).is_some() {
                return Err(Error::BadCoordinates(format!("vertex {v} has two coordinates")));
            }
            n_coords += 1;
            continue;
        }
        if n_coords > 0 {
            return Err(Error::Parse {
                line,
                message: "edge line after coordinate lines".into(),
            });
        }
        let ab: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = ab[..] else {
            return Err(Error::Parse {
                line,
                message: "edge line must be `a b`".into(),
            });
        };
        edges.push((parse_usize(a, line)?, parse_usize(b, line)?));
    }
    if edges.len() != q {
        return Err(Error::Parse {
            line: hline,
            message: format!("header announces {q} edges, found {}", edges.len()),
        });
    }
    let g = Graph::new(p, edges)?;
    match n_coords {
        0 => Ok(g),
        _ if n_coords == p => g.with_coords(coords.into_iter().map(Option::unwrap).collect()),
        _ => Err(Error::BadCoordinates(format!(
            "{n_coords} of {p} vertices have coordinates"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelEntry {
    pub vertex: Vertex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coord: Option<[usize; 2]>,
    pub label: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDoc {
    pub span: i64,
    pub labels: Vec<LabelEntry>,
}

impl LabelingDoc {
    pub fn from_labeling(g: &Graph, lab: &Labeling) -> Self {
        LabelingDoc {
            span: lab.span() as i64,
            labels: (0..g.order())
                .map(|v| LabelEntry {
                    vertex: v,
                    coord: g.coord(v).map(|(i, j)| [i, j]),
                    label: lab.label(v) as i64,
                })
                .collect(),
        }
    }

    /// The labeling this document describes. The `span` field is informational
    /// and is not trusted.
    pub fn to_labeling(&self, order: usize) -> Result<Labeling> {
        Labeling::from_pairs(order, self.labels.iter().map(|e| (e.vertex, e.label)))
    }
}

pub fn write_labeling_json(g: &Graph, lab: &Labeling) -> String {
    serde_json::to_string_pretty(&LabelingDoc::from_labeling(g, lab)).expect("plain data serializes")
}

pub fn read_labeling_json(text: &str, order: usize) -> Result<Labeling> {
    let doc: LabelingDoc = serde_json::from_str(text)?;
    doc.to_labeling(order)
}
