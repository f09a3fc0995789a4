//! Reference labelings of `P_n □ Petersen` for `n = 5, 6, 7`, plus the grid
//! renderer shared with the CLI.

use std::fmt::Write as _;

use crate::constructions::SchemeResult;
use crate::error::{Error, Result};

const TABLE_P6: &str = include_str!("../fixtures/table1_p6_petersen.txt");
const TABLE_P5: &str = include_str!("../fixtures/table2_p5_petersen.txt");
const TABLE_P7: &str = include_str!("../fixtures/table3_p7_petersen.txt");

/// One vertex `(u_i, v_j)`: its position `t` in the order and its label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
    pub t: usize,
    pub label: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureTable {
    pub family: String,
    pub n: usize,
    /// Sorted by `(i, j)`.
    pub cells: Vec<Cell>,
}

impl FixtureTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut header = None;
        let mut cells = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| Error::Parse {
                line: idx + 1,
                message: message.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if header.is_none() {
                let [family, n] = fields[..] else {
                    return Err(err("expected `<family> <n>`"));
                };
                let n = n.parse().map_err(|_| err("bad n"))?;
                header = Some((family.to_string(), n));
                continue;
            }
            let [i, j, t, label] = fields[..] else {
                return Err(err("expected `i j t label`"));
            };
            let num = |s: &str| s.parse::<u64>().map_err(|_| err("bad integer"));
            cells.push(Cell {
                i: num(i)? as usize,
                j: num(j)? as usize,
                t: num(t)? as usize,
                label: num(label)?,
            });
        }
        let (family, n) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing header".into(),
        })?;
        cells.sort_unstable();
        Ok(FixtureTable { family, n, cells })
    }

    /// The bundled table for `n`, if there is one.
    pub fn bundled(n: usize) -> Option<Self> {
        let text = match n {
            5 => TABLE_P5,
            6 => TABLE_P6,
            7 => TABLE_P7,
            _ => return None,
        };
        Some(Self::parse(text).expect("bundled fixture parses"))
    }

    pub fn all() -> Vec<Self> {
        [6, 5, 7].into_iter().filter_map(Self::bundled).collect()
    }

    pub fn max_label(&self) -> u64 {
        self.cells.iter().map(|c| c.label).max().unwrap_or(0)
    }
}

/// Cells of a constructed labeling, sorted by `(i, j)`.
pub fn scheme_cells(r: &SchemeResult) -> Vec<Cell> {
    let pos = r.ordering.positions();
    let mut cells: Vec<Cell> = (0..r.graph.order())
        .map(|v| {
            let (i, j) = r.graph.coord(v).expect("product graph");
            Cell {
                i,
                j,
                t: pos[v],
                label: r.labeling.label(v),
            }
        })
        .collect();
    cells.sort_unstable();
    cells
}

/// Grid with one row per `v_j` and one column per `u_i`; each entry reads
/// `x{t}:{label}`.
pub fn render_table(cells: &[Cell]) -> String {
    let n = cells.iter().map(|c| c.i).max().unwrap_or(0);
    let m = cells.iter().map(|c| c.j).max().unwrap_or(0);
    let mut grid = vec![vec![String::new(); n + 1]; m + 1];
    for c in cells {
        grid[c.j][c.i] = format!("x{}:{}", c.t, c.label);
    }
    let width = grid.iter().flatten().map(String::len).max().unwrap_or(0).max(4);
    let mut out = String::new();
    let _ = write!(out, "{:>5}", "");
    for i in 1..=n {
        let _ = write!(out, " {:>width$}", format!("u{i}"));
    }
    out.push('\n');
    for (j, row) in grid.iter().enumerate().skip(1) {
        let _ = write!(out, "{:>5}", format!("v{j}"));
        for cell in &row[1..] {
            let _ = write!(out, " {cell:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn render_csv(cells: &[Cell]) -> String {
    let mut out = String::from("i,j,t,label\n");
    for c in cells {
        let _ = writeln!(out, "{},{},{},{}", c.i, c.j, c.t, c.label);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_pn_petersen;

    #[test]
    fn bundled_tables_are_complete() {
        for (n, max) in [(6, 175), (5, 126), (7, 244)] {
            let t = FixtureTable::bundled(n).unwrap();
            assert_eq!(t.n, n);
            assert_eq!(t.cells.len(), 10 * n);
            assert_eq!(t.max_label(), max);
            let mut ts: Vec<_> = t.cells.iter().map(|c| c.t).collect();
            ts.sort_unstable();
            assert_eq!(ts, (0..10 * n).collect::<Vec<_>>());
        }
        assert!(FixtureTable::bundled(4).is_none());
    }

    #[test]
    fn constructions_reproduce_bundled_tables() {
        for t in FixtureTable::all() {
            let r = construct_pn_petersen(t.n).unwrap();
            assert_eq!(scheme_cells(&r), t.cells, "n = {}", t.n);
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = FixtureTable::parse("# c\npn-petersen 3\n1 2 x 4\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        assert!(FixtureTable::parse("# nothing\n").is_err());
    }

    #[test]
    fn render_layout() {
        let cells = [
            Cell {
                i: 1,
                j: 1,
                t: 0,
                label: 0,
            },
            Cell {
                i: 2,
                j: 1,
                t: 1,
                label: 3,
            },
            Cell {
                i: 1,
                j: 2,
                t: 3,
                label: 9,
            },
            Cell {
                i: 2,
                j: 2,
                t: 2,
                label: 6,
            },
        ];
        let table = render_table(&cells);
        let lines: Vec<_> = table.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].contains("u1") && lines[0].contains("u2"));
        assert!(lines[1].starts_with("   v1") && lines[1].contains("x0:0") && lines[1].contains("x1:3"));
        assert_eq!(render_csv(&cells).lines().nth(1), Some("1,1,0,0"));
    }
}
