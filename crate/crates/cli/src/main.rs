use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use radiolab::exact::SolverStatus;
use radiolab::fixtures::{render_csv, render_table, scheme_cells, FixtureTable};
use radiolab::io::{read_edge_list, read_labeling_json, write_edge_list, LabelingDoc};
use radiolab::levels::BoundReport;
use radiolab::search::DEFAULT_BUDGET;
use radiolab::{
    best_center, construct, decompose, distances, exact_radio_number, generate, lower_bound, verify_radio,
    CenterStrategy, Family, Graph, ProductFamily,
};

/// Radio labelings: lower bounds, constructions, verification and exact search.
#[derive(Parser)]
#[command(name = "radiolab", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Read from this file instead of stdin.
    #[arg(long, short, global = true)]
    input: Option<PathBuf>,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, short, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of a named graph.
    Gen {
        /// path, cycle, complete, star, wheel, gear, petersen, pn-petersen, pn-km
        family: String,
        params: Vec<i64>,
    },
    /// Level lower bound for the input graph.
    Bound {
        /// Explicit center, e.g. `0,5,7`.
        #[arg(long, value_delimiter = ',', conflicts_with = "center_strategy")]
        center: Option<Vec<usize>>,
        /// singletons, edges, cliques, balls, exhaustive or exhaustive:N.
        #[arg(long, default_value = "balls")]
        center_strategy: String,
    },
    /// Optimal labeling of P_n □ Petersen or P_n □ K_m.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        /// Same as --format.
        #[arg(long, value_enum)]
        emit: Option<Format>,
    },
    /// Check a labeling JSON against a graph. Exit 0 valid, 1 invalid, 2 input error.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Labeling JSON; defaults to --input or stdin.
        #[arg(long)]
        labeling: Option<PathBuf>,
    },
    /// Radio number by exhaustive search. Exit 0 when proved, 3 when the budget runs out.
    Exact {
        #[arg(long, env = "RADIOLAB_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print a bundled reference labeling of P_n □ Petersen (n = 5, 6, 7).
    Table {
        #[arg(long)]
        n: usize,
    },
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn read_source(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()).into()),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    Ok(read_edge_list(&read_source(path)?)?)
}

fn bound_text(r: &BoundReport, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(r)? + "\n",
        Format::Table => format!(
            "bound  {}\np      {}\nd      {}\nk      {}\ndelta  {}\nh      {}\nweight {}\ncenter {:?}\n",
            r.bound, r.p, r.d, r.k, r.delta, r.h, r.weight, r.center
        ),
        Format::Csv => format!(
            "bound,p,d,k,delta,h,weight\n{},{},{},{},{},{},{}\n",
            r.bound, r.p, r.d, r.k, r.delta, r.h, r.weight
        ),
    })
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    let input = g.input.as_deref();
    match cli.command {
        Command::Gen { family, params } => {
            let graph = generate(family.parse::<Family>()?, &params)?;
            Ok((write_edge_list(&graph), 0))
        }
        Command::Bound {
            center,
            center_strategy,
        } => {
            let graph = read_graph(input)?;
            let dm = distances(&graph);
            let report = match center {
                Some(c) => lower_bound(&graph, &dm, &decompose(&graph, &dm, &c)?),
                None => best_center(&graph, &dm, center_strategy.parse::<CenterStrategy>()?)?.1,
            };
            Ok((bound_text(&report, g.format.unwrap_or(Format::Json))?, 0))
        }
        Command::Construct { family, n, m, emit } => {
            let family: ProductFamily = family.parse()?;
            let r = construct(family, n, m)?;
            let text = match emit.or(g.format).unwrap_or(Format::Json) {
                Format::Json => {
                    serde_json::to_string_pretty(&LabelingDoc::from_labeling(&r.graph, &r.labeling))? + "\n"
                }
                Format::Table => render_table(&scheme_cells(&r)),
                Format::Csv => render_csv(&scheme_cells(&r)),
            };
            Ok((text, 0))
        }
        Command::Verify { graph, labeling } => {
            let gr = read_graph(Some(&graph))?;
            let lab = read_labeling_json(&read_source(labeling.as_deref().or(input))?, gr.order())?;
            let dm = distances(&gr);
            let report = verify_radio(&gr, &dm, &lab)?;
            let code = if report.valid { 0 } else { 1 };
            let text = match g.format.unwrap_or(Format::Json) {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Table | Format::Csv => {
                    let mut s = format!("valid {}\nspan {}\n", report.valid, report.span);
                    for v in &report.violations {
                        s += &format!(
                            "{},{} dist {} gap {} required {}\n",
                            v.u, v.v, v.dist, v.gap, v.required
                        );
                    }
                    s
                }
            };
            Ok((text, code))
        }
        Command::Exact { budget } => {
            let graph = read_graph(input)?;
            let dm = distances(&graph);
            let res = exact_radio_number(&graph, &dm, budget);
            let (status, code) = match res.status {
                SolverStatus::Proved => ("proved", 0),
                SolverStatus::BudgetExhausted { .. } => ("budget_exhausted", 3),
            };
            let text = match g.format.unwrap_or(Format::Json) {
                Format::Json => {
                    let doc = json!({
                        "radio_number": res.radio_number,
                        "status": status,
                        "nodes_explored": res.nodes_explored,
                        "root_bound": res.root_bound,
                        "witness": LabelingDoc::from_labeling(&graph, &res.witness),
                    });
                    serde_json::to_string_pretty(&doc)? + "\n"
                }
                Format::Table | Format::Csv => format!(
                    "radio_number {}\nstatus {status}\nnodes {}\n",
                    res.radio_number, res.nodes_explored
                ),
            };
            Ok((text, code))
        }
        Command::Table { n } => {
            let t =
                FixtureTable::bundled(n).ok_or_else(|| format!("no bundled table for n = {n}; available: 5, 6, 7"))?;
            let text = match g.format.unwrap_or(Format::Table) {
                Format::Table => render_table(&t.cells),
                Format::Csv => render_csv(&t.cells),
                Format::Json => {
                    let cells: Vec<_> = t
                        .cells
                        .iter()
                        .map(|c| json!({"i": c.i, "j": c.j, "t": c.t, "label": c.label}))
                        .collect();
                    serde_json::to_string_pretty(&json!({"family": t.family, "n": t.n, "cells": cells}))? + "\n"
                }
            };
            Ok((text, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.global.output.clone();
    let (text, code) = match run(cli) {
        Ok(done) => done,
        Err(f) => {
            eprintln!("radiolab: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let written = match &output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("radiolab: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
