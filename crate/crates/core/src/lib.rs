//! Radio labelings of graphs: level-structure lower bounds, verification,
//! optimal constructions for `P_n □ Petersen` and `P_n □ K_m`, and an exact
//! solver for small graphs.
//!
//! A radio labeling of a connected graph `G` with diameter `d` is a map
//! `f: V -> {0, 1, 2, ...}` with `d(u, v) + |f(u) - f(v)| >= d + 1` for all
//! distinct `u, v`. Its span is `max f - min f`; the radio number `rn(G)` is
//! the smallest span over all radio labelings.
//!
//! ```
//! use radiolab::{construct_pn_petersen, distances, verify_radio};
//!
//! let r = construct_pn_petersen(6).unwrap();
//! let dm = distances(&r.graph);
//! assert!(verify_radio(&r.graph, &dm, &r.labeling).unwrap().valid);
//! assert_eq!(r.labeling.span(), 175);
//! ```

pub mod constructions;
pub mod distance;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod levels;
pub mod perm;
pub mod search;

pub use constructions::{
    construct, construct_pn_km, construct_pn_petersen, improved_odd_bound, ProductFamily, SchemeResult,
};
pub use distance::{distances, DistanceMatrix};
pub use error::{Error, Result};
pub use exact::{exact_radio_number, exact_radio_number_with, SolverOptions, SolverResult, SolverStatus};
pub use graph::{cartesian_product, generate, Coord, Family, Graph, Vertex};
pub use labeling::{
    canonical_labeling, check_theorem2, greedy_min_labeling, verify_radio, Label, Labeling, Ordering,
    VerificationReport,
};
pub use levels::{best_center, decompose, lower_bound, BoundReport, CenterStrategy, LevelDecomposition};
pub use perm::Permutation;
pub use search::{certify_gap, search_ordering, GapCertificate, SearchOptions, SearchOutcome};
