//! Two-level symmetric range assignment.
//!
//! Every node of a network can transmit at min or max power. Given the
//! directed reachability sets for both levels, pick a small set `U` of nodes
//! to run at max power so that the graph of mutual links is connected:
//! all mutual min-power links plus mutual max-power links between nodes of
//! `U`.
//!
//! Solvers:
//! - [`greedy::approx_2lsra_k`]: greedy k-merging for any `k >= 2`,
//! - [`fast3::fast3_solve`]: the k = 3 variant in near-linear time,
//! - [`greedy::spanning_tree_baseline`]: spanning tree over min components,
//! - [`exact::solve_exact`]: exhaustive optimum for small instances.

pub mod bounds;
mod disjoint_sets;
pub mod error;
pub mod exact;
pub mod fast3;
pub mod generators;
pub mod greedy;
pub mod instance;
pub mod solution;

pub use error::{Error, Result};
pub use exact::{solve_exact, ExactOptions, ExactResult};
pub use fast3::{fast3_solve, fast3_solve_with_order, DisjointSets, Fast3Run};
pub use generators::{
    gen_geometric, gen_random_abstract, gen_worst_case, GeometricParams, ScheduleFile, WorstCase,
    WorstCaseParams,
};
pub use greedy::{approx_2lsra_k, find_k_merging, is_k_merging, spanning_tree_baseline, MergingOrder};
pub use instance::{
    components, derive_edges, lower_bound_cc, validate, ComponentLabeling, Edge, Instance, NodeId,
    PowerGraph, Violation,
};
pub use solution::{Algorithm, Merging, Solution, Verdict};
