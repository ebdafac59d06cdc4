//! Command-line front end: instance generation, solving, verification and
//! CSV benchmarking.

pub mod bench;
pub mod cli;
pub mod record;
pub mod run;
pub mod table;

pub use record::{RunRecord, CSV_COLUMNS};
pub use run::{solve, AlgorithmSpec, Outcome, SolveOptions};
