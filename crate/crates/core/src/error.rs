use std::path::PathBuf;

use thiserror::Error;

use crate::instance::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("instance must have at least one node")]
    EmptyInstance,

    #[error("`{field}` has {found} entries, expected n = {expected}")]
    LengthMismatch {
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("`{field}[{node}]` entry {index} = {value} is out of range (n = {n})")]
    NodeOutOfRange {
        field: &'static str,
        node: usize,
        index: usize,
        value: u64,
        n: usize,
    },

    #[error("node id {id} is out of range (n = {n})")]
    UnknownNode { id: u64, n: usize },

    #[error("invalid instance: {}", join_violations(.0))]
    InvalidInstance(Vec<Violation>),

    #[error("merging parameter k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },

    #[error("schedule entry {step} rejected: {reason}")]
    InvalidSchedule { step: usize, reason: String },

    #[error("no feasible set of size <= {budget} (budget exceeded)")]
    BudgetExceeded { budget: usize },

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("max-power graph still disconnected after {attempts} attempts")]
    RetriesExhausted { attempts: usize },

    #[error("instance digest mismatch: solution was computed for {found}, not {expected}")]
    DigestMismatch { expected: String, found: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{context}: {source}")]
    Json {
        context: String,
        #[source]
        source: serde_json::Error,
    },
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
