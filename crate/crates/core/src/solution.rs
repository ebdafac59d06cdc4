use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{Instance, NodeId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "greedy-k")]
    GreedyK,
    #[serde(rename = "fast3")]
    Fast3,
    #[serde(rename = "spanning-tree")]
    SpanningTree,
    #[serde(rename = "exact")]
    Exact,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::GreedyK => "greedy-k",
            Algorithm::Fast3 => "fast3",
            Algorithm::SpanningTree => "spanning-tree",
            Algorithm::Exact => "exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "greedy-k" | "greedy" => Ok(Algorithm::GreedyK),
            "fast3" => Ok(Algorithm::Fast3),
            "spanning-tree" => Ok(Algorithm::SpanningTree),
            "exact" => Ok(Algorithm::Exact),
            other => Err(format!(
                "unknown algorithm `{other}` (expected greedy-k, fast3, spanning-tree or exact)"
            )),
        }
    }
}

/// One merging taken by a solver. Its step index is its position in the trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Merging {
    /// Sorted ascending.
    pub nodes: Vec<NodeId>,
    pub phase_k: usize,
}

impl Merging {
    pub fn new(mut nodes: Vec<NodeId>, phase_k: usize) -> Self {
        nodes.sort_unstable();
        Merging { nodes, phase_k }
    }
}

/// A set of max-power nodes and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub algorithm: Algorithm,
    pub k: Option<usize>,
    pub u_set: Vec<NodeId>,
    pub trace: Vec<Merging>,
    pub instance_digest: String,
}

impl Solution {
    /// `u_set` becomes the sorted union of the trace's node sets.
    pub fn from_trace(
        algorithm: Algorithm,
        k: Option<usize>,
        trace: Vec<Merging>,
        inst: &Instance,
    ) -> Self {
        let mut u_set: Vec<NodeId> = trace.iter().flat_map(|m| m.nodes.iter().copied()).collect();
        u_set.sort_unstable();
        u_set.dedup();
        Solution {
            algorithm,
            k,
            u_set,
            trace,
            instance_digest: inst.digest().to_owned(),
        }
    }

    pub fn size(&self) -> usize {
        self.u_set.len()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("solution serialization is infallible");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|source| Error::Json {
            context: "solution".into(),
            source,
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_json()).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| Error::Json {
            context: path.display().to_string(),
            source,
        })
    }

    /// Checks this solution against `inst`: digests must match, then G(U)
    /// is tested for connectivity.
    pub fn verify(&self, inst: &Instance) -> Result<Verdict> {
        if self.instance_digest != inst.digest() {
            return Err(Error::DigestMismatch {
                expected: inst.digest().to_owned(),
                found: self.instance_digest.clone(),
            });
        }
        let cc = inst.graph().min_max_components(&self.u_set)?;
        Ok(Verdict {
            feasible: cc.is_connected(),
            components: cc.count(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub feasible: bool,
    pub components: usize,
}
