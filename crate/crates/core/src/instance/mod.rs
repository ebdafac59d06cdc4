//! Problem input: node count plus the directed min- and max-power
//! reachability relations.

mod graph;
mod io;

use std::fmt;
use std::sync::OnceLock;

use serde_json::Value;

use crate::error::{Error, Result};

pub use graph::{components, derive_edges, is_feasible, min_max_graph, ComponentLabeling, PowerGraph};
pub use io::{load, load_with, save, LoadOptions, LoadReport};

/// Dense node index in `0..n`.
pub type NodeId = u32;

/// Undirected edge stored as `(min, max)`.
pub type Edge = (NodeId, NodeId);

/// Compressed sparse rows: sorted, duplicate-free neighbour lists per node.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

impl Adjacency {
    /// Sorts and deduplicates every list.
    pub fn from_lists(lists: Vec<Vec<NodeId>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        offsets.push(0);
        for mut l in lists {
            l.sort_unstable();
            l.dedup();
            targets.extend_from_slice(&l);
            offsets.push(targets.len());
        }
        Adjacency { offsets, targets }
    }

    /// Symmetric adjacency of an undirected edge list (endpoints must be `< n`).
    pub fn from_edges(n: usize, edges: &[Edge]) -> Self {
        let mut degree = vec![0usize; n + 1];
        for &(u, v) in edges {
            degree[u as usize + 1] += 1;
            degree[v as usize + 1] += 1;
        }
        for i in 0..n {
            degree[i + 1] += degree[i];
        }
        let offsets = degree;
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in edges {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Adjacency { offsets, targets }
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    /// Total number of stored (directed) entries.
    pub fn entry_count(&self) -> usize {
        self.targets.len()
    }

    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn contains(&self, v: NodeId, u: NodeId) -> bool {
        self.neighbors(v).binary_search(&u).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[NodeId]> + '_ {
        (0..self.node_count() as NodeId).map(move |v| self.neighbors(v))
    }
}

/// Reason an [`Instance`] breaks one of the problem's standing assumptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `dmin(node)` lists ids missing from `dmax(node)`.
    NotContained { node: NodeId, missing: Vec<NodeId> },
    /// The max-power graph G(V) has more than one component; `isolated` is
    /// the smallest id outside node 0's component.
    Disconnected { components: usize, isolated: NodeId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotContained { node, missing } => {
                write!(f, "dmin({node}) is not contained in dmax({node}): missing {missing:?}")
            }
            Violation::Disconnected {
                components,
                isolated,
            } => write!(
                f,
                "max-power graph is disconnected: {components} components (node {isolated} unreachable from node 0)"
            ),
        }
    }
}

/// A validated-on-demand problem instance.
///
/// Neighbour lists are canonical: sorted ascending, without duplicates and
/// without self-reachability. The derived [`PowerGraph`], the validation
/// result and the content digest are computed once and cached.
#[derive(Clone, Debug)]
pub struct Instance {
    dmin: Adjacency,
    dmax: Adjacency,
    meta: Option<Value>,
    graph: OnceLock<PowerGraph>,
    violations: OnceLock<Vec<Violation>>,
    digest: OnceLock<String>,
}

impl PartialEq for Instance {
    fn eq(&self, other: &Self) -> bool {
        self.dmin == other.dmin && self.dmax == other.dmax && self.meta == other.meta
    }
}

impl Eq for Instance {}

impl Instance {
    /// Builds a canonical instance. Rejects `n = 0`, list-count mismatches
    /// and out-of-range ids; self-reachability is stripped silently (use
    /// [`Instance::with_report`] to learn how many entries were dropped).
    pub fn new(n: usize, dmin: Vec<Vec<NodeId>>, dmax: Vec<Vec<NodeId>>) -> Result<Self> {
        Self::with_report(n, dmin, dmax).map(|(inst, _)| inst)
    }

    pub fn with_report(
        n: usize,
        dmin: Vec<Vec<NodeId>>,
        dmax: Vec<Vec<NodeId>>,
    ) -> Result<(Self, LoadReport)> {
        let mut report = LoadReport::default();
        let dmin = canonical_lists("dmin", n, dmin, &mut report)?;
        let dmax = canonical_lists("dmax", n, dmax, &mut report)?;
        Ok((Self::from_parts(dmin, dmax, None), report))
    }

    pub(crate) fn from_parts(dmin: Adjacency, dmax: Adjacency, meta: Option<Value>) -> Self {
        Instance {
            dmin,
            dmax,
            meta,
            graph: OnceLock::new(),
            violations: OnceLock::new(),
            digest: OnceLock::new(),
        }
    }

    pub fn with_meta(mut self, meta: Value) -> Self {
        self.meta = Some(meta);
        self.digest = OnceLock::new();
        self
    }

    pub fn n(&self) -> usize {
        self.dmin.node_count()
    }

    pub fn dmin(&self, v: NodeId) -> &[NodeId] {
        self.dmin.neighbors(v)
    }

    pub fn dmax(&self, v: NodeId) -> &[NodeId] {
        self.dmax.neighbors(v)
    }

    pub fn dmin_relation(&self) -> &Adjacency {
        &self.dmin
    }

    pub fn dmax_relation(&self) -> &Adjacency {
        &self.dmax
    }

    pub fn meta(&self) -> Option<&Value> {
        self.meta.as_ref()
    }

    /// `|V| + Σ |dmin(v)|`.
    pub fn s_min(&self) -> usize {
        self.n() + self.dmin.entry_count()
    }

    /// `|V| + Σ |dmax(v)|`.
    pub fn s_max(&self) -> usize {
        self.n() + self.dmax.entry_count()
    }

    /// Symmetric edge sets and adjacency. Computed on first use; does not
    /// require the instance to be valid.
    pub fn graph(&self) -> &PowerGraph {
        self.graph.get_or_init(|| PowerGraph::build(self))
    }

    /// Every violated standing assumption, empty when the instance is valid.
    pub fn violations(&self) -> &[Violation] {
        self.violations.get_or_init(|| compute_violations(self))
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidInstance(self.violations().to_vec()))
        }
    }

    /// Replaces `dmax(v)` by `dmax(v) ∪ dmin(v)` for every node.
    pub fn normalized(self) -> Self {
        let lists = (0..self.n() as NodeId)
            .map(|v| {
                let mut l = self.dmax(v).to_vec();
                l.extend_from_slice(self.dmin(v));
                l
            })
            .collect();
        Self::from_parts(self.dmin, Adjacency::from_lists(lists), self.meta)
    }

    /// Hex SHA-256 of the canonical file bytes.
    pub fn digest(&self) -> &str {
        self.digest.get_or_init(|| io::digest_of(self))
    }

    pub fn to_canonical_bytes(&self) -> Vec<u8> {
        io::canonical_bytes(self)
    }

    /// Lower bound from the min-power components: `|CC(G(∅))|` when that
    /// exceeds one, otherwise 0.
    pub fn lower_bound_cc(&self) -> usize {
        let cc = self.graph().min_components().count();
        if cc > 1 {
            cc
        } else {
            0
        }
    }
}

/// Returns the instance's violations; empty iff every invariant holds.
pub fn validate(inst: &Instance) -> Vec<Violation> {
    inst.violations().to_vec()
}

/// `|CC(G(∅))|` if greater than one, else 0.
pub fn lower_bound_cc(inst: &Instance) -> usize {
    inst.lower_bound_cc()
}

fn canonical_lists(
    field: &'static str,
    n: usize,
    lists: Vec<Vec<NodeId>>,
    report: &mut LoadReport,
) -> Result<Adjacency> {
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    if n > NodeId::MAX as usize {
        return Err(Error::UnknownNode {
            id: n as u64,
            n: NodeId::MAX as usize,
        });
    }
    if lists.len() != n {
        return Err(Error::LengthMismatch {
            field,
            expected: n,
            found: lists.len(),
        });
    }
    let mut out = Vec::with_capacity(n);
    for (v, mut l) in lists.into_iter().enumerate() {
        if let Some((index, &value)) = l.iter().enumerate().find(|(_, &u)| u as usize >= n) {
            return Err(Error::NodeOutOfRange {
                field,
                node: v,
                index,
                value: value as u64,
                n,
            });
        }
        let before = l.len();
        l.retain(|&u| u as usize != v);
        report.self_loops_stripped += before - l.len();
        l.sort_unstable();
        let before = l.len();
        l.dedup();
        report.duplicates_dropped += before - l.len();
        out.push(l);
    }
    Ok(Adjacency::from_lists(out))
}

fn compute_violations(inst: &Instance) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in 0..inst.n() as NodeId {
        let max = inst.dmax(v);
        let missing: Vec<NodeId> = inst
            .dmin(v)
            .iter()
            .copied()
            .filter(|u| max.binary_search(u).is_err())
            .collect();
        if !missing.is_empty() {
            out.push(Violation::NotContained { node: v, missing });
        }
    }
    let cc = inst.graph().max_components();
    if cc.count() > 1 {
        let isolated = (0..inst.n() as NodeId)
            .find(|&v| cc.label(v) != cc.label(0))
            .unwrap_or(0);
        out.push(Violation::Disconnected {
            components: cc.count(),
            isolated,
        });
    }
    out
}
