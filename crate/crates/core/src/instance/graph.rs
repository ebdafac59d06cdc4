use std::collections::VecDeque;
use std::sync::OnceLock;

use super::{Adjacency, Edge, Instance, NodeId};
use crate::disjoint_sets::DisjointSets;
use crate::error::{Error, Result};

/// Mutual (symmetric) edges of the min- and max-power relations.
///
/// `{u, v}` is a min edge iff `u ∈ dmin(v)` and `v ∈ dmin(u)`; the same rule
/// with `dmax` gives the max edges. Edge lists are sorted and hold each edge
/// once as `(min, max)`.
#[derive(Clone, Debug)]
pub struct PowerGraph {
    e_min: Vec<Edge>,
    e_max: Vec<Edge>,
    min_adj: Adjacency,
    max_adj: Adjacency,
    min_cc: OnceLock<ComponentLabeling>,
    max_cc: OnceLock<ComponentLabeling>,
}

impl PowerGraph {
    pub(crate) fn build(inst: &Instance) -> Self {
        let n = inst.n();
        let e_min = mutual_edges(inst.dmin_relation());
        let e_max = mutual_edges(inst.dmax_relation());
        PowerGraph {
            min_adj: Adjacency::from_edges(n, &e_min),
            max_adj: Adjacency::from_edges(n, &e_max),
            e_min,
            e_max,
            min_cc: OnceLock::new(),
            max_cc: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.min_adj.node_count()
    }

    pub fn e_min(&self) -> &[Edge] {
        &self.e_min
    }

    pub fn e_max(&self) -> &[Edge] {
        &self.e_max
    }

    pub fn min_neighbors(&self, v: NodeId) -> &[NodeId] {
        self.min_adj.neighbors(v)
    }

    pub fn max_neighbors(&self, v: NodeId) -> &[NodeId] {
        self.max_adj.neighbors(v)
    }

    pub fn max_adjacency(&self) -> &Adjacency {
        &self.max_adj
    }

    pub fn has_max_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.max_adj.contains(u, v)
    }

    /// Components of the min-power graph G(∅).
    pub fn min_components(&self) -> &ComponentLabeling {
        self.min_cc
            .get_or_init(|| ComponentLabeling::from_adjacency(&self.min_adj))
    }

    /// Components of the max-power graph G(V).
    pub fn max_components(&self) -> &ComponentLabeling {
        self.max_cc
            .get_or_init(|| ComponentLabeling::from_adjacency(&self.max_adj))
    }

    /// Edge set of G(U): every min edge plus the max edges with both
    /// endpoints in `u_set`. Sorted, duplicate-free.
    pub fn min_max_edges(&self, u_set: &[NodeId]) -> Result<Vec<Edge>> {
        let mask = self.membership(u_set)?;
        let mut edges: Vec<Edge> = self
            .e_max
            .iter()
            .copied()
            .filter(|&(u, v)| mask[u as usize] && mask[v as usize])
            .collect();
        edges.extend_from_slice(&self.e_min);
        edges.sort_unstable();
        edges.dedup();
        Ok(edges)
    }

    /// Component structure of G(U).
    pub fn min_max_components(&self, u_set: &[NodeId]) -> Result<ComponentLabeling> {
        Ok(components(self.n(), &self.min_max_edges(u_set)?))
    }

    /// Whether G(U) is connected. Ids outside `0..n` make the set infeasible.
    pub fn is_feasible(&self, u_set: &[NodeId]) -> bool {
        let Ok(mask) = self.membership(u_set) else {
            return false;
        };
        let min_cc = self.min_components();
        let mut sets = DisjointSets::new(min_cc.count());
        for &(u, v) in &self.e_max {
            if mask[u as usize] && mask[v as usize] {
                sets.union(min_cc.label(u), min_cc.label(v));
                if sets.set_count() == 1 {
                    break;
                }
            }
        }
        sets.set_count() == 1
    }

    fn membership(&self, u_set: &[NodeId]) -> Result<Vec<bool>> {
        let n = self.n();
        let mut mask = vec![false; n];
        for &u in u_set {
            if u as usize >= n {
                return Err(Error::UnknownNode { id: u as u64, n });
            }
            mask[u as usize] = true;
        }
        Ok(mask)
    }
}

fn mutual_edges(rel: &Adjacency) -> Vec<Edge> {
    let mut out = Vec::new();
    for v in 0..rel.node_count() as NodeId {
        for &u in rel.neighbors(v) {
            if u > v && rel.contains(u, v) {
                out.push((v, u));
            }
        }
    }
    out
}

/// Validated edge derivation; the graph is cached on the instance.
pub fn derive_edges(inst: &Instance) -> Result<&PowerGraph> {
    inst.ensure_valid()?;
    Ok(inst.graph())
}

/// Dense component labels, numbered in order of each component's smallest node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    labels: Vec<NodeId>,
    count: usize,
}

impl ComponentLabeling {
    pub fn from_adjacency(adj: &Adjacency) -> Self {
        let n = adj.node_count();
        let mut labels = vec![NodeId::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if labels[s] != NodeId::MAX {
                continue;
            }
            let c = count as NodeId;
            count += 1;
            labels[s] = c;
            queue.push_back(s as NodeId);
            while let Some(v) = queue.pop_front() {
                for &u in adj.neighbors(v) {
                    if labels[u as usize] == NodeId::MAX {
                        labels[u as usize] = c;
                        queue.push_back(u);
                    }
                }
            }
        }
        ComponentLabeling { labels, count }
    }

    /// Relabels arbitrary per-node keys (e.g. union-find roots) densely.
    pub fn from_keys(keys: &[NodeId]) -> Self {
        let mut map = vec![NodeId::MAX; keys.len()];
        let mut labels = Vec::with_capacity(keys.len());
        let mut count = 0;
        for &k in keys {
            let slot = &mut map[k as usize];
            if *slot == NodeId::MAX {
                *slot = count as NodeId;
                count += 1;
            }
            labels.push(*slot);
        }
        ComponentLabeling { labels, count }
    }

    #[inline]
    pub fn label(&self, v: NodeId) -> NodeId {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[NodeId] {
        &self.labels
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_connected(&self) -> bool {
        self.count <= 1
    }
}

/// Connected components of `(0..n, edges)`. Panics on endpoints `>= n`.
pub fn components(n: usize, edges: &[Edge]) -> ComponentLabeling {
    ComponentLabeling::from_adjacency(&Adjacency::from_edges(n, edges))
}

/// Edge set `E_min(V) ∪ E_max(U)` of the min-max-power graph.
pub fn min_max_graph(inst: &Instance, u_set: &[NodeId]) -> Result<Vec<Edge>> {
    inst.graph().min_max_edges(u_set)
}

pub fn is_feasible(inst: &Instance, u_set: &[NodeId]) -> bool {
    inst.graph().is_feasible(u_set)
}
