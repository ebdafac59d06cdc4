//! The parameterized greedy merging algorithm and the spanning-tree baseline.
//!
//! Starting from the min-power graph, the solver repeatedly takes a
//! k'-merging (k' nodes, connected by max edges, lying in k' distinct
//! current components) for k' = k, then k - 1, ..., down to 2, until the
//! working graph is connected. Only the component partition of the working
//! graph is tracked: adding the max edges of a merging joins exactly the
//! components its nodes lie in.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::disjoint_sets::DisjointSets;
use crate::error::{Error, Result};
use crate::instance::{ComponentLabeling, Instance, NodeId, PowerGraph};
use crate::solution::{Algorithm, Merging, Solution};

/// How the solver picks among several available mergings.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum MergingOrder {
    /// Smallest node ids first.
    #[default]
    Lexicographic,
    /// Lexicographic over the ranks of a seeded random node permutation.
    Permutation(u64),
    /// Replay these mergings first, then continue lexicographically.
    Schedule(Vec<Vec<NodeId>>),
}

impl MergingOrder {
    /// `rank[v]` = position of `v` in the order's node permutation.
    fn ranks(&self, n: usize) -> Vec<u32> {
        match self {
            MergingOrder::Permutation(seed) => {
                let mut perm: Vec<NodeId> = (0..n as NodeId).collect();
                perm.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
                let mut rank = vec![0; n];
                for (i, &v) in perm.iter().enumerate() {
                    rank[v as usize] = i as u32;
                }
                rank
            }
            _ => (0..n as u32).collect(),
        }
    }
}

/// True iff `m` induces a connected max-power subgraph and its nodes carry
/// pairwise-distinct labels.
pub fn is_k_merging(m: &[NodeId], labeling: &ComponentLabeling, graph: &PowerGraph) -> bool {
    if m.is_empty() || m.iter().any(|&v| v as usize >= graph.n()) {
        return false;
    }
    let mut labels: Vec<NodeId> = m.iter().map(|&v| labeling.label(v)).collect();
    labels.sort_unstable();
    if labels.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    induced_max_connected(m, graph)
}

fn induced_max_connected(m: &[NodeId], graph: &PowerGraph) -> bool {
    let mut seen = vec![false; m.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for (j, &w) in m.iter().enumerate() {
            if !seen[j] && graph.has_max_edge(m[i], w) {
                seen[j] = true;
                reached += 1;
                stack.push(j);
            }
        }
    }
    reached == m.len()
}

/// First k-merging under `order`, if any exists.
///
/// "First" means the lexicographically smallest candidate when each set is
/// written as its ascending sequence of ranks. For [`MergingOrder::Schedule`]
/// the ranks are the plain ids.
pub fn find_k_merging(
    k: usize,
    labeling: &ComponentLabeling,
    graph: &PowerGraph,
    order: &MergingOrder,
) -> Option<Vec<NodeId>> {
    if k < 2 {
        return None;
    }
    MergingSearch::new(graph, order.ranks(graph.n())).first(k, labeling)
}

/// Connected-subset enumeration over the max-power graph, anchored at the
/// lowest-ranked member and pruned on repeated component labels.
pub(crate) struct MergingSearch<'g> {
    graph: &'g PowerGraph,
    rank: Vec<u32>,
    by_rank: Vec<NodeId>,
}

impl<'g> MergingSearch<'g> {
    pub(crate) fn new(graph: &'g PowerGraph, rank: Vec<u32>) -> Self {
        let mut by_rank = vec![0; rank.len()];
        for (v, &r) in rank.iter().enumerate() {
            by_rank[r as usize] = v as NodeId;
        }
        MergingSearch {
            graph,
            rank,
            by_rank,
        }
    }

    /// Returns the merging sorted by node id.
    pub(crate) fn first(&self, k: usize, labeling: &ComponentLabeling) -> Option<Vec<NodeId>> {
        if k > labeling.count() {
            return None;
        }
        for &anchor in &self.by_rank {
            let mut best: Option<Vec<u32>> = None;
            let mut sub = vec![anchor];
            let ext: Vec<NodeId> = self
                .graph
                .max_neighbors(anchor)
                .iter()
                .copied()
                .filter(|&u| self.rank[u as usize] > self.rank[anchor as usize])
                .collect();
            self.extend(k, anchor, &mut sub, ext, labeling, &mut best);
            if let Some(ranks) = best {
                let mut nodes: Vec<NodeId> = ranks.iter().map(|&r| self.by_rank[r as usize]).collect();
                nodes.sort_unstable();
                return Some(nodes);
            }
        }
        None
    }

    fn extend(
        &self,
        k: usize,
        anchor: NodeId,
        sub: &mut Vec<NodeId>,
        mut ext: Vec<NodeId>,
        labeling: &ComponentLabeling,
        best: &mut Option<Vec<u32>>,
    ) {
        if sub.len() == k {
            let mut ranks: Vec<u32> = sub.iter().map(|&v| self.rank[v as usize]).collect();
            ranks.sort_unstable();
            if best.as_ref().is_none_or(|b| ranks < *b) {
                *best = Some(ranks);
            }
            return;
        }
        let anchor_rank = self.rank[anchor as usize];
        while let Some(w) = ext.pop() {
            let lw = labeling.label(w);
            if sub.iter().any(|&x| labeling.label(x) == lw) {
                continue;
            }
            let mut next = ext.clone();
            for &u in self.graph.max_neighbors(w) {
                if self.rank[u as usize] <= anchor_rank || sub.contains(&u) || next.contains(&u) {
                    continue;
                }
                // exclusive neighbourhood: skip nodes already adjacent to the current subset
                if sub.iter().any(|&x| self.graph.has_max_edge(x, u)) {
                    continue;
                }
                next.push(u);
            }
            sub.push(w);
            self.extend(k, anchor, sub, next, labeling, best);
            sub.pop();
        }
    }
}

/// Working component partition of `(V, E_i)`.
pub(crate) struct WorkingGraph<'g> {
    graph: &'g PowerGraph,
    sets: DisjointSets,
}

impl<'g> WorkingGraph<'g> {
    /// Starts from the min-power graph G(∅).
    pub(crate) fn new(graph: &'g PowerGraph) -> Self {
        let mut sets = DisjointSets::new(graph.n());
        for &(u, v) in graph.e_min() {
            sets.union(u, v);
        }
        WorkingGraph { graph, sets }
    }

    pub(crate) fn component_count(&self) -> usize {
        self.sets.set_count()
    }

    pub(crate) fn labeling(&mut self) -> ComponentLabeling {
        let roots: Vec<NodeId> = (0..self.graph.n() as NodeId).map(|v| self.sets.root(v)).collect();
        ComponentLabeling::from_keys(&roots)
    }

    pub(crate) fn merge(&mut self, m: &[NodeId]) {
        for w in m.windows(2) {
            self.sets.union(w[0], w[1]);
        }
    }
}

/// Greedy merging solver with parameter `k >= 2`.
pub fn approx_2lsra_k(inst: &Instance, k: usize, order: &MergingOrder) -> Result<Solution> {
    let run = run_greedy(inst, k, order)?;
    Ok(run.solution)
}

/// A finished greedy run. `phase_ends[i]` is the trace length when the
/// phase for `k - i` ended.
#[derive(Clone, Debug)]
pub struct GreedyRun {
    pub solution: Solution,
    pub phase_ends: Vec<(usize, usize)>,
}

pub fn run_greedy(inst: &Instance, k: usize, order: &MergingOrder) -> Result<GreedyRun> {
    inst.ensure_valid()?;
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let graph = inst.graph();
    let n = graph.n();
    let rank = order.ranks(n);
    let search = MergingSearch::new(graph, rank.clone());
    let mut work = WorkingGraph::new(graph);
    let mut trace = Vec::new();
    let mut phase = k;
    let mut phase_ends = Vec::new();

    if let MergingOrder::Schedule(entries) = order {
        for (step, entry) in entries.iter().enumerate() {
            let size = entry.len();
            if size < 2 || size > phase {
                return Err(Error::InvalidSchedule {
                    step,
                    reason: format!("merging of size {size} not allowed in phase {phase}"),
                });
            }
            let labeling = work.labeling();
            while phase > size {
                if let Some(m) = search.first(phase, &labeling) {
                    return Err(Error::InvalidSchedule {
                        step,
                        reason: format!("{phase}-merging {m:?} still available"),
                    });
                }
                phase_ends.push((phase, trace.len()));
                phase -= 1;
            }
            let mut nodes = entry.clone();
            nodes.sort_unstable();
            if !is_k_merging(&nodes, &labeling, graph) {
                return Err(Error::InvalidSchedule {
                    step,
                    reason: format!("{nodes:?} is not a {size}-merging here"),
                });
            }
            work.merge(&nodes);
            trace.push(Merging::new(nodes, size));
        }
    }

    while work.component_count() > 1 && phase > 2 {
        let labeling = work.labeling();
        match search.first(phase, &labeling) {
            Some(m) => {
                work.merge(&m);
                trace.push(Merging::new(m, phase));
            }
            None => {
                phase_ends.push((phase, trace.len()));
                phase -= 1;
            }
        }
    }
    if work.component_count() > 1 {
        // every cross-component max edge is a 2-merging; taking them in rank
        // order is the same as repeatedly taking the first one
        let mut edges: Vec<(u32, u32, NodeId, NodeId)> = graph
            .e_max()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (rank[u as usize], rank[v as usize]);
                (a.min(b), a.max(b), u, v)
            })
            .collect();
        edges.sort_unstable();
        for (_, _, u, v) in edges {
            if work.sets.root(u) != work.sets.root(v) {
                work.sets.union(u, v);
                trace.push(Merging::new(vec![u, v], 2));
                if work.component_count() == 1 {
                    break;
                }
            }
        }
    }
    while phase >= 2 {
        phase_ends.push((phase, trace.len()));
        phase -= 1;
    }
    debug_assert_eq!(work.component_count(), 1);

    Ok(GreedyRun {
        solution: Solution::from_trace(Algorithm::GreedyK, Some(k), trace, inst),
        phase_ends,
    })
}

/// Spanning tree over the min-power components: each tree edge contributes
/// one mutual max pair. Tree edges and their pairs are chosen by smallest
/// canonical `(u, v)`.
pub fn spanning_tree_baseline(inst: &Instance) -> Result<Solution> {
    inst.ensure_valid()?;
    let graph = inst.graph();
    let cc = graph.min_components();
    let mut tree = DisjointSets::new(cc.count());
    let mut trace = Vec::new();
    for &(u, v) in graph.e_max() {
        if tree.set_count() == 1 {
            break;
        }
        let (cu, cv) = (cc.label(u), cc.label(v));
        if tree.root(cu) != tree.root(cv) {
            tree.union(cu, cv);
            trace.push(Merging::new(vec![u, v], 2));
        }
    }
    Ok(Solution::from_trace(Algorithm::SpanningTree, None, trace, inst))
}
