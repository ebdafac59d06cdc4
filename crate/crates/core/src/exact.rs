//! Exhaustive optimal solver, used as ground truth on small instances.
//!
//! Sizes are tried in ascending order and, within a size, subsets in
//! lexicographic order, so the first feasible subset is optimal and the
//! lexicographically smallest optimum. With pruning on, only subsets that
//! hit every min-power component are tested (any feasible set must).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{Instance, NodeId};

#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    /// Largest subset size to try.
    pub budget: Option<usize>,
    /// Skip subsets that miss a min-power component.
    pub prune: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            budget: None,
            prune: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub size: usize,
    pub u_opt: Vec<NodeId>,
    /// Candidate subsets whose feasibility was tested.
    pub nodes_explored: u64,
    pub proof: &'static str,
}

pub fn solve_exact(inst: &Instance, budget: Option<usize>) -> Result<ExactResult> {
    solve_exact_with(
        inst,
        ExactOptions {
            budget,
            ..ExactOptions::default()
        },
    )
}

pub fn solve_exact_with(inst: &Instance, opts: ExactOptions) -> Result<ExactResult> {
    inst.ensure_valid()?;
    let checker = Checker::new(inst);
    let n = inst.n();
    let start = if opts.prune { inst.lower_bound_cc() } else { 0 };
    let last = opts.budget.unwrap_or(n).min(n);
    let mut explored = 0u64;
    for size in start..=last {
        let mut found = None;
        checker.enumerate(size, opts.prune, &mut |subset| {
            explored += 1;
            if checker.feasible(subset) {
                found = Some(subset.to_vec());
                false
            } else {
                true
            }
        });
        if let Some(u_opt) = found {
            return Ok(ExactResult {
                size,
                u_opt,
                nodes_explored: explored,
                proof: "exhausted sizes < size",
            });
        }
    }
    Err(Error::BudgetExceeded { budget: last })
}

/// Every feasible subset of exactly `size` nodes, in lexicographic order.
pub fn feasible_subsets_of_size(inst: &Instance, size: usize) -> Result<Vec<Vec<NodeId>>> {
    inst.ensure_valid()?;
    let checker = Checker::new(inst);
    let mut out = Vec::new();
    checker.enumerate(size, true, &mut |subset| {
        if checker.feasible(subset) {
            out.push(subset.to_vec());
        }
        true
    });
    Ok(out)
}

struct Checker {
    n: usize,
    cc_count: usize,
    min_label: Vec<NodeId>,
    /// Max edges between distinct min components, as `(u, v)`.
    cross: Vec<(NodeId, NodeId)>,
}

impl Checker {
    fn new(inst: &Instance) -> Self {
        let g = inst.graph();
        let cc = g.min_components();
        Checker {
            n: inst.n(),
            cc_count: cc.count(),
            min_label: cc.labels().to_vec(),
            cross: g
                .e_max()
                .iter()
                .copied()
                .filter(|&(u, v)| cc.label(u) != cc.label(v))
                .collect(),
        }
    }

    fn feasible(&self, subset: &[NodeId]) -> bool {
        if self.cc_count <= 1 {
            return true;
        }
        let mut inside = vec![false; self.n];
        for &v in subset {
            inside[v as usize] = true;
        }
        let mut parent: Vec<NodeId> = (0..self.cc_count as NodeId).collect();
        fn root(parent: &mut [NodeId], mut x: NodeId) -> NodeId {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut joins = 0;
        for &(u, v) in &self.cross {
            if inside[u as usize] && inside[v as usize] {
                let a = root(&mut parent, self.min_label[u as usize]);
                let b = root(&mut parent, self.min_label[v as usize]);
                if a != b {
                    parent[a as usize] = b;
                    joins += 1;
                    if joins + 1 == self.cc_count {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Calls `visit` on each `size`-subset in lexicographic order until it
    /// returns false.
    fn enumerate(&self, size: usize, prune: bool, visit: &mut dyn FnMut(&[NodeId]) -> bool) {
        let mut chosen = Vec::with_capacity(size);
        let mut hits = vec![0u32; self.cc_count];
        // a min-connected instance needs no hitting
        let prune = prune && self.cc_count > 1;
        let uncovered = if prune { self.cc_count } else { 0 };
        self.descend(size, 0, uncovered, prune, &mut chosen, &mut hits, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        size: usize,
        from: usize,
        uncovered: usize,
        prune: bool,
        chosen: &mut Vec<NodeId>,
        hits: &mut [u32],
        visit: &mut dyn FnMut(&[NodeId]) -> bool,
    ) -> bool {
        let slots = size - chosen.len();
        if prune && uncovered > slots {
            return true;
        }
        if slots == 0 {
            return visit(chosen);
        }
        for v in from..=self.n - slots {
            let l = self.min_label[v] as usize;
            let newly = prune && hits[l] == 0;
            hits[l] += 1;
            chosen.push(v as NodeId);
            let go_on = self.descend(
                size,
                v + 1,
                uncovered - newly as usize,
                prune,
                chosen,
                hits,
                visit,
            );
            chosen.pop();
            hits[l] -= 1;
            if !go_on {
                return false;
            }
        }
        true
    }
}
