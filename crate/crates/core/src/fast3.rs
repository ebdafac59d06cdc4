//! Near-linear greedy solver for k = 3.
//!
//! Three passes over a union-find structure: seed it with the min-power
//! components, scan every node's max-power neighbourhood for 3-mergings
//! centred at that node, then sweep the max edges for 2-mergings.

pub use crate::disjoint_sets::DisjointSets;

use crate::error::{Error, Result};
use crate::instance::{Instance, NodeId, PowerGraph};
use crate::solution::{Algorithm, Merging, Solution};

/// Result of [`fast3_solve`] plus the union-find work it performed.
#[derive(Clone, Debug)]
pub struct Fast3Run {
    pub solution: Solution,
    /// `find` + `union` calls across all three steps.
    pub op_count: u64,
    /// Number of leading trace entries that are 3-mergings.
    pub three_mergings: usize,
}

impl Fast3Run {
    pub fn op_count(&self) -> u64 {
        self.op_count
    }
}

/// Solves with nodes scanned in ascending id order.
pub fn fast3_solve(inst: &Instance) -> Result<Fast3Run> {
    fast3_solve_with_order(inst, None)
}

/// `scan_order`, when given, must be a permutation of `0..n`; it fixes the
/// order in which step 2 visits centre nodes.
pub fn fast3_solve_with_order(inst: &Instance, scan_order: Option<&[NodeId]>) -> Result<Fast3Run> {
    inst.ensure_valid()?;
    let graph = inst.graph();
    let n = graph.n();
    if let Some(order) = scan_order {
        check_permutation(order, n)?;
    }

    let mut sets = DisjointSets::new(n);
    for &(u, v) in graph.e_min() {
        let (ru, rv) = (sets.find(u), sets.find(v));
        sets.union(ru, rv);
    }

    let mut trace = Vec::new();
    match scan_order {
        Some(order) => {
            for &v in order {
                if sets.set_count() == 1 {
                    break;
                }
                scan_centre(graph, &mut sets, v, &mut trace);
            }
        }
        None => {
            for v in 0..n as NodeId {
                if sets.set_count() == 1 {
                    break;
                }
                scan_centre(graph, &mut sets, v, &mut trace);
            }
        }
    }
    let three_mergings = trace.len();

    for &(u, v) in graph.e_max() {
        if sets.set_count() == 1 {
            break;
        }
        let (ru, rv) = (sets.find(u), sets.find(v));
        if ru != rv {
            sets.union(ru, rv);
            trace.push(Merging::new(vec![u, v], 2));
        }
    }

    Ok(Fast3Run {
        solution: Solution::from_trace(Algorithm::Fast3, Some(3), trace, inst),
        op_count: sets.op_count(),
        three_mergings,
    })
}

fn scan_centre(graph: &PowerGraph, sets: &mut DisjointSets, v: NodeId, trace: &mut Vec<Merging>) {
    let mut cv = sets.find(v);
    // first neighbour seen in a foreign component, with that component's root
    let mut held: Option<(NodeId, NodeId)> = None;
    for &u in graph.max_neighbors(v) {
        let cu = sets.find(u);
        if cu == cv {
            continue;
        }
        match held {
            None => held = Some((u, cu)),
            Some((_, ch)) if ch == cu => {}
            Some((h, ch)) => {
                trace.push(Merging::new(vec![v, h, u], 3));
                let r = sets.union(cv, ch);
                cv = sets.union(r, cu);
                // roots only change through unions, and both were just spent
                held = None;
            }
        }
    }
}

fn check_permutation(order: &[NodeId], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in order {
        match seen.get_mut(v as usize) {
            Some(s) if !*s => *s = true,
            Some(_) => {
                return Err(Error::InvalidParams(format!("scan order repeats node {v}")));
            }
            None => return Err(Error::UnknownNode { id: v as u64, n }),
        }
    }
    if order.len() != n {
        return Err(Error::InvalidParams(format!(
            "scan order has {} nodes, expected {n}",
            order.len()
        )));
    }
    Ok(())
}

/// Scan order that makes step 2 take the schedule's 3-mergings first: the
/// centre of each 3-merging (the member max-adjacent to both others) in
/// schedule order, then all remaining nodes ascending.
pub fn scan_order_from_schedule(graph: &PowerGraph, schedule: &[Vec<NodeId>]) -> Vec<NodeId> {
    let n = graph.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for m in schedule.iter().filter(|m| m.len() == 3) {
        let centre = m.iter().copied().find(|&c| {
            (c as usize) < n
                && m.iter()
                    .filter(|&&x| x != c)
                    .all(|&x| graph.has_max_edge(c, x))
        });
        if let Some(c) = centre {
            if !placed[c as usize] {
                placed[c as usize] = true;
                order.push(c);
            }
        }
    }
    order.extend((0..n as NodeId).filter(|&v| !placed[v as usize]));
    order
}
