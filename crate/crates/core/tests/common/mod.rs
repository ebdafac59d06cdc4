//! Brute-force oracles that only look at the raw reachability lists.

#![allow(dead_code)]

use std::collections::BTreeSet;

use tlsra_core::{Instance, NodeId};

pub fn mutual(inst: &Instance, max: bool, u: NodeId, v: NodeId) -> bool {
    let rel = |a: NodeId| if max { inst.dmax(a) } else { inst.dmin(a) };
    u != v && rel(u).contains(&v) && rel(v).contains(&u)
}

/// Component id per node by repeated flood fill over an explicit edge test.
pub fn flood_labels(n: usize, edge: impl Fn(NodeId, NodeId) -> bool) -> Vec<usize> {
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for (y, l) in label.iter_mut().enumerate() {
                if *l == usize::MAX && edge(x as NodeId, y as NodeId) {
                    *l = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn count(labels: &[usize]) -> usize {
    labels.iter().collect::<BTreeSet<_>>().len()
}

pub fn feasible(inst: &Instance, u_set: &[NodeId]) -> bool {
    let inside: BTreeSet<NodeId> = u_set.iter().copied().collect();
    let labels = flood_labels(inst.n(), |a, b| {
        mutual(inst, false, a, b)
            || (inside.contains(&a) && inside.contains(&b) && mutual(inst, true, a, b))
    });
    count(&labels) == 1
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<NodeId>> {
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<NodeId>, out: &mut Vec<Vec<NodeId>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v as NodeId);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Every k-merging with respect to the given per-node component labels, in
/// lexicographic order.
pub fn all_mergings(inst: &Instance, labels: &[usize], k: usize) -> Vec<Vec<NodeId>> {
    subsets(inst.n(), k)
        .into_iter()
        .filter(|m| {
            let distinct: BTreeSet<usize> = m.iter().map(|&v| labels[v as usize]).collect();
            if distinct.len() != k {
                return false;
            }
            let local = flood_labels(k, |a, b| mutual(inst, true, m[a as usize], m[b as usize]));
            count(&local) == 1
        })
        .collect()
}

/// Labels of the working graph after taking `mergings`, starting from G(∅).
pub fn labels_after(inst: &Instance, mergings: &[Vec<NodeId>]) -> Vec<usize> {
    flood_labels(inst.n(), |a, b| {
        mutual(inst, false, a, b)
            || mergings
                .iter()
                .any(|m| m.contains(&a) && m.contains(&b) && mutual(inst, true, a, b))
    })
}

/// Smallest feasible size, by plain enumeration over all subsets.
pub fn brute_opt(inst: &Instance) -> (usize, Vec<Vec<NodeId>>) {
    for s in 0..=inst.n() {
        let sols: Vec<_> = subsets(inst.n(), s)
            .into_iter()
            .filter(|u| feasible(inst, u))
            .collect();
        if !sols.is_empty() {
            return (s, sols);
        }
    }
    unreachable!("G(V) is connected")
}

pub fn is_merging(inst: &Instance, labels: &[usize], m: &[NodeId]) -> bool {
    let distinct: BTreeSet<usize> = m.iter().map(|&v| labels[v as usize]).collect();
    distinct.len() == m.len()
        && count(&flood_labels(m.len(), |a, b| {
            mutual(inst, true, m[a as usize], m[b as usize])
        })) == 1
}
