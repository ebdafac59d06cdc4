//! Disjoint sets with path compression and union by size.

use crate::error::{Error, Result};
use crate::instance::NodeId;

/// Union-find over the dense ids `0..n`.
///
/// Every public `find` and `union` call bumps an operation counter, which the
/// k = 3 solver reports as its cost measure.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<NodeId>,
    size: Vec<u32>,
    roots: usize,
    ops: u64,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        assert!(n <= u32::MAX as usize, "too many elements for u32 ids");
        DisjointSets {
            parent: (0..n as NodeId).collect(),
            size: vec![1; n],
            roots: n,
            ops: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of disjoint sets currently held.
    pub fn set_count(&self) -> usize {
        self.roots
    }

    /// Total `find` + `union` calls made so far.
    pub fn op_count(&self) -> u64 {
        self.ops
    }

    /// Panics if `x` is out of range; see [`DisjointSets::try_find`].
    pub fn find(&mut self, x: NodeId) -> NodeId {
        self.ops += 1;
        self.root(x)
    }

    pub fn try_find(&mut self, x: NodeId) -> Result<NodeId> {
        self.check(x)?;
        Ok(self.find(x))
    }

    /// Merges the sets of `a` and `b` and returns the surviving root.
    pub fn union(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.ops += 1;
        let ra = self.root(a);
        let rb = self.root(b);
        if ra == rb {
            return ra;
        }
        let (big, small) = if self.size[ra as usize] >= self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        self.roots -= 1;
        big
    }

    pub fn try_union(&mut self, a: NodeId, b: NodeId) -> Result<NodeId> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.union(a, b))
    }

    /// Like `find` but does not count towards [`DisjointSets::op_count`].
    pub(crate) fn root(&mut self, x: NodeId) -> NodeId {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != r {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = r;
            cur = next;
        }
        r
    }

    fn check(&self, x: NodeId) -> Result<()> {
        if (x as usize) < self.parent.len() {
            Ok(())
        } else {
            Err(Error::UnknownNode {
                id: x as u64,
                n: self.parent.len(),
            })
        }
    }
}
