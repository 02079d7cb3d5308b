//! Linear-time maximum `t`-frugal independent set on trees.
//!
//! Vertices are scanned from the deepest layer up and taken greedily whenever the set stays
//! `t`-frugal; on trees this greedy choice is optimal.

use crate::check::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Frugality;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    /// The root is its own parent.
    pub parent: Vec<usize>,
    /// Vertices by nonincreasing depth (reverse breadth-first order).
    pub order: Vec<usize>,
}

impl RootedTree {
    pub fn new(tree: &Graph, root: usize) -> Result<Self> {
        if !tree.is_tree() {
            return Err(Error::Precondition("input is not a tree".into()));
        }
        if root >= tree.n() {
            return Err(Error::VertexOutOfRange { vertex: root, n: tree.n() });
        }
        let mut parent = vec![usize::MAX; tree.n()];
        parent[root] = root;
        let mut bfs = Vec::with_capacity(tree.n());
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            bfs.push(v);
            for &w in tree.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        bfs.reverse();
        Ok(RootedTree { parent, order: bfs })
    }

    pub fn root(&self) -> usize {
        *self.order.last().expect("nonempty tree")
    }
}

/// The lowest-id vertex of degree at least two, if any.
pub fn default_root(tree: &Graph) -> Option<usize> {
    (0..tree.n()).find(|&v| tree.degree(v) >= 2)
}

pub fn alpha_t_frugal_tree(tree: &Graph, t: Frugality) -> Result<(usize, VertexSet)> {
    if !tree.is_tree() {
        return Err(Error::Precondition("input is not a tree".into()));
    }
    let Some(root) = default_root(tree) else {
        // One vertex, or a single edge: exactly one endpoint fits.
        return Ok((1, VertexSet::new(vec![0])));
    };
    let rooted = RootedTree::new(tree, root)?;
    let mut in_set = vec![false; tree.n()];
    let mut cnt = vec![0usize; tree.n()];
    let mut members = Vec::new();
    for &u in &rooted.order {
        let nb = tree.neighbors(u);
        if nb.iter().all(|&w| !in_set[w] && cnt[w] < t.get()) {
            in_set[u] = true;
            members.push(u);
            nb.iter().for_each(|&w| cnt[w] += 1);
        }
    }
    Ok((members.len(), VertexSet::new(members)))
}
