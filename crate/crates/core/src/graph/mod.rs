//! Simple undirected graphs on dense vertex ids `0..n`.

pub(crate) mod generators;
mod io;
mod products;
pub(crate) mod structure;

pub use generators::*;
pub use io::{parse_edge_list, parse_graph6, read_graph6_lines, write_edge_list, write_graph6};
pub use products::{product, ProductKind};
pub use structure::{pendant_stats, structural_flags, BlockDecomposition, PendantStats, StructuralFlags};

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// Immutable simple graph with sorted, symmetric adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list; duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw(adj))
    }

    /// Caller guarantees symmetry and no loops; lists are sorted and deduplicated here.
    pub(crate) fn from_raw(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        debug_assert!(adj.iter().enumerate().all(|(v, l)| !l.contains(&v)));
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj }
    }

    /// Vertices at distance one or two become adjacent.
    pub fn square(&self) -> Graph {
        let adj = (0..self.n())
            .map(|v| {
                let mut l: Vec<usize> = self.adj[v]
                    .iter()
                    .flat_map(|&w| std::iter::once(w).chain(self.adj[w].iter().copied()))
                    .filter(|&u| u != v)
                    .collect();
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        Graph { adj }
    }

    /// Vertices sharing a common neighbor become adjacent; original edges are dropped
    /// unless they also close a common neighbor. Proper colorings of this graph are
    /// exactly the injective colorings of `self`.
    pub fn common_neighbor_graph(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for list in &self.adj {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        Self::from_raw(adj)
    }

    /// Same vertex set with the listed edges removed; pairs that are not edges are ignored.
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in edges {
            if u < self.n() && v < self.n() {
                adj[u].retain(|&w| w != v);
                adj[v].retain(|&w| w != u);
            }
        }
        Graph { adj }
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect())
            .collect();
        Self::from_raw(adj)
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter("relabelling is not a permutation".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
        }
        Ok(Self::from_raw(adj))
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + off).collect()));
        Graph { adj }
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([src]);
        dist[src] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|(u, v)| self.adj[u].iter().filter(|&&w| w > v && self.has_edge(v, w)).count())
            .sum()
    }

    /// A proper 2-coloring when the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<usize>> {
        let mut side = vec![usize::MAX; self.n()];
        for s in 0..self.n() {
            if side[s] != usize::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_paths_and_cliques() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.m(), 2);
        assert_eq!(p3.neighbors(1), &[0, 2]);
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, complete(3));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(Graph::from_edges(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 })));
        assert!(matches!(Graph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement(), Graph::edgeless(4));
        let c5 = cycle(5).unwrap();
        let cc = c5.complement();
        assert_eq!(cc.regular_degree(), Some(2));
        assert!(cc.is_connected());
        assert_eq!(cc.m(), 5);
    }

    #[test]
    fn square_examples() {
        let p4 = path(4);
        let expect = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)]).unwrap();
        assert_eq!(p4.square(), expect);
        assert_eq!(cycle(5).unwrap().square(), complete(5));
        assert_eq!(Graph::edgeless(3).square(), Graph::edgeless(3));
    }

    #[test]
    fn common_neighbor_graph_of_c4_is_two_diagonals() {
        let g = cycle(4).unwrap().common_neighbor_graph();
        assert_eq!(g, Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap());
    }

    #[test]
    fn components_and_trees() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(path(6).is_tree());
        assert!(!cycle(6).unwrap().is_tree());
        assert!(Graph::edgeless(1).is_tree());
    }

    #[test]
    fn triangles_and_bipartition() {
        assert_eq!(complete(4).triangle_count(), 4);
        assert!(cycle(6).unwrap().bipartition().is_some());
        assert!(cycle(5).unwrap().bipartition().is_none());
    }
}
