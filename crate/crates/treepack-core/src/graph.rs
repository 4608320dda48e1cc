//! Simple undirected graphs over vertex ids `0..n`.
//!
//! Adjacency lists are kept sorted and deduplicated, so edge queries are
//! binary searches, iteration order is deterministic, and two graphs are
//! equal exactly when they have the same vertex count and edge set.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::Result;

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Duplicate edges (in either orientation) are merged. Self-loops and
    /// endpoints `>= n` are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Whether `{u, v}` is an edge. Self-queries return `false`.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Breadth-first distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        self.multi_source_distances(&[src])
    }

    /// Breadth-first distances from a set of sources (distance 0), `None`
    /// for unreachable vertices.
    pub fn multi_source_distances(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Minimum distance between two vertex sets (`Some(0)` when they share a
    /// vertex), or `None` when no path connects them.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> Option<usize> {
        if a.is_empty() || b.is_empty() {
            return None;
        }
        let dist = self.multi_source_distances(a);
        b.iter().filter_map(|&v| dist[v]).min()
    }

    /// The `p`-th power: same vertices, an edge between distinct `u, v`
    /// whenever their distance in `self` is at most `p`.
    ///
    /// `p == 0` yields the empty graph, `p == 1` a copy of `self`.
    pub fn power(&self, p: usize) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        if p == 0 {
            return Graph { adj };
        }
        for u in 0..n {
            let dist = self.bfs_distances(u);
            for (v, d) in dist.into_iter().enumerate() {
                if v != u {
                    if let Some(d) = d {
                        if d <= p {
                            adj[u].push(v);
                        }
                    }
                }
            }
        }
        // BFS enumeration already yields sorted lists, but normalize anyway.
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    /// Connected components, each sorted ascending, ordered by smallest
    /// member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::new();
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Induced subgraph on `verts` (must be sorted, deduplicated, in range).
    ///
    /// Returns the subgraph (vertex `i` is `verts[i]`) together with the
    /// map back to host ids, i.e. `verts` itself.
    pub fn induced(&self, verts: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        for w in verts.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidParameter(
                    "induced subgraph vertex list must be sorted and duplicate-free",
                ));
            }
        }
        if let Some(&last) = verts.last() {
            if last >= n {
                return Err(Error::VertexOutOfRange { vertex: last, n });
            }
        }
        let mut adj = vec![Vec::new(); verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Ok(j) = verts.binary_search(&v) {
                    adj[i].push(j);
                }
            }
        }
        Ok((Graph { adj }, verts.to_vec()))
    }

    /// Whether `verts` (sorted, deduplicated, in range) induces a connected
    /// subgraph. The empty set is not connected; a single vertex is.
    pub fn is_connected_subset(&self, verts: &[usize]) -> bool {
        if verts.is_empty() {
            return false;
        }
        let mut seen = vec![false; verts.len()];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(verts[0]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if let Ok(j) = verts.binary_search(&v) {
                    if !seen[j] {
                        seen[j] = true;
                        count += 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        count == verts.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn build_validates_and_dedups() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (1, 2), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(matches!(
            Graph::build(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(Graph::build(2, &[(1, 1)]), Err(Error::SelfLoop { vertex: 1 })));
    }

    #[test]
    fn bfs_and_set_distance() {
        let g = path(6);
        let d = g.bfs_distances(0);
        assert_eq!(d[5], Some(5));
        assert_eq!(g.set_distance(&[0, 1], &[4, 5]), Some(3));
        assert_eq!(g.set_distance(&[2], &[2]), Some(0));
        let h = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(h.set_distance(&[0], &[3]), None);
    }

    #[test]
    fn powers() {
        let g = path(5);
        let g2 = g.power(2);
        assert!(g2.has_edge(0, 2));
        assert!(!g2.has_edge(0, 3));
        assert_eq!(g.power(1), g);
        assert_eq!(g.power(0), Graph::empty(5));
        // Power of a path of length 4 with p >= 4 is complete.
        let g4 = g.power(4);
        assert_eq!(g4.edge_count(), 10);
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::build(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        let (sub, map) = g.induced(&[0, 2, 4, 5]).unwrap();
        assert_eq!(map, vec![0, 2, 4, 5]);
        assert_eq!(sub.edges(), vec![(2, 3)]);
        assert!(g.is_connected_subset(&[0, 1, 2]));
        assert!(!g.is_connected_subset(&[0, 2]));
        assert!(g.is_connected_subset(&[3]));
        assert!(!g.is_connected_subset(&[]));
    }
}
