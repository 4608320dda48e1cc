//! Tree decompositions measured by bag independence number.
//!
//! A tree decomposition of a graph `G` assigns a *bag* of vertices to every
//! node of a tree such that (T1) every vertex appears in some bag, (T2)
//! every edge has both endpoints together in some bag, and (T3) the nodes
//! containing any fixed vertex form a connected subtree. Instead of the
//! classical width (largest bag size minus one), the algorithms in this
//! crate care about the *independence number* of a decomposition: the
//! largest independent set of `G` inside a single bag. Layered variants
//! additionally slice each bag by a layering of `G` whose edges never skip
//! a layer.

pub mod nice;

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// A tree decomposition: a tree whose nodes carry bags of graph vertices.
///
/// The tree structure is validated at construction; whether the bags
/// actually decompose a particular graph is checked separately by
/// [`validate_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    adj: Vec<Vec<usize>>,
    bags: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    /// Builds a decomposition from bags (one per node) and tree edges.
    ///
    /// Bags are normalized to sorted, deduplicated lists. The edges must
    /// form a tree on `bags.len()` nodes: connected and acyclic. A single
    /// node with no edges is the smallest valid tree.
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: &[(usize, usize)]) -> Result<Self> {
        let n_nodes = bags.len();
        if n_nodes == 0 {
            return Err(Error::NotATree);
        }
        if tree_edges.len() != n_nodes - 1 {
            return Err(Error::NotATree);
        }
        let mut adj = vec![Vec::new(); n_nodes];
        for &(a, b) in tree_edges {
            if a >= n_nodes {
                return Err(Error::NodeOutOfRange { node: a, n_nodes });
            }
            if b >= n_nodes {
                return Err(Error::NodeOutOfRange { node: b, n_nodes });
            }
            if a == b {
                return Err(Error::NotATree);
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        // Edge count is n-1, so connectivity implies tree-ness.
        let mut seen = vec![false; n_nodes];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(t) = queue.pop_front() {
            for &u in &adj[t] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        if reached != n_nodes {
            return Err(Error::NotATree);
        }
        let mut bags = bags;
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(TreeDecomposition { adj, bags })
    }

    /// The one-node decomposition whose single bag is `bag`.
    pub fn single_bag(bag: Vec<usize>) -> Self {
        let mut bag = bag;
        bag.sort_unstable();
        bag.dedup();
        TreeDecomposition { adj: vec![Vec::new()], bags: vec![bag] }
    }

    /// Number of tree nodes.
    pub fn n_nodes(&self) -> usize {
        self.bags.len()
    }

    /// The sorted bag at node `t`.
    pub fn bag(&self, t: usize) -> &[usize] {
        &self.bags[t]
    }

    /// All bags, indexed by node.
    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    /// Tree neighbors of node `t`.
    pub fn tree_neighbors(&self, t: usize) -> &[usize] {
        &self.adj[t]
    }

    /// Tree edges as `(a, b)` with `a < b`, lexicographic.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, list) in self.adj.iter().enumerate() {
            for &b in list {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Size of the largest bag.
    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Classical width: largest bag size minus one (`-1` when every bag is
    /// empty).
    pub fn width(&self) -> i64 {
        self.max_bag_size() as i64 - 1
    }

    /// For each vertex `0..n`, the sorted list of nodes whose bag contains
    /// it.
    pub fn vertex_occurrences(&self, n: usize) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::new(); n];
        for (t, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v < n {
                    occ[v].push(t);
                }
            }
        }
        occ
    }

    /// The same tree with every bag intersected with the sorted set `keep`.
    pub fn restrict_bags(&self, keep: &[usize]) -> TreeDecomposition {
        let bags = self
            .bags
            .iter()
            .map(|bag| bag.iter().copied().filter(|v| keep.binary_search(v).is_ok()).collect())
            .collect();
        TreeDecomposition { adj: self.adj.clone(), bags }
    }

    /// The same tree with every bag rewritten through `rename`; vertices
    /// mapped to `None` are dropped.
    pub fn map_bags(&self, rename: impl Fn(usize) -> Option<usize>) -> TreeDecomposition {
        let bags = self
            .bags
            .iter()
            .map(|bag| {
                let mut out: Vec<usize> = bag.iter().filter_map(|&v| rename(v)).collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        TreeDecomposition { adj: self.adj.clone(), bags }
    }

    /// Repeatedly removes leaves (and isolated chains) whose bags are
    /// empty, keeping at least one node, and reindexes the survivors.
    pub fn prune_empty_leaves(&self) -> TreeDecomposition {
        let n = self.n_nodes();
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        let mut alive = n;
        let mut queue: VecDeque<usize> =
            (0..n).filter(|&t| self.bags[t].is_empty() && degree[t] <= 1).collect();
        while let Some(t) = queue.pop_front() {
            if alive == 1 || removed[t] || !self.bags[t].is_empty() || degree[t] > 1 {
                continue;
            }
            removed[t] = true;
            alive -= 1;
            for &u in &self.adj[t] {
                if !removed[u] {
                    degree[u] -= 1;
                    if self.bags[u].is_empty() && degree[u] <= 1 {
                        queue.push_back(u);
                    }
                }
            }
        }
        let mut new_id = vec![usize::MAX; n];
        let mut bags = Vec::with_capacity(alive);
        for t in 0..n {
            if !removed[t] {
                new_id[t] = bags.len();
                bags.push(self.bags[t].clone());
            }
        }
        let mut edges = Vec::new();
        for (a, b) in self.tree_edges() {
            if !removed[a] && !removed[b] {
                edges.push((new_id[a], new_id[b]));
            }
        }
        TreeDecomposition::new(bags, &edges)
            .expect("pruning leaves of a tree leaves a smaller tree")
    }
}

/// Violations found when checking a decomposition against a graph.
///
/// An empty report means the decomposition is valid. Each list carries
/// concrete witnesses rather than a bare flag so callers can print exactly
/// what is wrong.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Bag entries that are not vertices of the graph (or, for subset
    /// validation, not in the allowed subset): `(node, vertex)`.
    pub foreign: Vec<(usize, usize)>,
    /// Vertices appearing in no bag.
    pub missing_vertices: Vec<usize>,
    /// Edges with no bag containing both endpoints.
    pub uncovered_edges: Vec<(usize, usize)>,
    /// Vertices whose set of occurrences is not connected in the tree.
    pub broken_traces: Vec<usize>,
}

impl ValidationReport {
    /// Whether no violations were recorded.
    pub fn is_valid(&self) -> bool {
        self.foreign.is_empty()
            && self.missing_vertices.is_empty()
            && self.uncovered_edges.is_empty()
            && self.broken_traces.is_empty()
    }

    /// Converts an invalid report into an error (valid reports yield `Ok`).
    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDecomposition(Box::new(self)))
        }
    }
}

impl core::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let mut first = true;
        let mut sep = |f: &mut core::fmt::Formatter<'_>| -> core::fmt::Result {
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            Ok(())
        };
        if !self.foreign.is_empty() {
            sep(f)?;
            write!(f, "{} foreign bag entries (first: node {} vertex {})",
                self.foreign.len(), self.foreign[0].0, self.foreign[0].1)?;
        }
        if !self.missing_vertices.is_empty() {
            sep(f)?;
            write!(f, "{} uncovered vertices (first: {})",
                self.missing_vertices.len(), self.missing_vertices[0])?;
        }
        if !self.uncovered_edges.is_empty() {
            sep(f)?;
            write!(f, "{} uncovered edges (first: ({}, {}))",
                self.uncovered_edges.len(), self.uncovered_edges[0].0, self.uncovered_edges[0].1)?;
        }
        if !self.broken_traces.is_empty() {
            sep(f)?;
            write!(f, "{} broken traces (first: vertex {})",
                self.broken_traces.len(), self.broken_traces[0])?;
        }
        Ok(())
    }
}

/// Checks the three tree-decomposition properties of `td` against `g` and
/// reports every violation with a witness.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> ValidationReport {
    let all: Vec<usize> = (0..g.n()).collect();
    validate_on_subset(g, &all, td)
}

/// Checks that `td` decomposes the subgraph of `g` induced on the sorted
/// vertex set `subset`: bags may only use `subset` vertices, all of
/// `subset` must be covered, every induced edge must be covered, and traces
/// must be connected.
pub fn validate_on_subset(g: &Graph, subset: &[usize], td: &TreeDecomposition) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = g.n();

    for (t, bag) in td.bags().iter().enumerate() {
        for &v in bag {
            if v >= n || subset.binary_search(&v).is_err() {
                report.foreign.push((t, v));
            }
        }
    }

    let occ = td.vertex_occurrences(n);
    for &v in subset {
        if occ[v].is_empty() {
            report.missing_vertices.push(v);
        }
    }

    for &u in subset {
        for &v in g.neighbors(u) {
            if v > u && subset.binary_search(&v).is_ok() {
                let covered = occ[u].iter().any(|t| td.bag(*t).binary_search(&v).is_ok());
                if !covered {
                    report.uncovered_edges.push((u, v));
                }
            }
        }
    }

    for &v in subset {
        let nodes = &occ[v];
        if nodes.len() <= 1 {
            continue;
        }
        // BFS inside the trace.
        let mut seen = vec![false; nodes.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([nodes[0]]);
        let mut reached = 1;
        while let Some(t) = queue.pop_front() {
            for &u in td.tree_neighbors(t) {
                if let Ok(k) = nodes.binary_search(&u) {
                    if !seen[k] {
                        seen[k] = true;
                        reached += 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        if reached != nodes.len() {
            report.broken_traces.push(v);
        }
    }

    report
}

/// Maximum independent set size of the subgraph of `g` induced on the
/// sorted set `verts`.
///
/// Branch and bound with component splitting; exact, intended for the bag
/// sizes produced by the constructions in this crate.
pub(crate) fn mis_size_subset(g: &Graph, verts: &[usize]) -> usize {
    // Work on the induced subgraph to keep index handling local.
    let (sub, _) = g.induced(verts).expect("bags are sorted, deduplicated, in range");
    mis_size_graph(&sub, &(0..sub.n()).collect::<Vec<_>>())
}

fn mis_size_graph(g: &Graph, cand: &[usize]) -> usize {
    if cand.is_empty() {
        return 0;
    }
    // Split into connected components of the induced candidate set.
    let comps = components_within(g, cand);
    if comps.len() > 1 {
        return comps.iter().map(|c| mis_size_graph(g, c)).sum();
    }
    let comp = &comps[0];
    // Degrees within the component.
    let deg = |v: usize| g.neighbors(v).iter().filter(|u| comp.binary_search(u).is_ok()).count();
    let (&pivot, max_deg) = comp
        .iter()
        .map(|v| (v, deg(*v)))
        .max_by_key(|&(v, d)| (d, core::cmp::Reverse(*v)))
        .expect("component is nonempty");
    if max_deg <= 2 {
        // Paths and cycles: alpha is |P| - edges for a path expressed as
        // ceil(k/2), and floor(k/2) for a cycle; count edges to tell them
        // apart.
        let k = comp.len();
        let edges: usize =
            comp.iter().map(|&v| deg(v)).sum::<usize>() / 2;
        return if edges == k { k / 2 } else { k.div_ceil(2) };
    }
    // Exclude the pivot...
    let without: Vec<usize> = comp.iter().copied().filter(|&v| v != pivot).collect();
    let best_without = mis_size_graph(g, &without);
    // ...or include it, dropping its closed neighborhood.
    let closed: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&v| v != pivot && !g.has_edge(v, pivot))
        .collect();
    let best_with = 1 + mis_size_graph(g, &closed);
    best_without.max(best_with)
}

fn components_within(g: &Graph, cand: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; cand.len()];
    let mut comps = Vec::new();
    for start in 0..cand.len() {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([cand[start]]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &v in g.neighbors(u) {
                if let Ok(k) = cand.binary_search(&v) {
                    if !seen[k] {
                        seen[k] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// The independence number of a decomposition: the largest independent set
/// of `g` contained in a single bag.
///
/// Validates `td` against `g` first and refuses invalid decompositions.
pub fn independence_number(g: &Graph, td: &TreeDecomposition) -> Result<usize> {
    validate_decomposition(g, td).into_result()?;
    Ok(td.bags().iter().map(|bag| mis_size_subset(g, bag)).max().unwrap_or(0))
}

/// A layering of a graph: an arbitrary layer index per vertex. Valid when
/// every edge stays within one layer or crosses between consecutive ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    layer_of: Vec<usize>,
}

impl Layering {
    /// Wraps a layer assignment (`layer_of[v]` is the layer of vertex `v`).
    pub fn new(layer_of: Vec<usize>) -> Self {
        Layering { layer_of }
    }

    /// Layer of vertex `v`.
    pub fn layer_of(&self, v: usize) -> usize {
        self.layer_of[v]
    }

    /// Number of vertices the layering covers.
    pub fn len(&self) -> usize {
        self.layer_of.len()
    }

    /// Whether the layering covers no vertices.
    pub fn is_empty(&self) -> bool {
        self.layer_of.is_empty()
    }

    /// The raw assignment.
    pub fn as_slice(&self) -> &[usize] {
        &self.layer_of
    }

    /// Distinct layer indices in use, ascending.
    pub fn used_layers(&self) -> Vec<usize> {
        let mut layers = self.layer_of.clone();
        layers.sort_unstable();
        layers.dedup();
        layers
    }

    /// Checks the layering against a graph: it must assign a layer to every
    /// vertex, and no edge may span layers differing by more than one.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        if self.layer_of.len() != g.n() {
            return Err(Error::WeightCount { expected: g.n(), actual: self.layer_of.len() });
        }
        for (u, v) in g.edges() {
            let (lu, lv) = (self.layer_of[u], self.layer_of[v]);
            if lu.abs_diff(lv) > 1 {
                return Err(Error::InvalidLayering { edge: (u, v), layers: (lu, lv) });
            }
        }
        Ok(())
    }
}

/// The layered independence number: the largest independent set of `g`
/// inside the intersection of a single bag with a single layer.
pub fn layered_independence_number(
    g: &Graph,
    td: &TreeDecomposition,
    layering: &Layering,
) -> Result<usize> {
    validate_decomposition(g, td).into_result()?;
    layering.validate_for(g)?;
    let mut best = 0;
    for bag in td.bags() {
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &v in bag {
            cells.entry(layering.layer_of(v)).or_default().push(v);
        }
        for cell in cells.values() {
            best = best.max(mis_size_subset(g, cell));
        }
    }
    Ok(best)
}

/// Joins decompositions of pairwise disjoint vertex sets into one: a fresh
/// node with an empty bag (node 0 of the result) is connected to node 0 of
/// every part.
///
/// Parts are re-indexed in order: part `i`'s node `t` becomes
/// `1 + offset_i + t`. The vertex sets are only used to check disjointness.
pub fn merge_components(parts: &[(Vec<usize>, TreeDecomposition)]) -> Result<TreeDecomposition> {
    let mut seen = BTreeMap::new();
    for (verts, _) in parts {
        for &v in verts {
            if seen.insert(v, ()).is_some() {
                return Err(Error::OverlappingParts { vertex: v });
            }
        }
    }
    let mut bags: Vec<Vec<usize>> = vec![Vec::new()];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (_, td) in parts {
        let offset = bags.len();
        edges.push((0, offset));
        for bag in td.bags() {
            bags.push(bag.clone());
        }
        for (a, b) in td.tree_edges() {
            edges.push((offset + a, offset + b));
        }
    }
    TreeDecomposition::new(bags, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((0, n - 1));
        Graph::build(n, &e).unwrap()
    }

    fn path_decomposition(n: usize) -> TreeDecomposition {
        // Bags {i, i+1} along a path tree.
        let bags: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        let edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
        TreeDecomposition::new(bags, &edges).unwrap()
    }

    #[test]
    fn construction_validates_tree_shape() {
        assert!(matches!(TreeDecomposition::new(vec![], &[]), Err(Error::NotATree)));
        assert!(matches!(
            TreeDecomposition::new(vec![vec![0], vec![1]], &[]),
            Err(Error::NotATree)
        ));
        assert!(matches!(
            TreeDecomposition::new(vec![vec![0], vec![1], vec![2]], &[(0, 1), (0, 1)]),
            Err(Error::NotATree)
        ));
        assert!(TreeDecomposition::new(vec![vec![]], &[]).is_ok());
    }

    #[test]
    fn validation_reports_witnesses() {
        let g = path(4);
        let td = path_decomposition(4);
        assert!(validate_decomposition(&g, &td).is_valid());

        // Remove vertex 3's coverage: bags {0,1}, {1,2} only.
        let bad = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], &[(0, 1)]).unwrap();
        let report = validate_decomposition(&g, &bad);
        assert_eq!(report.missing_vertices, vec![3]);
        assert_eq!(report.uncovered_edges, vec![(2, 3)]);

        // Broken trace: vertex 0 at both ends of a three-node path tree.
        let broken = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2, 3], vec![0, 3]],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        let report = validate_decomposition(&g, &broken);
        assert_eq!(report.broken_traces, vec![0]);

        // Foreign vertex.
        let foreign =
            TreeDecomposition::new(vec![vec![0, 1, 9], vec![1, 2], vec![2, 3]], &[(0, 1), (1, 2)])
                .unwrap();
        let report = validate_decomposition(&g, &foreign);
        assert_eq!(report.foreign, vec![(0, 9)]);
    }

    #[test]
    fn independence_numbers() {
        let g = path(4);
        let td = path_decomposition(4);
        // Each bag is an edge: independence number 1.
        assert_eq!(independence_number(&g, &td).unwrap(), 1);
        // One big bag: alpha(P4) = 2.
        let single = TreeDecomposition::single_bag(vec![0, 1, 2, 3]);
        assert_eq!(independence_number(&g, &single).unwrap(), 2);
        // C5 in one bag: alpha = 2; C6: alpha = 3.
        assert_eq!(
            independence_number(&cycle(5), &TreeDecomposition::single_bag((0..5).collect()))
                .unwrap(),
            2
        );
        assert_eq!(
            independence_number(&cycle(6), &TreeDecomposition::single_bag((0..6).collect()))
                .unwrap(),
            3
        );
        // Invalid decomposition is refused.
        let bad = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], &[(0, 1)]).unwrap();
        assert!(matches!(independence_number(&g, &bad), Err(Error::InvalidDecomposition(_))));
    }

    #[test]
    fn branch_and_bound_handles_dense_blocks() {
        // Two K4s joined by an edge, all in one bag.
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                edges.push((i, j));
                edges.push((4 + i, 4 + j));
            }
        }
        edges.push((0, 4));
        let g = Graph::build(8, &edges).unwrap();
        let td = TreeDecomposition::single_bag((0..8).collect());
        assert_eq!(independence_number(&g, &td).unwrap(), 2);
    }

    #[test]
    fn layering_rules() {
        let g = path(4);
        let ok = Layering::new(vec![0, 0, 1, 1]);
        assert!(ok.validate_for(&g).is_ok());
        let bad = Layering::new(vec![0, 2, 3, 4]);
        assert!(matches!(
            bad.validate_for(&g),
            Err(Error::InvalidLayering { edge: (0, 1), layers: (0, 2) })
        ));
        // Layered independence: single bag of P4, layers {0,1}|{2,3}: each
        // cell is an edge, so the layered number is 1 while the plain
        // number is 2.
        let td = TreeDecomposition::single_bag(vec![0, 1, 2, 3]);
        assert_eq!(layered_independence_number(&g, &td, &ok).unwrap(), 1);
        assert_eq!(independence_number(&g, &td).unwrap(), 2);
    }

    #[test]
    fn merge_and_prune() {
        let td1 = TreeDecomposition::single_bag(vec![0, 1]);
        let td2 = TreeDecomposition::single_bag(vec![2]);
        let merged = merge_components(&[(vec![0, 1], td1.clone()), (vec![2], td2)]).unwrap();
        assert_eq!(merged.n_nodes(), 3);
        assert_eq!(merged.bag(0), &[] as &[usize]);
        let g = Graph::build(3, &[(0, 1)]).unwrap();
        assert!(validate_decomposition(&g, &merged).is_valid());

        let overlapping = merge_components(&[
            (vec![0, 1], td1.clone()),
            (vec![1], TreeDecomposition::single_bag(vec![1])),
        ]);
        assert!(matches!(overlapping, Err(Error::OverlappingParts { vertex: 1 })));

        // Pruning removes empty leaves but keeps interior empties.
        let td = TreeDecomposition::new(
            vec![vec![], vec![0], vec![], vec![1]],
            &[(0, 1), (1, 2), (2, 3)],
        )
        .unwrap();
        let pruned = td.prune_empty_leaves();
        // Node 0 (empty leaf) goes; node 2 is interior and stays.
        assert_eq!(pruned.n_nodes(), 3);
        assert_eq!(pruned.bags().iter().filter(|b| b.is_empty()).count(), 1);

        let all_empty = TreeDecomposition::new(vec![vec![], vec![]], &[(0, 1)]).unwrap();
        assert_eq!(all_empty.prune_empty_leaves().n_nodes(), 1);
    }

    #[test]
    fn restriction_keeps_validity() {
        let g = path(6);
        let td = path_decomposition(6);
        let keep = vec![0, 1, 4, 5];
        let restricted = td.restrict_bags(&keep);
        let report = validate_on_subset(&g, &keep, &restricted);
        assert!(report.is_valid(), "{report}");
    }
}
