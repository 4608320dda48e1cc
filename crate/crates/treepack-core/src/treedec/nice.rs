//! Nice-form tree decompositions for dynamic programming.
//!
//! A nice decomposition is a rooted binary-branching refinement of a tree
//! decomposition in which every node is one of four shapes: a *leaf* with
//! an empty bag, an *introduce* node adding one vertex to its child's bag,
//! a *forget* node removing one, or a *join* of two children with
//! identical bags. The root always has an empty bag, so a table indexed by
//! bag subsets ends with exactly one state.

use alloc::vec;
use alloc::vec::Vec;

use super::TreeDecomposition;
use crate::error::Error;
use crate::Result;

/// The shape of one nice node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiceStep {
    /// No children; empty bag.
    Leaf,
    /// One child; bag = child's bag plus this vertex.
    Introduce(usize),
    /// One child; bag = child's bag minus this vertex.
    Forget(usize),
    /// Two children whose bags equal this node's bag.
    Join,
}

/// One node of a nice decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    /// Node shape.
    pub step: NiceStep,
    /// Sorted bag.
    pub bag: Vec<usize>,
    /// Child node ids (empty, one, or two entries).
    pub children: Vec<usize>,
}

/// A rooted nice-form decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceDecomposition {
    nodes: Vec<NiceNode>,
    root: usize,
}

impl NiceDecomposition {
    /// All nodes; children always have smaller ids than their parents.
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    /// The node with the empty root bag.
    pub fn root(&self) -> usize {
        self.root
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Whether there are no nodes (never true for constructed values).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node ids in an order where children precede parents.
    ///
    /// Construction already appends children before parents, so this is
    /// simply `0..len`, but callers should not rely on that detail.
    pub fn post_order(&self) -> Vec<usize> {
        (0..self.nodes.len()).collect()
    }

    /// Views the nice decomposition as a plain tree decomposition (same
    /// bags, parent-child tree edges).
    pub fn as_tree_decomposition(&self) -> TreeDecomposition {
        let bags: Vec<Vec<usize>> = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let mut edges = Vec::new();
        for (t, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                edges.push((c, t));
            }
        }
        TreeDecomposition::new(bags, &edges)
            .expect("nice decompositions are trees by construction")
    }

    /// Checks every structural invariant of nice form.
    pub fn check_well_formed(&self) -> Result<()> {
        let fail = |_why: &'static str| Err(Error::InvalidParameter("malformed nice decomposition"));
        if self.nodes.is_empty() || self.root >= self.nodes.len() {
            return fail("empty or bad root");
        }
        if !self.nodes[self.root].bag.is_empty() {
            return fail("root bag must be empty");
        }
        let mut is_child = vec![false; self.nodes.len()];
        for (t, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                if c >= t || is_child[c] {
                    return fail("children must precede parents and have one parent");
                }
                is_child[c] = true;
            }
            match node.step {
                NiceStep::Leaf => {
                    if !node.children.is_empty() || !node.bag.is_empty() {
                        return fail("leaf shape");
                    }
                }
                NiceStep::Introduce(v) => {
                    if node.children.len() != 1 {
                        return fail("introduce has one child");
                    }
                    let child = &self.nodes[node.children[0]];
                    let mut expect = child.bag.clone();
                    match expect.binary_search(&v) {
                        Ok(_) => return fail("introduced vertex already present"),
                        Err(pos) => expect.insert(pos, v),
                    }
                    if expect != node.bag {
                        return fail("introduce bag mismatch");
                    }
                }
                NiceStep::Forget(v) => {
                    if node.children.len() != 1 {
                        return fail("forget has one child");
                    }
                    let child = &self.nodes[node.children[0]];
                    let mut expect = child.bag.clone();
                    match expect.binary_search(&v) {
                        Ok(pos) => {
                            expect.remove(pos);
                        }
                        Err(_) => return fail("forgotten vertex absent"),
                    }
                    if expect != node.bag {
                        return fail("forget bag mismatch");
                    }
                }
                NiceStep::Join => {
                    if node.children.len() != 2 {
                        return fail("join has two children");
                    }
                    for &c in &node.children {
                        if self.nodes[c].bag != node.bag {
                            return fail("join bags must match");
                        }
                    }
                }
            }
        }
        // Exactly one node (the root) has no parent.
        for (t, flag) in is_child.iter().enumerate() {
            if !flag && t != self.root {
                return fail("disconnected node");
            }
        }
        Ok(())
    }
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, step: NiceStep, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { step, bag, children });
        self.nodes.len() - 1
    }

    /// A Leaf followed by introductions of every vertex in `bag`.
    fn leaf_chain(&mut self, bag: &[usize]) -> usize {
        let mut top = self.push(NiceStep::Leaf, Vec::new(), Vec::new());
        let mut cur: Vec<usize> = Vec::with_capacity(bag.len());
        for &v in bag {
            cur.push(v);
            top = self.push(NiceStep::Introduce(v), cur.clone(), vec![top]);
        }
        top
    }

    /// From a node whose bag is `from`, forget `from \ to` then introduce
    /// `to \ from`, ending at a node whose bag is `to`.
    fn adapt(&mut self, mut top: usize, from: &[usize], to: &[usize]) -> usize {
        let mut cur: Vec<usize> = from.to_vec();
        for &v in from {
            if to.binary_search(&v).is_err() {
                let pos = cur.binary_search(&v).expect("vertex still in running bag");
                cur.remove(pos);
                top = self.push(NiceStep::Forget(v), cur.clone(), vec![top]);
            }
        }
        for &v in to {
            if from.binary_search(&v).is_err() {
                let pos = cur.binary_search(&v).unwrap_err();
                cur.insert(pos, v);
                top = self.push(NiceStep::Introduce(v), cur.clone(), vec![top]);
            }
        }
        debug_assert_eq!(cur, to);
        top
    }
}

/// Rewrites a tree decomposition into nice form.
///
/// The output has the same bag family up to (a) duplicates and (b) extra
/// bags that are subsets of neighboring originals, so validity for any
/// graph and the independence number are preserved exactly. Node count is
/// linear in the total size of all bags.
pub fn make_nice(td: &TreeDecomposition) -> NiceDecomposition {
    let n_nodes = td.n_nodes();
    // Root the source tree at 0 and order children deterministically.
    let mut parent = vec![usize::MAX; n_nodes];
    let mut order = Vec::with_capacity(n_nodes);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n_nodes];
    let mut queue = alloc::collections::VecDeque::from([0usize]);
    let mut seen = vec![false; n_nodes];
    seen[0] = true;
    while let Some(t) = queue.pop_front() {
        order.push(t);
        for &u in td.tree_neighbors(t) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = t;
                children[t].push(u);
                queue.push_back(u);
            }
        }
    }

    let mut builder = Builder { nodes: Vec::new() };
    let mut piece = vec![usize::MAX; n_nodes];
    for &t in order.iter().rev() {
        let bag = td.bag(t);
        let kids = &children[t];
        let mut top = if kids.is_empty() {
            builder.leaf_chain(bag)
        } else {
            let first = builder.adapt(piece[kids[0]], td.bag(kids[0]), bag);
            let mut acc = first;
            for &c in &kids[1..] {
                let branch = builder.adapt(piece[c], td.bag(c), bag);
                acc = builder.push(NiceStep::Join, bag.to_vec(), vec![acc, branch]);
            }
            acc
        };
        if t == 0 {
            // Forget the root bag down to nothing.
            let mut cur = bag.to_vec();
            for &v in bag {
                let pos = cur.binary_search(&v).expect("vertex still in running bag");
                cur.remove(pos);
                top = builder.push(NiceStep::Forget(v), cur.clone(), vec![top]);
            }
        }
        piece[t] = top;
    }
    let root = piece[0];
    NiceDecomposition { nodes: builder.nodes, root }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::treedec::{validate_decomposition, independence_number};

    fn path(n: usize) -> Graph {
        Graph::build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn nice_form_of_a_path_decomposition() {
        let g = path(5);
        let bags: Vec<Vec<usize>> = (0..4).map(|i| vec![i, i + 1]).collect();
        let td = TreeDecomposition::new(bags, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let nice = make_nice(&td);
        nice.check_well_formed().unwrap();
        let back = nice.as_tree_decomposition();
        assert!(validate_decomposition(&g, &back).is_valid());
        assert_eq!(independence_number(&g, &back).unwrap(), 1);
    }

    #[test]
    fn nice_form_with_branching() {
        // Star tree: center bag {0,1}, three leaves {1,2}, {1,3}, {1,4}.
        let g = Graph::build(5, &[(0, 1), (1, 2), (1, 3), (1, 4)]).unwrap();
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![1, 3], vec![1, 4]],
            &[(0, 1), (0, 2), (0, 3)],
        )
        .unwrap();
        let nice = make_nice(&td);
        nice.check_well_formed().unwrap();
        let back = nice.as_tree_decomposition();
        assert!(validate_decomposition(&g, &back).is_valid());
        // Joins appear for the multi-child node.
        assert!(nice.nodes().iter().any(|n| n.step == NiceStep::Join));
        // Every source bag appears among the nice bags...
        for bag in td.bags() {
            assert!(nice.nodes().iter().any(|n| &n.bag == bag));
        }
        // ...and every nice bag is a subset of some source bag.
        for node in nice.nodes() {
            assert!(td
                .bags()
                .iter()
                .any(|bag| node.bag.iter().all(|v| bag.binary_search(v).is_ok())));
        }
    }

    #[test]
    fn nice_form_of_single_empty_bag() {
        let td = TreeDecomposition::single_bag(vec![]);
        let nice = make_nice(&td);
        nice.check_well_formed().unwrap();
        assert_eq!(nice.len(), 1);
    }
}
