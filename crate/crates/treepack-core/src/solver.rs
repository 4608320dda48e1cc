//! Exact maximum-weight independent packing via dynamic programming.
//!
//! The packing problem is reduced to maximum-weight independent set on the
//! family's conflict graph, using the input tree decomposition *lifted* to
//! conflict-graph vertices (a bag contains every member that touches it).
//! The table at each nice-form node is indexed by the independent subsets
//! of its bag, so the running time is governed by the decomposition's
//! independence number rather than its width — which is exactly the
//! quantity the constructions in this crate keep small.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::family::{conflict_graph, verify_packing, SubgraphFamily, WeightMap};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::treedec::nice::{make_nice, NiceStep};
use crate::treedec::{validate_decomposition, TreeDecomposition};
use crate::Result;

/// Largest bag the bitmask tables support.
pub const MAX_BAG: usize = 128;

/// A packing problem: host graph, family of connected subgraphs, and one
/// nonnegative rational weight per member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingInstance {
    /// Host graph.
    pub graph: Graph,
    /// Family whose members are to be packed.
    pub family: SubgraphFamily,
    /// Weight of each member.
    pub weights: WeightMap,
}

impl PackingInstance {
    /// Bundles a host graph, family, and member weights, checking that the
    /// weight count matches the family.
    pub fn new(graph: Graph, family: SubgraphFamily, weights: WeightMap) -> Result<Self> {
        weights.check_len(family.len())?;
        Ok(PackingInstance { graph, family, weights })
    }

    /// The vertex-weighted independent-set instance on `graph` seen as a
    /// packing instance over singletons.
    pub fn mwis(graph: Graph, weights: WeightMap) -> Result<Self> {
        weights.check_len(graph.n())?;
        let family = SubgraphFamily::singletons(graph.n());
        Ok(PackingInstance { graph, family, weights })
    }
}

/// Result of a solver run: total weight, chosen member indices (sorted),
/// and whether the independent re-verification passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingSolution {
    /// Total weight of the chosen members.
    pub weight: Rational,
    /// Chosen member indices, ascending.
    pub chosen: Vec<usize>,
    /// Whether a verifier that shares no code with the solver accepted the
    /// solution.
    pub verified: bool,
}

/// Lifts a tree decomposition of the host graph to the family's conflict
/// graph: node `t`'s lifted bag holds every member index whose vertex set
/// meets the original bag.
///
/// If the input decomposes the host graph, the lift decomposes the
/// conflict graph; its independence number is at most the host
/// decomposition's (members occupy disjoint vertex sets, and adjacent host
/// vertices make members conflict).
pub fn lift_decomposition(
    td: &TreeDecomposition,
    fam: &SubgraphFamily,
    n: usize,
) -> TreeDecomposition {
    let by_vertex = fam.vertex_to_members(n);
    let bags: Vec<Vec<usize>> = td
        .bags()
        .iter()
        .map(|bag| {
            let mut members: Vec<usize> = bag
                .iter()
                .filter(|&&v| v < n)
                .flat_map(|&v| by_vertex[v].iter().copied())
                .collect();
            members.sort_unstable();
            members.dedup();
            members
        })
        .collect();
    // Same tree, new bags.
    let edges = td.tree_edges();
    TreeDecomposition::new(bags, &edges).expect("lifting preserves the tree")
}

#[derive(Debug, Clone)]
struct Entry {
    weight: Rational,
    chosen: Vec<usize>,
}

/// `(weight desc, chosen lex asc)` — the solver's deterministic state-level
/// tie-break. Because only weights are compared across candidate
/// *solutions*, any two runs agree on the weight, and on the chosen set up
/// to this documented rule.
fn better(a: &Entry, b: &Entry) -> bool {
    a.weight > b.weight || (a.weight == b.weight && a.chosen < b.chosen)
}

fn insert_gap(mask: u128, p: u32) -> u128 {
    let low = if p == 0 { 0 } else { mask & ((1u128 << p) - 1) };
    let high = mask >> p;
    if high == 0 {
        low
    } else {
        low | (high << (p + 1))
    }
}

fn remove_bit(mask: u128, p: u32) -> u128 {
    let low = if p == 0 { 0 } else { mask & ((1u128 << p) - 1) };
    let high = if p + 1 >= 128 { 0 } else { mask >> (p + 1) };
    low | (high << p)
}

/// Maximum-weight independent set on `g` by dynamic programming over a
/// tree decomposition of `g`.
///
/// Table states are the independent subsets of each bag, encoded as bit
/// masks; bags above [`MAX_BAG`] vertices are refused.
fn dp_mwis(g: &Graph, weights: &WeightMap, td: &TreeDecomposition) -> Result<(Rational, Vec<usize>)> {
    if td.max_bag_size() > MAX_BAG {
        return Err(Error::BagTooLarge { size: td.max_bag_size(), limit: MAX_BAG });
    }
    let nice = make_nice(td);
    debug_assert!(nice.check_well_formed().is_ok());

    let mut tables: Vec<Option<BTreeMap<u128, Entry>>> = vec![None; nice.len()];
    for t in nice.post_order() {
        let node = &nice.nodes()[t];
        let bag = &node.bag;
        let table = match node.step {
            NiceStep::Leaf => {
                let mut table = BTreeMap::new();
                table.insert(0u128, Entry { weight: Rational::zero(), chosen: Vec::new() });
                table
            }
            NiceStep::Introduce(v) => {
                let child = tables[node.children[0]].take().expect("child processed");
                let p = bag.binary_search(&v).expect("introduced vertex is in the bag") as u32;
                // Adjacency of v inside the new bag.
                let mut vmask = 0u128;
                for (q, &u) in bag.iter().enumerate() {
                    if g.has_edge(u, v) {
                        vmask |= 1u128 << q;
                    }
                }
                let mut table = BTreeMap::new();
                for (mask, entry) in child {
                    let mapped = insert_gap(mask, p);
                    if mapped & vmask == 0 {
                        let mut chosen = entry.chosen.clone();
                        let pos = chosen.binary_search(&v).unwrap_err();
                        chosen.insert(pos, v);
                        let with_v = Entry { weight: &entry.weight + weights.get(v), chosen };
                        table.insert(mapped | (1u128 << p), with_v);
                    }
                    table.insert(mapped, entry);
                }
                table
            }
            NiceStep::Forget(v) => {
                let child_id = node.children[0];
                let p = {
                    let child_bag = &nice.nodes()[child_id].bag;
                    child_bag.binary_search(&v).expect("forgotten vertex is in the child bag")
                        as u32
                };
                let child = tables[child_id].take().expect("child processed");
                let mut table: BTreeMap<u128, Entry> = BTreeMap::new();
                for (mask, entry) in child {
                    let proj = remove_bit(mask, p);
                    match table.get_mut(&proj) {
                        Some(existing) => {
                            if better(&entry, existing) {
                                *existing = entry;
                            }
                        }
                        None => {
                            table.insert(proj, entry);
                        }
                    }
                }
                table
            }
            NiceStep::Join => {
                let left = tables[node.children[0]].take().expect("left child processed");
                let right = tables[node.children[1]].take().expect("right child processed");
                let mut table = BTreeMap::new();
                for (mask, le) in left {
                    let Some(re) = right.get(&mask) else { continue };
                    // Both branches contain the bag subset `mask`; its
                    // weight is counted twice.
                    let mut shared = Rational::zero();
                    for (q, &u) in bag.iter().enumerate() {
                        if mask >> q & 1 == 1 {
                            shared += weights.get(u);
                        }
                    }
                    let weight = &le.weight + &re.weight - shared;
                    let mut chosen = le.chosen.clone();
                    for &u in &re.chosen {
                        if let Err(pos) = chosen.binary_search(&u) {
                            chosen.insert(pos, u);
                        }
                    }
                    table.insert(mask, Entry { weight, chosen });
                }
                table
            }
        };
        #[cfg(debug_assertions)]
        for (mask, _) in table.iter() {
            // Every state must be an independent subset of the bag; this is
            // what keeps table sizes bounded by the independence number.
            for (q, &u) in bag.iter().enumerate() {
                if mask >> q & 1 == 1 {
                    for (r, &w) in bag.iter().enumerate().skip(q + 1) {
                        if mask >> r & 1 == 1 {
                            debug_assert!(!g.has_edge(u, w), "dependent state in table");
                        }
                    }
                }
            }
        }
        tables[t] = Some(table);
    }

    let root = tables[nice.root()].take().expect("root processed");
    let entry = root.get(&0u128).expect("root table always contains the empty state");
    Ok((entry.weight.clone(), entry.chosen.clone()))
}

/// Solves maximum-weight independent packing exactly.
///
/// `td` must be a valid tree decomposition of `inst.graph`; it is lifted to
/// the conflict graph and the table-based program runs over its nice form.
/// The returned solution is re-checked by [`verify_packing`], which shares
/// no code with the solver.
pub fn solve_packing(inst: &PackingInstance, td: &TreeDecomposition) -> Result<PackingSolution> {
    validate_decomposition(&inst.graph, td).into_result()?;
    let lifted = lift_decomposition(td, &inst.family, inst.graph.n());
    let cg = conflict_graph(&inst.graph, &inst.family);
    debug_assert!(validate_decomposition(&cg, &lifted).is_valid());
    let (weight, chosen) = dp_mwis(&cg, &inst.weights, &lifted)?;
    let verified = verify_packing(&inst.graph, &inst.family, &chosen);
    debug_assert!(verified);
    Ok(PackingSolution { weight, chosen, verified })
}

/// Solves maximum-weight independent set exactly over a tree decomposition
/// of `g` (the singleton-family special case, without the lifting step).
pub fn solve_mwis(g: &Graph, weights: &WeightMap, td: &TreeDecomposition) -> Result<PackingSolution> {
    weights.check_len(g.n())?;
    validate_decomposition(g, td).into_result()?;
    let (weight, chosen) = dp_mwis(g, weights, td)?;
    // Re-verify independence directly on the graph.
    let mut verified = true;
    for (a, &u) in chosen.iter().enumerate() {
        for &v in chosen.iter().skip(a + 1) {
            if g.has_edge(u, v) {
                verified = false;
            }
        }
    }
    debug_assert!(verified);
    Ok(PackingSolution { weight, chosen, verified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::brute_force_packing;
    use crate::rational::rat_int;

    fn path(n: usize) -> Graph {
        Graph::build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((0, n - 1));
        Graph::build(n, &e).unwrap()
    }

    fn path_bags(n: usize) -> TreeDecomposition {
        let bags: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        let edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
        TreeDecomposition::new(bags, &edges).unwrap()
    }

    #[test]
    fn lift_follows_member_touches() {
        let g = path(5);
        let fam = SubgraphFamily::new(&g, vec![vec![0, 1], vec![2], vec![3, 4]]).unwrap();
        let td = path_bags(5);
        let lifted = lift_decomposition(&td, &fam, g.n());
        assert_eq!(lifted.bags()[0], vec![0]);
        assert_eq!(lifted.bags()[1], vec![0, 1]);
        assert_eq!(lifted.bags()[2], vec![1, 2]);
        assert_eq!(lifted.bags()[3], vec![2]);
    }

    #[test]
    fn mwis_on_c5() {
        let g = cycle(5);
        let td = TreeDecomposition::new(
            vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4]],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        let sol = solve_mwis(&g, &WeightMap::unit(5), &td).unwrap();
        assert_eq!(sol.weight, rat_int(2));
        assert_eq!(sol.chosen, vec![0, 2]);
        assert!(sol.verified);
    }

    #[test]
    fn mwis_on_k33() {
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        let g = Graph::build(6, &edges).unwrap();
        let td = TreeDecomposition::single_bag((0..6).collect());
        let sol = solve_mwis(&g, &WeightMap::unit(6), &td).unwrap();
        assert_eq!(sol.weight, rat_int(3));
        assert_eq!(sol.chosen, vec![0, 1, 2]);
    }

    #[test]
    fn packing_induced_matching_on_p6() {
        let g = path(6);
        let members: Vec<Vec<usize>> = (0..5).map(|i| vec![i, i + 1]).collect();
        let fam = SubgraphFamily::new(&g, members).unwrap();
        let inst =
            PackingInstance::new(g.clone(), fam.clone(), WeightMap::unit(fam.len())).unwrap();
        let sol = solve_packing(&inst, &path_bags(6)).unwrap();
        assert_eq!(sol.weight, rat_int(2));
        assert!(sol.verified);
        let oracle = brute_force_packing(&g, &fam, &inst.weights, false).unwrap();
        assert_eq!(sol.weight, oracle.weight);
        assert_eq!(sol.chosen, oracle.chosen);
    }

    #[test]
    fn weighted_star_prefers_heavy_center() {
        let g = Graph::build(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let mut w = vec![rat_int(10)];
        w.extend((0..5).map(|_| rat_int(1)));
        let weights = WeightMap::new(w).unwrap();
        let bags: Vec<Vec<usize>> = (1..6).map(|v| vec![0, v]).collect();
        let td = TreeDecomposition::new(bags, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let sol = solve_mwis(&g, &weights, &td).unwrap();
        assert_eq!(sol.weight, rat_int(10));
        assert_eq!(sol.chosen, vec![0]);
    }

    #[test]
    fn zero_weight_ties_prefer_lex_least() {
        // Edgeless pair, weights (1, 0): {0} and {0,1} tie; [0] must win.
        let g = Graph::empty(2);
        let w = WeightMap::new(vec![rat_int(1), rat_int(0)]).unwrap();
        let td = TreeDecomposition::single_bag(vec![0, 1]);
        let sol = solve_mwis(&g, &w, &td).unwrap();
        assert_eq!(sol.weight, rat_int(1));
        assert_eq!(sol.chosen, vec![0]);
    }

    #[test]
    fn oversized_bags_are_refused() {
        let g = Graph::empty(130);
        let td = TreeDecomposition::single_bag((0..130).collect());
        let err = solve_mwis(&g, &WeightMap::unit(130), &td);
        assert!(matches!(err, Err(Error::BagTooLarge { size: 130, limit: 128 })));
    }

    #[test]
    fn invalid_decomposition_is_refused() {
        let g = path(4);
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], &[(0, 1)]).unwrap();
        assert!(matches!(
            solve_mwis(&g, &WeightMap::unit(4), &td),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn empty_family_yields_empty_solution() {
        let g = path(3);
        let fam = SubgraphFamily::new(&g, vec![]).unwrap();
        let inst = PackingInstance::new(g, fam, WeightMap::new(vec![]).unwrap()).unwrap();
        let sol = solve_packing(&inst, &path_bags(3)).unwrap();
        assert_eq!(sol.weight, rat_int(0));
        assert!(sol.chosen.is_empty());
        assert!(sol.verified);
    }
}
