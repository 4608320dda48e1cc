//! Weighted families of connected subgraphs and their conflict structure.
//!
//! A *packing family* is a finite list of connected vertex sets (members) in
//! a host graph. Two members conflict when they share a vertex or when an
//! edge of the host joins them; a set of pairwise non-conflicting members is
//! an *independent packing*. This module holds the family/weight types, the
//! conflict graph, template-based family enumeration, and the exhaustive
//! reference solvers and verifiers that everything else is tested against.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::graph::Graph;
use crate::rational::Rational;
use crate::solver::PackingSolution;
use crate::Result;

/// Nonnegative rational weights indexed by `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap {
    weights: Vec<Rational>,
}

impl WeightMap {
    /// Wraps a weight vector, rejecting negative entries.
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        for (index, w) in weights.iter().enumerate() {
            if *w < Rational::zero() {
                return Err(Error::NegativeWeight { index });
            }
        }
        Ok(WeightMap { weights })
    }

    /// All-ones weights of the given length.
    pub fn unit(len: usize) -> Self {
        WeightMap { weights: vec![Rational::from_integer(1.into()); len] }
    }

    /// Number of weights.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Whether the map is empty.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Weight of item `i`.
    pub fn get(&self, i: usize) -> &Rational {
        &self.weights[i]
    }

    /// All weights, in index order.
    pub fn as_slice(&self) -> &[Rational] {
        &self.weights
    }

    /// Sum of weights over `items`.
    pub fn total(&self, items: &[usize]) -> Rational {
        let mut acc = Rational::zero();
        for &i in items {
            acc += &self.weights[i];
        }
        acc
    }

    /// Checks the map length against the universe it must cover.
    pub fn check_len(&self, expected: usize) -> Result<()> {
        if self.weights.len() != expected {
            return Err(Error::WeightCount { expected, actual: self.weights.len() });
        }
        Ok(())
    }

    /// Restricts to a sub-universe: weight `i` of the result is the weight
    /// of `items[i]`.
    pub fn restrict(&self, items: &[usize]) -> WeightMap {
        WeightMap { weights: items.iter().map(|&i| self.weights[i].clone()).collect() }
    }
}

/// A family of connected subgraphs of a host graph, stored as sorted vertex
/// sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphFamily {
    members: Vec<Vec<usize>>,
    h_max: usize,
}

impl SubgraphFamily {
    /// Builds a family over `host`, normalizing each member to a sorted,
    /// deduplicated vertex list.
    ///
    /// Members must be nonempty, in range, and induce connected subgraphs.
    pub fn new(host: &Graph, members: Vec<Vec<usize>>) -> Result<Self> {
        let n = host.n();
        let mut normalized = Vec::with_capacity(members.len());
        let mut h_max = 0;
        for (index, mut m) in members.into_iter().enumerate() {
            m.sort_unstable();
            m.dedup();
            if m.is_empty() {
                return Err(Error::EmptyMember { index });
            }
            if let Some(&last) = m.last() {
                if last >= n {
                    return Err(Error::VertexOutOfRange { vertex: last, n });
                }
            }
            if !host.is_connected_subset(&m) {
                return Err(Error::DisconnectedMember { index });
            }
            h_max = h_max.max(m.len());
            normalized.push(m);
        }
        Ok(SubgraphFamily { members: normalized, h_max })
    }

    /// The singleton family `{ {0}, {1}, ..., {n-1} }` on an `n`-vertex
    /// host; packing it is exactly maximum-weight independent set.
    pub fn singletons(n: usize) -> Self {
        SubgraphFamily { members: (0..n).map(|v| vec![v]).collect(), h_max: usize::from(n > 0) }
    }

    /// Members, each a sorted vertex list.
    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    /// Member `i`'s vertex list.
    pub fn member(&self, i: usize) -> &[usize] {
        &self.members[i]
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Whether the family has no members.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Largest member size (0 for an empty family).
    pub fn h_max(&self) -> usize {
        self.h_max
    }

    /// For each host vertex, the sorted list of members containing it.
    pub fn vertex_to_members(&self, n: usize) -> Vec<Vec<usize>> {
        let mut map = vec![Vec::new(); n];
        for (i, m) in self.members.iter().enumerate() {
            for &v in m {
                map[v].push(i);
            }
        }
        map
    }
}

/// Whether two sorted vertex lists share an element.
fn sorted_intersects(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Whether members `a` and `b` conflict in `host`: they share a vertex or an
/// edge of `host` joins them.
pub fn members_conflict(host: &Graph, a: &[usize], b: &[usize]) -> bool {
    if sorted_intersects(a, b) {
        return true;
    }
    for &u in a {
        for &v in b {
            if host.has_edge(u, v) {
                return true;
            }
        }
    }
    false
}

/// The conflict graph of a family: one vertex per member, an edge between
/// every conflicting pair. Independent sets here are exactly the independent
/// packings of the family.
pub fn conflict_graph(host: &Graph, fam: &SubgraphFamily) -> Graph {
    let m = fam.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            if members_conflict(host, fam.member(i), fam.member(j)) {
                edges.push((i, j));
            }
        }
    }
    Graph::build(m, &edges).expect("conflict edges are in range by construction")
}

/// Default cap on template size for [`enumerate_family`]; enumeration is
/// exponential in this parameter.
pub const TEMPLATE_SIZE_CAP: usize = 3;

/// Enumerates every connected vertex set of `g` of size at most `h` whose
/// induced subgraph is isomorphic to one of `templates`, as a family sorted
/// lexicographically.
///
/// `h` is capped at [`TEMPLATE_SIZE_CAP`]; use
/// [`enumerate_family_with_cap`] to override the cap at your own risk.
pub fn enumerate_family(g: &Graph, templates: &[Graph], h: usize) -> Result<SubgraphFamily> {
    enumerate_family_with_cap(g, templates, h, TEMPLATE_SIZE_CAP)
}

/// [`enumerate_family`] with an explicit cap on `h`.
pub fn enumerate_family_with_cap(
    g: &Graph,
    templates: &[Graph],
    h: usize,
    cap: usize,
) -> Result<SubgraphFamily> {
    if h == 0 {
        return Err(Error::InvalidParameter("template size bound h must be at least 1"));
    }
    if h > cap {
        return Err(Error::SizeGuard { what: "template size bound", actual: h, limit: cap });
    }
    for t in templates {
        if t.n() == 0 || t.n() > h {
            return Err(Error::InvalidParameter(
                "each template must have between 1 and h vertices",
            ));
        }
        let all: Vec<usize> = (0..t.n()).collect();
        if !t.is_connected_subset(&all) {
            return Err(Error::InvalidParameter("templates must be connected"));
        }
    }

    // Enumerate connected sets of size <= h: grow from each vertex, only
    // ever adding neighbors larger than the set's minimum so each set has a
    // canonical root; a visited-set removes the remaining duplicates.
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut members = Vec::new();
    for root in 0..g.n() {
        let mut stack = vec![vec![root]];
        while let Some(set) = stack.pop() {
            if !seen.insert(set.clone()) {
                continue;
            }
            if matches_any_template(g, &set, templates) {
                members.push(set.clone());
            }
            if set.len() == h {
                continue;
            }
            let mut extensions = BTreeSet::new();
            for &u in &set {
                for &v in g.neighbors(u) {
                    if v > root && set.binary_search(&v).is_err() {
                        extensions.insert(v);
                    }
                }
            }
            for v in extensions {
                let mut next = set.clone();
                let pos = next.binary_search(&v).unwrap_err();
                next.insert(pos, v);
                stack.push(next);
            }
        }
    }
    members.sort();
    SubgraphFamily::new(g, members)
}

/// Whether the subgraph of `g` induced on the sorted set `verts` is
/// isomorphic to one of the templates (checked by exhausting vertex
/// permutations; template sizes are tiny).
fn matches_any_template(g: &Graph, verts: &[usize], templates: &[Graph]) -> bool {
    templates.iter().any(|t| t.n() == verts.len() && induced_isomorphic(g, verts, t))
}

fn induced_isomorphic(g: &Graph, verts: &[usize], t: &Graph) -> bool {
    let k = verts.len();
    let mut perm: Vec<usize> = (0..k).collect();
    permute_check(g, verts, t, &mut perm, 0)
}

fn permute_check(g: &Graph, verts: &[usize], t: &Graph, perm: &mut Vec<usize>, at: usize) -> bool {
    let k = verts.len();
    if at == k {
        return (0..k).all(|i| {
            ((i + 1)..k).all(|j| g.has_edge(verts[i], verts[j]) == t.has_edge(perm[i], perm[j]))
        });
    }
    for swap in at..k {
        perm.swap(at, swap);
        if permute_check(g, verts, t, perm, at + 1) {
            perm.swap(at, swap);
            return true;
        }
        perm.swap(at, swap);
    }
    false
}

/// Checks that `chosen` (family indices) is an independent packing: indices
/// valid and pairwise distinct, members pairwise vertex-disjoint, and no
/// host edge joining two chosen members.
///
/// This verifier recomputes everything directly from the host graph and the
/// member lists; it shares no code with the dynamic-programming solver.
pub fn verify_packing(host: &Graph, fam: &SubgraphFamily, chosen: &[usize]) -> bool {
    for &i in chosen {
        if i >= fam.len() {
            return false;
        }
    }
    for (a, &i) in chosen.iter().enumerate() {
        for &j in chosen.iter().skip(a + 1) {
            if i == j || members_conflict(host, fam.member(i), fam.member(j)) {
                return false;
            }
        }
    }
    true
}

/// Checks that the chosen members are pairwise at distance at least `d` in
/// the host graph (vertex-set to vertex-set, unreachable counts as
/// infinite).
pub fn verify_distance_packing(
    host: &Graph,
    fam: &SubgraphFamily,
    chosen: &[usize],
    d: usize,
) -> bool {
    for &i in chosen {
        if i >= fam.len() {
            return false;
        }
    }
    for (a, &i) in chosen.iter().enumerate() {
        for &j in chosen.iter().skip(a + 1) {
            if i == j {
                return false;
            }
            match host.set_distance(fam.member(i), fam.member(j)) {
                Some(dist) if dist < d => return false,
                _ => {}
            }
        }
    }
    true
}

/// Guard on family size for [`brute_force_packing`]; the search is
/// exponential in the number of members.
pub const BRUTE_FORCE_CAP: usize = 25;

/// Exhaustive maximum-weight independent packing, used as the reference
/// oracle for the dynamic-programming solver.
///
/// Among all maximum-weight packings it returns the one whose sorted index
/// set is lexicographically smallest. Refuses families larger than
/// [`BRUTE_FORCE_CAP`] unless `override_guard` is set.
pub fn brute_force_packing(
    host: &Graph,
    fam: &SubgraphFamily,
    weights: &WeightMap,
    override_guard: bool,
) -> Result<PackingSolution> {
    weights.check_len(fam.len())?;
    if !override_guard && fam.len() > BRUTE_FORCE_CAP {
        return Err(Error::SizeGuard {
            what: "family size",
            actual: fam.len(),
            limit: BRUTE_FORCE_CAP,
        });
    }
    let m = fam.len();
    // Pairwise conflicts, computed directly from member lists.
    let mut conflict = vec![Vec::new(); m];
    for i in 0..m {
        for j in (i + 1)..m {
            if members_conflict(host, fam.member(i), fam.member(j)) {
                conflict[i].push(j);
                conflict[j].push(i);
            }
        }
    }
    // Suffix sums of weights bound what any extension can still add.
    let mut suffix = vec![Rational::zero(); m + 1];
    for i in (0..m).rev() {
        suffix[i] = &suffix[i + 1] + weights.get(i);
    }

    let mut best_weight = Rational::zero();
    let mut best_set: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut blocked = vec![0usize; m];

    // Depth-first over indices in ascending order. Pruning is strict
    // (`<`, not `<=`) so every maximum-weight packing is still reached and
    // the lexicographic tie-break below is exact.
    fn recurse(
        at: usize,
        m: usize,
        conflict: &[Vec<usize>],
        weights: &WeightMap,
        suffix: &[Rational],
        current: &mut Vec<usize>,
        current_weight: &Rational,
        blocked: &mut [usize],
        best_weight: &mut Rational,
        best_set: &mut Vec<usize>,
    ) {
        // Pure (weight desc, index-sequence asc) order; the empty set is
        // lexicographically smallest, and it is also the initial best, so
        // zero-weight ties resolve to the shortest prefix automatically.
        if *current_weight > *best_weight
            || (*current_weight == *best_weight && current.as_slice() < best_set.as_slice())
        {
            *best_weight = current_weight.clone();
            *best_set = current.clone();
        }
        if at == m {
            return;
        }
        if &(current_weight + &suffix[at]) < best_weight {
            return;
        }
        if blocked[at] == 0 {
            current.push(at);
            for &j in &conflict[at] {
                blocked[j] += 1;
            }
            let w = current_weight + weights.get(at);
            recurse(
                at + 1, m, conflict, weights, suffix, current, &w, blocked, best_weight, best_set,
            );
            for &j in &conflict[at] {
                blocked[j] -= 1;
            }
            current.pop();
        }
        recurse(
            at + 1,
            m,
            conflict,
            weights,
            suffix,
            current,
            current_weight,
            blocked,
            best_weight,
            best_set,
        );
    }

    recurse(
        0,
        m,
        &conflict,
        weights,
        &suffix,
        &mut current,
        &Rational::zero(),
        &mut blocked,
        &mut best_weight,
        &mut best_set,
    );

    let verified = verify_packing(host, fam, &best_set);
    Ok(PackingSolution { weight: best_weight, chosen: best_set, verified })
}

/// Exhaustive maximum-weight independent set on a graph's vertices, with
/// the same (weight, then lexicographic) tie-break as
/// [`brute_force_packing`].
///
/// Independent implementation (branch and bound on vertices), used to
/// cross-check the packing oracle and to score approximation ratios on
/// moderate instances. Exponential in the worst case; intended for
/// `n <= 40` or thereabouts.
pub fn exact_mwis(g: &Graph, weights: &WeightMap) -> Result<(Rational, Vec<usize>)> {
    weights.check_len(g.n())?;
    let n = g.n();
    let mut best_weight = Rational::zero();
    let mut best_set: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    // `alive` = vertices still selectable, in ascending order.
    let alive: Vec<usize> = (0..n).collect();

    fn bb(
        g: &Graph,
        weights: &WeightMap,
        alive: &[usize],
        current: &mut Vec<usize>,
        current_weight: &Rational,
        best_weight: &mut Rational,
        best_set: &mut Vec<usize>,
    ) {
        if *current_weight > *best_weight
            || (*current_weight == *best_weight && current.as_slice() < best_set.as_slice())
        {
            *best_weight = current_weight.clone();
            *best_set = current.clone();
        }
        if alive.is_empty() {
            return;
        }
        let mut bound = current_weight.clone();
        for &v in alive {
            bound += weights.get(v);
        }
        if bound < *best_weight {
            return;
        }
        // Branch on the first alive vertex to keep exploration order (and
        // hence the lexicographic tie-break) aligned with index order.
        let v = alive[0];
        let mut with_v: Vec<usize> = Vec::with_capacity(alive.len());
        for &u in &alive[1..] {
            if !g.has_edge(u, v) {
                with_v.push(u);
            }
        }
        current.push(v);
        let w = current_weight + weights.get(v);
        bb(g, weights, &with_v, current, &w, best_weight, best_set);
        current.pop();
        bb(g, weights, &alive[1..], current, current_weight, best_weight, best_set);
    }

    bb(g, weights, &alive, &mut current, &Rational::zero(), &mut best_weight, &mut best_set);
    Ok((best_weight, best_set))
}

/// Checks the power identity: the `(k + 2d)`-th power of `g` equals the
/// conflict graph, inside the `k`-th power of `g`, of the family of
/// radius-`d` balls of `g` (one per vertex).
///
/// Conflicts are recomputed directly (shared vertex, or an edge of `g^k`
/// joining the two balls), so this is an independent check of the
/// power-versus-ball correspondence used by the distance-packing pipeline.
pub fn verify_power_identity(g: &Graph, k: usize, d: usize) -> bool {
    let n = g.n();
    let balls: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let dist = g.bfs_distances(v);
            (0..n).filter(|&u| matches!(dist[u], Some(x) if x <= d)).collect()
        })
        .collect();
    let gk = g.power(k);
    let lhs = g.power(k + 2 * d);
    for u in 0..n {
        for v in (u + 1)..n {
            let conflict = members_conflict(&gk, &balls[u], &balls[v]);
            if conflict != lhs.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}
