//! Approximation drivers built on the exact solver: best-of-cover solving,
//! even-distance packing via graph powers, and direct shifting schemes for
//! geometric instances.
//!
//! All three schemes share one shape: enumerate restrictions of the input
//! (cover elements, or column slabs to delete), solve each restriction
//! *exactly* with the dynamic program, and return the best restricted
//! solution. The guarantee comes from an averaging argument: an optimal
//! solution loses at most an `eps` (or `h/r`) fraction of its weight on the
//! best restriction.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::constructions::{
    cover_from_layering, narrow_strip_decomposition, power_decomposition, GeneralCover,
};
use crate::error::Error;
use crate::family::{verify_distance_packing, verify_packing, SubgraphFamily, WeightMap};
use crate::geometry::{
    horizontal_part, intersection_graph, GeometricInstance, GridPath, Point2,
};
use crate::graph::Graph;
use crate::rational::{ceil_i64, ceil_u64, floor_i64, rat, rat_u, Rational};
use crate::solver::{solve_mwis, solve_packing, PackingInstance, PackingSolution};
use crate::treedec::{Layering, TreeDecomposition};
use crate::Result;

/// Weight achieved by the exact solve on one restriction (cover element or
/// shift) of an approximation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementOutcome {
    /// Cover-element index or shift value.
    pub index: usize,
    /// Optimal weight of the restricted instance.
    pub weight: Rational,
}

/// Result of an approximation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    /// The best restricted solution; `chosen` indexes the input family (or
    /// the input vertices, for the geometric shifting scheme).
    pub solution: PackingSolution,
    /// Proven approximation factor: the returned weight is at least
    /// `guarantee` times the unrestricted optimum.
    pub guarantee: Rational,
    /// Index of the restriction (cover element or shift) that won; ties go
    /// to the smallest index.
    pub winner: usize,
    /// Exact weight of every restriction, in enumeration order.
    pub per_element: Vec<ElementOutcome>,
}

impl ApproxResult {
    /// The best weight recorded in the per-restriction log; always equal to
    /// the returned solution's weight.
    pub fn best_logged_weight(&self) -> Option<&Rational> {
        self.per_element.iter().map(|e| &e.weight).max()
    }
}

/// Solves the packing problem exactly on every cover element (restricted to
/// the members that lie fully inside the element) and returns the best
/// solution, a `(1 - h/r)`-approximation for a `(1 - 1/r)`-general cover and
/// members of at most `h` vertices.
///
/// The averaging argument needs every member to lie inside at least
/// `(1 - h/r)|C|` elements; that follows from per-vertex coverage by a union
/// bound, but it is asserted at runtime rather than assumed.
pub fn ptas_over_cover(
    inst: &PackingInstance,
    cover: &GeneralCover,
    r: u64,
) -> Result<ApproxResult> {
    if r < 2 {
        return Err(Error::InvalidParameter("approximation parameter must be at least 2"));
    }
    if cover.elements.is_empty() {
        return Err(Error::InvalidParameter("cover has no elements"));
    }
    cover.validate(&inst.graph)?;
    if cover.beta < rat(r as i64 - 1, r as i64) {
        return Err(Error::InvalidParameter(
            "cover coverage fraction is too small for the requested guarantee",
        ));
    }
    let h = inst.family.h_max();
    if h as u64 >= r {
        return Err(Error::InvalidParameter(
            "approximation parameter must exceed the largest member size",
        ));
    }
    let guarantee = rat(r as i64 - h as i64, r as i64);

    // Members fully inside each element, and how many elements contain each
    // member entirely.
    let n = inst.graph.n();
    let total = cover.elements.len();
    let mut inside: Vec<Vec<usize>> = Vec::with_capacity(total);
    let mut containment = vec![0usize; inst.family.len()];
    for el in &cover.elements {
        let mut in_el = vec![false; n];
        for &v in &el.vertices {
            in_el[v] = true;
        }
        let mut ids = Vec::new();
        for (m, member) in inst.family.members().iter().enumerate() {
            if member.iter().all(|&v| in_el[v]) {
                ids.push(m);
                containment[m] += 1;
            }
        }
        inside.push(ids);
    }
    let required = &guarantee * rat_u(total as u64);
    for &count in &containment {
        if rat_u(count as u64) < required {
            return Err(Error::InvalidParameter(
                "a family member lies inside too few cover elements for the claimed guarantee",
            ));
        }
    }

    let mut per_element = Vec::with_capacity(total);
    let mut best: Option<(usize, PackingSolution)> = None;
    for (idx, el) in cover.elements.iter().enumerate() {
        let member_ids = &inside[idx];
        let (sub, back) = inst.graph.induced(&el.vertices)?;
        let to_local: BTreeMap<usize, usize> =
            back.iter().enumerate().map(|(local, &host)| (host, local)).collect();
        let local_members: Vec<Vec<usize>> = member_ids
            .iter()
            .map(|&m| inst.family.member(m).iter().map(|&v| to_local[&v]).collect())
            .collect();
        let family = SubgraphFamily::new(&sub, local_members)?;
        let weights = inst.weights.restrict(member_ids);
        let local_td = el.decomposition.map_bags(|v| to_local.get(&v).copied());
        let sub_inst = PackingInstance::new(sub, family, weights)?;
        let sol = solve_packing(&sub_inst, &local_td)?;
        let chosen: Vec<usize> = sol.chosen.iter().map(|&k| member_ids[k]).collect();
        per_element.push(ElementOutcome { index: idx, weight: sol.weight.clone() });
        let candidate =
            PackingSolution { weight: sol.weight, chosen, verified: sol.verified };
        if best.as_ref().map_or(true, |(_, b)| candidate.weight > b.weight) {
            best = Some((idx, candidate));
        }
    }
    let (winner, mut solution) = best.expect("cover has at least one element");
    solution.verified =
        solution.verified && verify_packing(&inst.graph, &inst.family, &solution.chosen);
    Ok(ApproxResult { solution, guarantee, winner, per_element })
}

/// Approximates maximum-weight distance-`d` packing for even `d ≥ 2`: a
/// distance-`d` packing in `G` is an ordinary packing in the power graph
/// `G^(d-1)`, whose layered decomposition comes from inflating the input
/// decomposition; a layer-based cover then drives [`ptas_over_cover`].
///
/// The guarantee is `1 - h/r`. Odd `d ≥ 3` is refused: no such scheme can
/// exist for odd distances unless P = NP. The returned solution is
/// re-verified with breadth-first distances on the *original* graph, not
/// the power graph.
pub fn ptas_distance_d(
    inst: &PackingInstance,
    td: &TreeDecomposition,
    lay: &Layering,
    r: u64,
    d: usize,
) -> Result<ApproxResult> {
    if d < 2 {
        return Err(Error::InvalidParameter("packing distance must be at least 2"));
    }
    if d % 2 == 1 {
        return Err(Error::HardDistance { d });
    }
    let power_parts: (Graph, TreeDecomposition, Layering);
    let (graph, power_td, power_lay): (&Graph, &TreeDecomposition, &Layering) = if d == 2 {
        (&inst.graph, td, lay)
    } else {
        power_parts = power_decomposition(&inst.graph, td, lay, (d - 2) / 2)?;
        (&power_parts.0, &power_parts.1, &power_parts.2)
    };
    let cover = cover_from_layering(graph, power_td, power_lay, r as usize)?;
    let family = SubgraphFamily::new(graph, inst.family.members().to_vec())?;
    let power_inst = PackingInstance::new(graph.clone(), family, inst.weights.clone())?;
    let mut result = ptas_over_cover(&power_inst, &cover, r)?;
    result.solution.verified = result.solution.verified
        && verify_distance_packing(&inst.graph, &inst.family, &result.solution.chosen, d);
    Ok(result)
}

/// Column slabs whose deletion frees an instance into narrow components:
/// for each object, the sorted nonnegative column indices whose slab
/// contains it, plus the instance translated so all relevant columns are
/// nonnegative, and the per-window shift multiplier `k`.
struct SlabStructure {
    translated: GeometricInstance,
    slabs: Vec<Vec<i64>>,
    k: u64,
}

fn slabs_for_paths(
    mode: crate::geometry::ContactMode,
    paths: &[GridPath],
    eps: &Rational,
    c: u64,
) -> Result<SlabStructure> {
    let mut min_x = i64::MAX;
    for p in paths {
        let (lo, hi) = horizontal_part(p);
        if hi - lo > c as i64 {
            return Err(Error::InvalidParameter(
                "a path's horizontal part exceeds the size constant",
            ));
        }
        min_x = min_x.min(lo);
    }
    let translated: Vec<GridPath> = paths
        .iter()
        .map(|p| GridPath::new(p.points().iter().map(|&(x, y)| (x - min_x, y)).collect()))
        .collect::<Result<_>>()?;
    // An object belongs to slab i when it contains a horizontal unit edge
    // from column i to column i + 1.
    let slabs = translated
        .iter()
        .map(|p| {
            let mut cols: Vec<i64> = p
                .unit_edges()
                .iter()
                .filter(|(_, horizontal)| *horizontal)
                .map(|((x, _), _)| *x)
                .collect();
            cols.sort_unstable();
            cols.dedup();
            cols
        })
        .collect();
    let k = ceil_u64(&(Rational::one() / eps), "shift multiplier")?;
    Ok(SlabStructure {
        translated: GeometricInstance::GridPaths { mode, paths: translated },
        slabs,
        k,
    })
}

fn slabs_for_rects(
    rects: &[crate::geometry::RectI],
    eps: &Rational,
    c: u64,
) -> Result<SlabStructure> {
    let mut min_x = i64::MAX;
    for r in rects {
        if r.x2 - r.x1 > c as i64 {
            return Err(Error::InvalidParameter(
                "a rectangle's width exceeds the size constant",
            ));
        }
        min_x = min_x.min(r.x1);
    }
    let translated: Vec<crate::geometry::RectI> = rects
        .iter()
        .map(|r| crate::geometry::RectI {
            x1: r.x1 - min_x,
            y1: r.y1,
            x2: r.x2 - min_x,
            y2: r.y2,
        })
        .collect();
    // A rectangle belongs to slab i when it spans the columns i and i + 1,
    // i.e. x1 ≤ i ≤ x2 - 1. Width-0 rectangles belong to no slab.
    let slabs = translated.iter().map(|r| (r.x1..r.x2).collect()).collect();
    let k = ceil_u64(&(Rational::one() / eps), "shift multiplier")?;
    Ok(SlabStructure {
        translated: GeometricInstance::Rectangles { rects: translated },
        slabs,
        k,
    })
}

fn slabs_for_disks(
    radius: &Rational,
    centers: &[Point2],
    eps: &Rational,
    c: u64,
) -> Result<SlabStructure> {
    if *radius != rat_u(c) {
        return Err(Error::InvalidParameter(
            "disk radius must equal the integer size constant",
        ));
    }
    let mut min_x: Option<Rational> = None;
    for p in centers {
        if min_x.as_ref().map_or(true, |m| p.x < *m) {
            min_x = Some(p.x.clone());
        }
    }
    let min_x = min_x.ok_or(Error::EmptyInstance)?;
    // Leftmost disk extent at column 0.
    let delta = &min_x - radius;
    let translated: Vec<Point2> = centers
        .iter()
        .map(|p| Point2::new(&p.x - &delta, p.y.clone()))
        .collect();
    // A disk belongs to slab i when it meets the open strip (i, i + 1):
    // x - c < i + 1 and i < x + c.
    let mut slabs = Vec::with_capacity(translated.len());
    for p in &translated {
        let lo = floor_i64(&(&p.x - radius - Rational::one()), "slab index")? + 1;
        let hi = ceil_i64(&(&p.x + radius), "slab index")? - 1;
        slabs.push((lo..=hi).collect());
    }
    // Each disk meets at most 2c + 1 slabs, so k·c windows of these many
    // columns keep the deleted fraction at eps.
    let k = ceil_u64(&(rat_u(2 * c + 1) / (rat_u(c) * eps)), "shift multiplier")?;
    Ok(SlabStructure {
        translated: GeometricInstance::UnitDisks { radius: radius.clone(), centers: translated },
        slabs,
        k,
    })
}

/// The component restricted to `host` indices, translated so its leftmost
/// column (or disk extent) sits at 0.
fn component_instance(translated: &GeometricInstance, host: &[usize]) -> Result<GeometricInstance> {
    match translated {
        GeometricInstance::GridPaths { mode, paths } => {
            let dx = host
                .iter()
                .map(|&v| horizontal_part(&paths[v]).0)
                .min()
                .ok_or(Error::EmptyInstance)?;
            let moved: Vec<GridPath> = host
                .iter()
                .map(|&v| {
                    GridPath::new(
                        paths[v].points().iter().map(|&(x, y)| (x - dx, y)).collect(),
                    )
                })
                .collect::<Result<_>>()?;
            Ok(GeometricInstance::GridPaths { mode: *mode, paths: moved })
        }
        GeometricInstance::Rectangles { rects } => {
            let dx = host.iter().map(|&v| rects[v].x1).min().ok_or(Error::EmptyInstance)?;
            let moved = host
                .iter()
                .map(|&v| crate::geometry::RectI {
                    x1: rects[v].x1 - dx,
                    y1: rects[v].y1,
                    x2: rects[v].x2 - dx,
                    y2: rects[v].y2,
                })
                .collect();
            Ok(GeometricInstance::Rectangles { rects: moved })
        }
        GeometricInstance::UnitDisks { radius, centers } => {
            let mut min_x: Option<Rational> = None;
            for &v in host {
                if min_x.as_ref().map_or(true, |m| centers[v].x < *m) {
                    min_x = Some(centers[v].x.clone());
                }
            }
            let min_x = min_x.ok_or(Error::EmptyInstance)?;
            let delta = &min_x - radius;
            let moved = host
                .iter()
                .map(|&v| Point2::new(&centers[v].x - &delta, centers[v].y.clone()))
                .collect();
            Ok(GeometricInstance::UnitDisks { radius: radius.clone(), centers: moved })
        }
        other => Err(Error::UnsupportedKind {
            op: "shifting scheme",
            kind: other.kind_name(),
        }),
    }
}

/// Weighted independent set on a geometric instance by shifted slab
/// deletion: for each shift `s` in `{0, …, kc-1}` delete every object lying
/// in a slab congruent to `s` modulo `kc`, split the rest into connected
/// components (each fits in a window of `kc` columns), solve each component
/// exactly over its narrow-strip decomposition, and return the best shift.
///
/// Supported kinds and their size constants `c`: grid paths with horizontal
/// part at most `c`, rectangles of width at most `c`, and disks of radius
/// exactly the integer `c ≥ 1`. The window multiplier is `k = ⌈1/eps⌉` for
/// paths and rectangles; disks meet up to `2c + 1` slabs (not `2c`), so they
/// use the slightly larger `k = ⌈(2c+1)/(c·eps)⌉` to honestly reach the same
/// bound. Guarantee: `1 - eps` of the optimum.
pub fn shifting_ptas(
    inst: &GeometricInstance,
    weights: &WeightMap,
    eps: &Rational,
    c: u64,
) -> Result<ApproxResult> {
    if eps <= &Rational::zero() || eps >= &Rational::one() {
        return Err(Error::InvalidParameter(
            "approximation tolerance must lie strictly between 0 and 1",
        ));
    }
    if c == 0 {
        return Err(Error::InvalidParameter("size constant must be at least 1"));
    }
    if inst.is_empty() {
        return Err(Error::EmptyInstance);
    }
    inst.validate()?;
    weights.check_len(inst.len())?;

    let structure = match inst {
        GeometricInstance::GridPaths { mode, paths } => slabs_for_paths(*mode, paths, eps, c)?,
        GeometricInstance::Rectangles { rects } => slabs_for_rects(rects, eps, c)?,
        GeometricInstance::UnitDisks { radius, centers } => {
            slabs_for_disks(radius, centers, eps, c)?
        }
        other => {
            return Err(Error::UnsupportedKind {
                op: "shifting scheme",
                kind: other.kind_name(),
            })
        }
    };
    let kc = structure.k.checked_mul(c).ok_or(Error::Overflow("shift window width"))?;
    let g = intersection_graph(&structure.translated);
    let n = g.n();

    // Distinct slab residues per object; an object survives shift s when
    // none of its residues equals s.
    let residues: Vec<Vec<u64>> = structure
        .slabs
        .iter()
        .map(|cols| {
            let mut rs: Vec<u64> = cols.iter().map(|&i| (i as u64) % kc).collect();
            rs.sort_unstable();
            rs.dedup();
            rs
        })
        .collect();

    let mut per_element = Vec::with_capacity(kc as usize);
    let mut best: Option<(usize, PackingSolution)> = None;
    for s in 0..kc {
        let survivors: Vec<usize> =
            (0..n).filter(|&v| residues[v].binary_search(&s).is_err()).collect();
        let (sub, back) = g.induced(&survivors)?;
        let mut weight = Rational::zero();
        let mut chosen: Vec<usize> = Vec::new();
        for mut comp in sub.connected_components() {
            comp.sort_unstable();
            let host: Vec<usize> = comp.iter().map(|&l| back[l]).collect();
            let comp_inst = component_instance(&structure.translated, &host)?;
            let td = narrow_strip_decomposition(&comp_inst, kc)?;
            let comp_graph = intersection_graph(&comp_inst);
            let comp_weights =
                WeightMap::new(host.iter().map(|&v| weights.get(v).clone()).collect())?;
            let sol = solve_mwis(&comp_graph, &comp_weights, &td)?;
            if !sol.verified {
                return Err(Error::InvalidParameter(
                    "component solve failed its independent verification",
                ));
            }
            weight += &sol.weight;
            chosen.extend(sol.chosen.iter().map(|&l| host[l]));
        }
        chosen.sort_unstable();
        per_element.push(ElementOutcome { index: s as usize, weight: weight.clone() });
        let candidate = PackingSolution { weight, chosen, verified: true };
        if best.as_ref().map_or(true, |(_, b)| candidate.weight > b.weight) {
            best = Some((s as usize, candidate));
        }
    }

    let (winner, mut solution) = best.expect("at least one shift");
    // Re-verify independence and the weight on the full instance.
    let mut ok = true;
    for (a, &u) in solution.chosen.iter().enumerate() {
        for &v in solution.chosen.iter().skip(a + 1) {
            if g.has_edge(u, v) {
                ok = false;
            }
        }
    }
    let mut total = Rational::zero();
    for &v in &solution.chosen {
        total += weights.get(v);
    }
    solution.verified = ok && total == solution.weight;
    Ok(ApproxResult {
        solution,
        guarantee: Rational::one() - eps,
        winner,
        per_element,
    })
}
