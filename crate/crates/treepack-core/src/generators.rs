//! Seeded random instances, graphs, weights, and decompositions.
//!
//! Everything here is deterministic in the seed: the random source is
//! ChaCha20 (`rand_chacha::ChaCha20Rng`) seeded via `seed_from_u64`, and the
//! PRNG identity is part of the contract so runs can be reproduced exactly.
//! Generated coordinates are rationals with denominator at most `2^16`.

use alloc::collections::BTreeSet;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::Result;
use crate::family::WeightMap;
use crate::geometry::{
    BoxD, ContactMode, Disk, GeometricInstance, GridPath, Point2, RectI,
};
use crate::graph::Graph;
use crate::rational::{rat, Rational};
use crate::treedec::{Layering, TreeDecomposition};

/// Denominator used when snapping random coordinates.
const SNAP: u64 = 1 << 16;

/// Uniform draw from `0..bound` by rejection, so every value is equally
/// likely. `bound` must be positive.
fn below(rng: &mut ChaCha20Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}

/// Uniform draw from the inclusive range `lo..=hi`.
fn range_u(rng: &mut ChaCha20Rng, lo: u64, hi: u64) -> u64 {
    debug_assert!(lo <= hi);
    lo + below(rng, hi - lo + 1)
}

/// Uniform draw from the inclusive range `lo..=hi` of signed values.
fn range_i(rng: &mut ChaCha20Rng, lo: i64, hi: i64) -> i64 {
    debug_assert!(lo <= hi);
    let span = (hi - lo) as u64;
    lo + below(rng, span + 1) as i64
}

/// Bernoulli draw with probability `num / den`.
fn chance(rng: &mut ChaCha20Rng, num: u64, den: u64) -> bool {
    below(rng, den) < num
}

/// A coordinate drawn uniformly from `[0, extent]`, snapped to denominator
/// `SNAP`.
fn snapped(rng: &mut ChaCha20Rng, extent: u64) -> Rational {
    let num = below(rng, extent * SNAP + 1);
    rat(num as i64, SNAP as i64)
}

/// A fraction drawn uniformly from `[0, 1]` with denominator `SNAP`.
fn unit_fraction(rng: &mut ChaCha20Rng) -> Rational {
    rat(below(rng, SNAP + 1) as i64, SNAP as i64)
}

/// Object kind and its size knobs for random generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenKind {
    /// Disks sharing one positive radius.
    UnitDisks {
        /// Common radius.
        radius: Rational,
    },
    /// Disks with radii drawn uniformly (snapped) from
    /// `[min_radius, max_radius]`.
    Disks {
        /// Smallest allowed radius (positive).
        min_radius: Rational,
        /// Largest allowed radius.
        max_radius: Rational,
    },
    /// Axis-parallel rectangles with integer corners, widths in
    /// `[min_width, max_width]`, and heights in `[1, max_height]`.
    Rectangles {
        /// Smallest allowed width (may be zero for degenerate columns).
        min_width: u64,
        /// Largest allowed width.
        max_width: u64,
        /// Largest allowed height (at least 1).
        max_height: u64,
    },
    /// Axis-parallel grid paths built as staircase walks.
    GridPaths {
        /// Contact rule for the resulting intersection graph.
        mode: ContactMode,
        /// Maximum number of direction changes per path.
        max_bends: u64,
        /// Horizontal part of every path stays at most this wide.
        horizontal_budget: u64,
        /// Force at least one unit edge into each path (no isolated points).
        require_edge: bool,
    },
    /// Axis-parallel boxes in `d` dimensions with sides in `(0, max_side]`.
    Boxes {
        /// Dimension (at least 1).
        d: usize,
        /// Largest allowed side length (at least 1).
        max_side: u64,
    },
}

/// A complete description of a random instance.
///
/// Equal specs generate identical instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    /// What to generate.
    pub kind: GenKind,
    /// Number of objects (at least 1).
    pub n: usize,
    /// Coordinates land in `[0, extent]`. With `n` fixed this is the density
    /// knob: smaller extents pack the same number of objects more tightly.
    pub extent: u64,
    /// PRNG seed.
    pub seed: u64,
}

/// Generates the instance described by `spec`.
pub fn generate(spec: &GenSpec) -> Result<GeometricInstance> {
    if spec.n == 0 {
        return Err(Error::InvalidParameter("generation needs at least one object"));
    }
    if spec.extent > (1 << 32) {
        return Err(Error::Overflow("generation extent"));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    let inst = match &spec.kind {
        GenKind::UnitDisks { radius } => {
            if *radius <= Rational::zero() {
                return Err(Error::InvalidParameter("disk radius must be positive"));
            }
            let centers = (0..spec.n)
                .map(|_| {
                    let x = snapped(&mut rng, spec.extent);
                    let y = snapped(&mut rng, spec.extent);
                    Point2::new(x, y)
                })
                .collect();
            GeometricInstance::UnitDisks { radius: radius.clone(), centers }
        }
        GenKind::Disks { min_radius, max_radius } => {
            if *min_radius <= Rational::zero() {
                return Err(Error::InvalidParameter("disk radius must be positive"));
            }
            if min_radius > max_radius {
                return Err(Error::InvalidParameter(
                    "min_radius must not exceed max_radius",
                ));
            }
            let span = max_radius - min_radius;
            let disks = (0..spec.n)
                .map(|_| {
                    let x = snapped(&mut rng, spec.extent);
                    let y = snapped(&mut rng, spec.extent);
                    let radius = min_radius + &span * unit_fraction(&mut rng);
                    Disk { center: Point2::new(x, y), radius }
                })
                .collect();
            GeometricInstance::Disks { disks }
        }
        GenKind::Rectangles { min_width, max_width, max_height } => {
            if min_width > max_width {
                return Err(Error::InvalidParameter(
                    "min_width must not exceed max_width",
                ));
            }
            if *max_height == 0 {
                return Err(Error::InvalidParameter("max_height must be at least 1"));
            }
            let extent = spec.extent as i64;
            let rects = (0..spec.n)
                .map(|_| {
                    let x1 = range_i(&mut rng, 0, extent);
                    let y1 = range_i(&mut rng, 0, extent);
                    let w = range_u(&mut rng, *min_width, *max_width) as i64;
                    let h = range_u(&mut rng, 1, *max_height) as i64;
                    RectI { x1, y1, x2: x1 + w, y2: y1 + h }
                })
                .collect();
            GeometricInstance::Rectangles { rects }
        }
        GenKind::GridPaths { mode, max_bends, horizontal_budget, require_edge } => {
            if *horizontal_budget == 0 && *max_bends > 0 {
                return Err(Error::InvalidParameter(
                    "bends need horizontal motion; raise the horizontal budget",
                ));
            }
            let paths = (0..spec.n)
                .map(|_| {
                    random_path(
                        &mut rng,
                        spec.extent,
                        *max_bends,
                        *horizontal_budget,
                        *require_edge,
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            GeometricInstance::GridPaths { mode: *mode, paths }
        }
        GenKind::Boxes { d, max_side } => {
            if *d == 0 {
                return Err(Error::InvalidParameter("box dimension must be at least 1"));
            }
            if *max_side == 0 {
                return Err(Error::InvalidParameter("max_side must be at least 1"));
            }
            let boxes = (0..spec.n)
                .map(|_| {
                    let center: Vec<Rational> =
                        (0..*d).map(|_| snapped(&mut rng, spec.extent)).collect();
                    let sides: Vec<Rational> = (0..*d)
                        .map(|_| {
                            // Sides stay positive: reject zero fractions.
                            loop {
                                let s = rat(*max_side as i64, 1) * unit_fraction(&mut rng);
                                if s > Rational::zero() {
                                    return s;
                                }
                            }
                        })
                        .collect();
                    BoxD { center, sides }
                })
                .collect();
            GeometricInstance::Boxes { d: *d, boxes }
        }
    };
    Ok(inst)
}

/// Builds one staircase walk: alternating horizontal / vertical moves whose
/// horizontal extremes never drift more than `budget` apart.
fn random_path(
    rng: &mut ChaCha20Rng,
    extent: u64,
    max_bends: u64,
    budget: u64,
    require_edge: bool,
) -> Result<GridPath> {
    let extent = extent as i64;
    let budget = budget as i64;
    let x0 = range_i(rng, 0, extent);
    let y0 = range_i(rng, 0, extent);
    let mut pts = vec![(x0, y0)];
    let (mut min_x, mut max_x) = (x0, x0);
    let mut horizontal = chance(rng, 1, 2);
    // `max_bends` direction changes allow up to `max_bends + 1` segments.
    for _ in 0..=max_bends {
        let (cx, cy) = *pts.last().expect("path never empty");
        if horizontal {
            // The new x must stay within `budget` of both extremes seen so
            // far; the window `[max_x - budget, min_x + budget]` is nonempty
            // and contains `cx` because `max_x - min_x <= budget` holds.
            let tx = range_i(rng, max_x - budget, min_x + budget);
            if tx != cx {
                pts.push((tx, cy));
                min_x = min_x.min(tx);
                max_x = max_x.max(tx);
            }
        } else {
            let ty = range_i(rng, 0, extent);
            if ty != cy {
                pts.push((cx, ty));
            }
        }
        horizontal = !horizontal;
    }
    if require_edge && pts.len() == 1 {
        // Degenerate walk: append one vertical unit step.
        pts.push((x0, y0 + 1));
    }
    GridPath::new(pts)
}

/// A random graph on `n` vertices where each pair is joined independently
/// with probability `density` (clamped to `[0, 1]`).
pub fn random_graph(n: usize, density: &Rational, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let (num, den) = density_as_parts(density);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if chance(&mut rng, num, den) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// Clamps a rational to `[0, 1]` and expresses it with denominator `SNAP`.
fn density_as_parts(density: &Rational) -> (u64, u64) {
    if density <= &Rational::zero() {
        return (0, SNAP);
    }
    if density >= &rat(1, 1) {
        return (SNAP, SNAP);
    }
    // floor(density * SNAP) keeps the probability within 1/SNAP of the
    // request, plenty for test generation.
    let scaled = density * rat(SNAP as i64, 1);
    let floor = crate::rational::floor_int(&scaled);
    let num = u64::try_from(floor).unwrap_or(0);
    (num, SNAP)
}

/// Random positive integer weights in `[1, max_weight]`, one per vertex.
pub fn random_weights(n: usize, max_weight: u64, seed: u64) -> Result<WeightMap> {
    if max_weight == 0 {
        return Err(Error::InvalidParameter("max_weight must be at least 1"));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let weights = (0..n)
        .map(|_| rat(range_u(&mut rng, 1, max_weight) as i64, 1))
        .collect();
    WeightMap::new(weights)
}

/// A valid (if wide) tree decomposition of `g` from a random elimination
/// ordering: the bag of `v` holds `v` plus its later neighbours after
/// fill-in, parented to the earliest-eliminated later neighbour.
pub fn random_tree_decomposition(g: &Graph, seed: u64) -> Result<TreeDecomposition> {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(vec![Vec::new()], &[]);
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    // Random permutation (Fisher–Yates): order[i] is eliminated i-th.
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = below(&mut rng, (i + 1) as u64) as usize;
        order.swap(i, j);
    }
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Fill-in: eliminating a vertex connects its later neighbours pairwise.
    let mut later: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (u, v) in g.edges() {
        if position[u] < position[v] {
            later[u].insert(v);
        } else {
            later[v].insert(u);
        }
    }
    let mut bags: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parent_of: Vec<Option<usize>> = vec![None; n];
    for &v in &order {
        let neighbours: Vec<usize> = later[v].iter().copied().collect();
        let mut bag = vec![v];
        bag.extend(neighbours.iter().copied());
        bag.sort_unstable();
        bags[position[v]] = bag;
        for (a_idx, &a) in neighbours.iter().enumerate() {
            for &b in &neighbours[a_idx + 1..] {
                if position[a] < position[b] {
                    later[a].insert(b);
                } else {
                    later[b].insert(a);
                }
            }
        }
        // Parent: the later neighbour eliminated first keeps every bag
        // intersection intact along the tree path.
        if let Some(&parent) = neighbours.iter().min_by_key(|&&u| position[u]) {
            parent_of[position[v]] = Some(position[parent]);
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut prev_root: Option<usize> = None;
    for t in 0..n {
        match parent_of[t] {
            Some(p) => edges.push((t, p)),
            None => {
                // Chain component roots together into a single tree.
                if let Some(r) = prev_root {
                    edges.push((t, r));
                }
                prev_root = Some(t);
            }
        }
    }
    TreeDecomposition::new(bags, &edges)
}

/// Breadth-first layering: every vertex gets its BFS depth from the first
/// root of its component, so each edge spans at most one level.
pub fn bfs_layering(g: &Graph) -> Result<Layering> {
    let n = g.n();
    let mut layer = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if layer[root] != usize::MAX {
            continue;
        }
        layer[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if layer[v] == usize::MAX {
                    layer[v] = layer[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(Layering::new(layer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{horizontal_part, intersection_graph, rescale_to_unit};
    use crate::treedec::validate_decomposition;

    fn disk_spec(seed: u64) -> GenSpec {
        GenSpec {
            kind: GenKind::UnitDisks { radius: rat(3, 2) },
            n: 12,
            extent: 10,
            seed,
        }
    }

    #[test]
    fn same_seed_same_instance() {
        let a = generate(&disk_spec(7)).unwrap();
        let b = generate(&disk_spec(7)).unwrap();
        assert_eq!(a, b);
        let c = generate(&disk_spec(8)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn disks_respect_radius_bounds() {
        let spec = GenSpec {
            kind: GenKind::Disks { min_radius: rat(1, 4), max_radius: rat(3, 1) },
            n: 30,
            extent: 20,
            seed: 11,
        };
        let inst = generate(&spec).unwrap();
        let GeometricInstance::Disks { disks } = &inst else {
            panic!("expected disks");
        };
        for d in disks {
            assert!(d.radius >= rat(1, 4) && d.radius <= rat(3, 1));
        }
        // Rescaling shrinks every object to size (diameter) at most 1.
        let (scaled, _) = rescale_to_unit(&inst).unwrap();
        let GeometricInstance::Disks { disks } = &scaled else {
            panic!("expected disks");
        };
        for d in disks {
            assert!(&d.radius * rat(2, 1) <= rat(1, 1));
        }
    }

    #[test]
    fn rectangles_respect_width_bounds() {
        let spec = GenSpec {
            kind: GenKind::Rectangles { min_width: 2, max_width: 5, max_height: 4 },
            n: 40,
            extent: 30,
            seed: 3,
        };
        let inst = generate(&spec).unwrap();
        let GeometricInstance::Rectangles { rects } = &inst else {
            panic!("expected rectangles");
        };
        for r in rects {
            assert!((2..=5).contains(&(r.x2 - r.x1)));
            assert!((1..=4).contains(&(r.y2 - r.y1)));
        }
    }

    #[test]
    fn grid_paths_respect_budget() {
        let spec = GenSpec {
            kind: GenKind::GridPaths {
                mode: ContactMode::Edge,
                max_bends: 6,
                horizontal_budget: 4,
                require_edge: true,
            },
            n: 25,
            extent: 15,
            seed: 5,
        };
        let inst = generate(&spec).unwrap();
        let GeometricInstance::GridPaths { paths, .. } = &inst else {
            panic!("expected grid paths");
        };
        for p in paths {
            let (lo, hi) = horizontal_part(p);
            assert!(hi - lo <= 4, "horizontal part {}..{} too wide", lo, hi);
            assert!(p.has_edge(), "require_edge was set");
        }
    }

    #[test]
    fn contradictory_path_spec_is_rejected() {
        let spec = GenSpec {
            kind: GenKind::GridPaths {
                mode: ContactMode::Vertex,
                max_bends: 3,
                horizontal_budget: 0,
                require_edge: false,
            },
            n: 4,
            extent: 9,
            seed: 0,
        };
        assert!(matches!(generate(&spec), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn boxes_have_positive_sides() {
        let spec = GenSpec {
            kind: GenKind::Boxes { d: 3, max_side: 2 },
            n: 15,
            extent: 8,
            seed: 21,
        };
        let inst = generate(&spec).unwrap();
        let GeometricInstance::Boxes { d, boxes } = &inst else {
            panic!("expected boxes");
        };
        assert_eq!(*d, 3);
        for b in boxes {
            assert_eq!(b.center.len(), 3);
            assert_eq!(b.sides.len(), 3);
            for s in &b.sides {
                assert!(*s > Rational::zero() && *s <= rat(2, 1));
            }
        }
    }

    #[test]
    fn generated_coordinates_are_snapped() {
        let inst = generate(&disk_spec(42)).unwrap();
        let GeometricInstance::UnitDisks { centers, .. } = &inst else {
            panic!("expected unit disks");
        };
        let snap = num_bigint::BigInt::from(SNAP);
        for c in centers {
            assert!((&snap % c.x.denom()).is_zero());
            assert!((&snap % c.y.denom()).is_zero());
        }
    }

    #[test]
    fn random_graph_extremes() {
        let empty = random_graph(8, &rat(0, 1), 1).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let full = random_graph(8, &rat(1, 1), 1).unwrap();
        assert_eq!(full.edge_count(), 8 * 7 / 2);
        let a = random_graph(10, &rat(1, 2), 9).unwrap();
        let b = random_graph(10, &rat(1, 2), 9).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn random_decomposition_is_valid() {
        for seed in 0..20 {
            let g = random_graph(12, &rat(1, 3), seed).unwrap();
            let td = random_tree_decomposition(&g, seed + 100).unwrap();
            let report = validate_decomposition(&g, &td);
            assert!(report.is_valid(), "seed {}: {:?}", seed, report);
        }
    }

    #[test]
    fn bfs_layering_is_valid() {
        for seed in 0..20 {
            let g = random_graph(14, &rat(1, 4), seed).unwrap();
            let lay = bfs_layering(&g).unwrap();
            assert!(lay.validate_for(&g).is_ok(), "seed {}", seed);
        }
    }

    #[test]
    fn weights_are_positive_and_bounded() {
        let w = random_weights(20, 5, 77).unwrap();
        assert_eq!(w.len(), 20);
        for i in 0..20 {
            let x = w.get(i);
            assert!(*x >= rat(1, 1) && *x <= rat(5, 1));
        }
        assert!(random_weights(3, 0, 0).is_err());
    }

    #[test]
    fn paths_make_sensible_graphs() {
        let spec = GenSpec {
            kind: GenKind::GridPaths {
                mode: ContactMode::Vertex,
                max_bends: 4,
                horizontal_budget: 3,
                require_edge: true,
            },
            n: 10,
            extent: 6,
            seed: 13,
        };
        let inst = generate(&spec).unwrap();
        let g = intersection_graph(&inst);
        assert_eq!(g.n(), 10);
    }
}
