//! General covers for disks and boxes via shifted hierarchical grids.
//!
//! After rescaling so the largest object has size 1, every object gets a
//! *rank*: the number of times `1/r` divides past its size. For each shift
//! vector `y` a nested family of axis-aligned grids is laid down — one grid
//! per rank, coarser ranks using exponentially coarser grids — and the
//! element `C(y)` keeps exactly the objects that avoid every grid hyperplane
//! of their own rank. Each kept object then sits strictly inside one cell of
//! its rank's grid, and because coarser grids' hyperplanes are a subset of
//! finer grids' (see [`RankedGridSystem`]), cells of different ranks are
//! ordered by containment. The occupied cells, linked by containment and
//! glued under an artificial empty-bag root, form a tree decomposition of
//! the subgraph induced on `C(y)` whose bags have bounded independence
//! number.
//!
//! Enumerating all `(r/2)^d` shifts yields the cover: on each axis an object
//! meets the hyperplanes of its rank for at most one shift value, so every
//! vertex lies in at least `(r/2 - 1)^d` elements, which is at least
//! `(1 - 1/r0)` of them by the choice of `r`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::constructions::{CoverElement, GeneralCover};
use crate::error::Error;
use crate::geometry::fat::{to_fat_objects, FatObject};
use crate::geometry::{rescale_to_unit, FatnessProfile, GeometricInstance};
use crate::rational::{ceil_int, floor_i64, floor_int, pow_u32, rat, rat_int, rat_u, Rational};
use crate::treedec::TreeDecomposition;
use crate::Result;

/// The even grid ratio `r` used by [`fat_cover`] for the parameter `r0`:
/// `r = 2·M` where `M` is the least integer with `((M-1)/M)^d ≥ 1 - 1/r0`.
///
/// Shifting one axis by one of `M` values spoils at most one value per
/// object, so a `(M-1)^d / M^d ≥ 1 - 1/r0` fraction of all shifts keeps any
/// fixed object — exactly the coverage the cover promises.
pub fn grid_ratio(r0: u64, d: usize) -> Result<u64> {
    if r0 < 2 {
        return Err(Error::InvalidParameter("cover parameter must be at least 2"));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be positive"));
    }
    let target = rat(r0 as i64 - 1, r0 as i64);
    let mut m: u64 = 1;
    loop {
        let kept = pow_u32(&rat(m as i64 - 1, m as i64), d as u32);
        if kept >= target {
            return Ok(2 * m);
        }
        m += 1;
    }
}

/// Number of shift vectors [`fat_cover`] enumerates: `(grid_ratio/2)^d`.
pub fn fat_shift_count(r0: u64, d: usize) -> Result<u64> {
    let r = grid_ratio(r0, d)?;
    (r / 2)
        .checked_pow(d as u32)
        .ok_or(Error::Overflow("number of cover shifts"))
}

/// One shifted hierarchy of grids: for each level `i` (one per rank, `0` the
/// coarsest) a full-dimensional grid of cell side `(1/r)^(i-1)` whose
/// hyperplanes on axis `j` sit at `offset(i, j) + z·step(i)` for integer `z`.
///
/// The offsets are chosen so the grids *nest*: every level-`i'` hyperplane is
/// also a level-`i` hyperplane whenever `i' < i` (their offsets differ by an
/// integer multiple of the finer step, and the coarser step is an integer
/// multiple of the finer one). Consequently each level-`i` cell lies inside
/// exactly one level-`i'` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedGridSystem {
    /// Grid ratio; even and at least 4.
    pub r: u64,
    /// Dimension.
    pub d: usize,
    /// Largest rank among the objects, hence the deepest grid level.
    pub k0: usize,
    /// Shift vector; entries in `{0, …, r/2 - 1}`, one per axis.
    pub shift: Vec<u64>,
}

impl RankedGridSystem {
    /// Cell side of the level-`i` grid: `(1/r)^(i-1)`; level 0 cells have
    /// side `r`.
    pub fn step(&self, i: usize) -> Rational {
        if i == 0 {
            rat_u(self.r)
        } else {
            pow_u32(&rat(1, self.r as i64), (i - 1) as u32)
        }
    }

    /// Hyperplane offset of the level-`i` grid on axis `j`:
    /// `shift[j] · Σ_{k=i}^{k0+1} (1/r)^k`.
    pub fn offset(&self, i: usize, j: usize) -> Rational {
        let inv = rat(1, self.r as i64);
        let mut sum = Rational::zero();
        let mut power = pow_u32(&inv, i as u32);
        for _ in i..=(self.k0 + 1) {
            sum += &power;
            power = &power * &inv;
        }
        rat_u(self.shift[j]) * sum
    }

    /// Whether the object meets no level-`i` hyperplane on any axis, i.e.
    /// no integer `z` puts `offset + z·step` inside the object's closed
    /// extent on some axis.
    pub(crate) fn avoids_level(&self, i: usize, obj: &FatObject) -> bool {
        let step = self.step(i);
        for j in 0..self.d {
            let off = self.offset(i, j);
            let (lo, hi) = obj.extent(j);
            let z_max = floor_int(&((&hi - &off) / &step));
            let z_min = ceil_int(&((&lo - &off) / &step));
            if z_max >= z_min {
                return false;
            }
        }
        true
    }

    /// Index vector of the level-`i` cell containing the point `x`
    /// (componentwise `floor((x_j - offset)/step)`). Only meaningful for
    /// points that lie on no level-`i` hyperplane.
    pub fn locate(&self, i: usize, x: &[Rational]) -> Result<Vec<i64>> {
        let step = self.step(i);
        let mut m = Vec::with_capacity(self.d);
        for j in 0..self.d {
            let off = self.offset(i, j);
            m.push(floor_i64(&((&x[j] - &off) / &step), "grid cell index")?);
        }
        Ok(m)
    }

    /// Closed bounds `[lo_j, hi_j]` of the level-`i` cell with index `m`.
    pub fn cell_bounds(&self, i: usize, m: &[i64]) -> (Vec<Rational>, Vec<Rational>) {
        let step = self.step(i);
        let mut lo = Vec::with_capacity(self.d);
        let mut hi = Vec::with_capacity(self.d);
        for j in 0..self.d {
            let l = self.offset(i, j) + rat_int(m[j]) * &step;
            let h = &l + &step;
            lo.push(l);
            hi.push(h);
        }
        (lo, hi)
    }
}

/// Rank of a size `s` in `(0, 1]`: the unique `k ≥ 0` with
/// `(1/r)^k ≥ s > (1/r)^(k+1)`, found by exact comparison against
/// successive powers (sizes exactly `(1/r)^(k+1)` get rank `k+1`).
fn rank_of(size: &Rational, r: u64) -> usize {
    let inv = rat(1, r as i64);
    let mut k = 0usize;
    let mut threshold = inv.clone();
    while *size <= threshold {
        k += 1;
        threshold = &threshold * &inv;
    }
    k
}

/// Decodes shift index `index` into a base-`base` digit vector of length
/// `d`, the last axis varying fastest.
fn decode_shift(mut index: u64, base: u64, d: usize) -> Vec<u64> {
    let mut shift = vec![0u64; d];
    for j in (0..d).rev() {
        shift[j] = index % base;
        index /= base;
    }
    shift
}

/// Builds a `(1 - 1/r0)`-general cover of the intersection graph of fat
/// objects (disks, or axis-parallel boxes in any dimension), with one
/// element per shift vector in `{0, …, r/2 - 1}^d`, in row-major shift
/// order.
///
/// Each element's decomposition has at most `n + 1` nodes, and the
/// independence number of every bag is bounded by `c · r^(2d)` where `c` is
/// the fatness constant of the object class from
/// [`fatness_constant`](crate::geometry::fatness_constant) and
/// `r = grid_ratio(r0, d)`.
///
/// Errors on grid-path instances, zero-size objects, empty instances,
/// `r0 < 2`, and a profile whose dimension does not match the instance.
pub fn fat_cover(
    inst: &GeometricInstance,
    profile: &FatnessProfile,
    r0: u64,
) -> Result<GeneralCover> {
    if r0 < 2 {
        return Err(Error::InvalidParameter("cover parameter must be at least 2"));
    }
    let (scaled, _) = rescale_to_unit(inst)?;
    let (d, objects) = to_fat_objects(&scaled)?;
    debug_assert!(objects.iter().all(|o| o.dim() == d));
    if profile.d != d {
        return Err(Error::InvalidParameter(
            "fatness profile dimension does not match the instance",
        ));
    }
    let r = grid_ratio(r0, d)?;
    let ranks: Vec<usize> = objects.iter().map(|o| rank_of(&o.size(), r)).collect();
    let k0 = ranks.iter().copied().max().unwrap_or(0);
    let half = r / 2;
    let count = half
        .checked_pow(d as u32)
        .ok_or(Error::Overflow("number of cover shifts"))?;
    let mut elements = Vec::with_capacity(count as usize);
    for index in 0..count {
        let shift = decode_shift(index, half, d);
        let system = RankedGridSystem { r, d, k0, shift };
        elements.push(element_for_shift(&system, &objects, &ranks)?);
    }
    Ok(GeneralCover { elements, beta: rat(r0 as i64 - 1, r0 as i64) })
}

/// Builds one cover element: the members that avoid their own rank's grid,
/// decomposed along the containment forest of their occupied cells.
fn element_for_shift(
    system: &RankedGridSystem,
    objects: &[FatObject],
    ranks: &[usize],
) -> Result<CoverElement> {
    let mut members: Vec<usize> = Vec::new();
    for (v, obj) in objects.iter().enumerate() {
        if system.avoids_level(ranks[v], obj) {
            members.push(v);
        }
    }

    // Occupied cells: every member lies strictly inside one cell of its
    // rank's grid, located by its center. Node order (level, then cell
    // index) is deterministic.
    let mut cells: BTreeMap<(usize, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for &v in &members {
        let level = ranks[v];
        let center: Vec<Rational> = (0..system.d).map(|j| objects[v].center_coord(j)).collect();
        let index = system.locate(level, &center)?;
        cells.entry((level, index)).or_default().push(v);
    }

    let ids: BTreeMap<(usize, Vec<i64>), usize> = cells
        .keys()
        .cloned()
        .enumerate()
        .map(|(position, key)| (key, position + 1))
        .collect();

    // Node 0 is an artificial root with an empty bag; the roots of the cell
    // containment forest hang from it.
    let mut bags: Vec<Vec<usize>> = vec![Vec::new()];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (key, id) in &ids {
        let (level, index) = key;
        let (lo, hi) = system.cell_bounds(*level, index);

        // Bag: members of rank at most the cell's level whose object meets
        // the closed cell. `members` is ascending, so the bag is sorted.
        let bag: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| ranks[v] <= *level && objects[v].meets_closed_box(&lo, &hi))
            .collect();
        bags.push(bag);

        // Parent: the deepest occupied coarser cell containing this one.
        // The cell center avoids all coarser hyperplanes (they are a subset
        // of this level's), so locating the center finds the containing
        // cell at each coarser level.
        let center: Vec<Rational> =
            (0..system.d).map(|j| (&lo[j] + &hi[j]) / rat(2, 1)).collect();
        let mut parent = 0usize;
        for coarser in (0..*level).rev() {
            let coarse_index = system.locate(coarser, &center)?;
            if let Some(&pid) = ids.get(&(coarser, coarse_index)) {
                parent = pid;
                break;
            }
        }
        edges.push((parent, *id));
    }

    let decomposition = TreeDecomposition::new(bags, &edges)?;
    Ok(CoverElement { vertices: members, decomposition })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{fatness_constant, intersection_graph, Disk, FatKind, Point2, RectI};
    use crate::rational::{is_integer, rat_int};

    fn disk(x: i64, y: i64, num: i64, den: i64) -> Disk {
        Disk {
            center: Point2::new(rat_int(x), rat_int(y)),
            radius: rat(num, den),
        }
    }

    #[test]
    fn grid_ratio_values() {
        assert_eq!(grid_ratio(2, 2).unwrap(), 8);
        assert_eq!(grid_ratio(3, 2).unwrap(), 12);
        assert_eq!(grid_ratio(2, 1).unwrap(), 4);
        assert_eq!(fat_shift_count(2, 2).unwrap(), 16);
        assert_eq!(fat_shift_count(3, 2).unwrap(), 36);
        assert!(grid_ratio(1, 2).is_err());
        assert!(grid_ratio(2, 0).is_err());
    }

    #[test]
    fn rank_boundaries() {
        assert_eq!(rank_of(&rat_int(1), 8), 0);
        assert_eq!(rank_of(&rat(1, 7), 8), 0);
        // Sizes exactly (1/8)^(k+1) take rank k + 1.
        assert_eq!(rank_of(&rat(1, 8), 8), 1);
        assert_eq!(rank_of(&rat(1, 9), 8), 1);
        assert_eq!(rank_of(&rat(1, 64), 8), 2);
        assert_eq!(rank_of(&rat(1, 65), 8), 2);
    }

    #[test]
    fn coarser_hyperplanes_nest_into_finer() {
        let system = RankedGridSystem { r: 8, d: 2, k0: 2, shift: vec![3, 1] };
        for fine in 0..=3usize {
            for coarse in 0..fine {
                for j in 0..2 {
                    let fine_step = system.step(fine);
                    let fine_off = system.offset(fine, j);
                    for z in -4i64..=4 {
                        let position = system.offset(coarse, j) + rat_int(z) * system.step(coarse);
                        assert!(
                            is_integer(&((&position - &fine_off) / &fine_step)),
                            "level {coarse} hyperplane not on level {fine} grid"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cells_nest_into_unique_coarser_cell() {
        let system = RankedGridSystem { r: 8, d: 2, k0: 1, shift: vec![2, 3] };
        for m_x in -3i64..=3 {
            for m_y in -3i64..=3 {
                let (lo, hi) = system.cell_bounds(2, &[m_x, m_y]);
                let center: Vec<Rational> =
                    (0..2).map(|j| (&lo[j] + &hi[j]) / rat(2, 1)).collect();
                for coarser in (0..2usize).rev() {
                    let index = system.locate(coarser, &center).unwrap();
                    let (clo, chi) = system.cell_bounds(coarser, &index);
                    for j in 0..2 {
                        assert!(clo[j] <= lo[j] && hi[j] <= chi[j], "cell escapes coarser cell");
                    }
                }
            }
        }
    }

    #[test]
    fn single_disk_cover() {
        let inst = GeometricInstance::UnitDisks {
            radius: rat_int(5),
            centers: vec![Point2::new(rat_int(0), rat_int(0))],
        };
        let profile = fatness_constant(FatKind::Balls, 2, &rat_int(1)).unwrap();
        let cover = fat_cover(&inst, &profile, 2).unwrap();
        let g = intersection_graph(&inst);
        cover.validate(&g).unwrap();
        assert_eq!(cover.elements.len(), 16);
        assert_eq!(cover.beta, rat(1, 2));

        // The rescaled disk has radius 1/2 at the origin; only shift value 0
        // puts a coarse hyperplane through it, so exactly the 3 x 3 shifts
        // with both entries nonzero keep it.
        let containing = cover.elements.iter().filter(|el| el.vertices == [0]).count();
        assert_eq!(containing, 9);
        for el in &cover.elements {
            if el.vertices.is_empty() {
                assert_eq!(el.decomposition.n_nodes(), 1);
                assert_eq!(el.decomposition.bag(0), &[] as &[usize]);
            } else {
                assert_eq!(el.decomposition.n_nodes(), 2);
                assert_eq!(el.decomposition.bag(1), &[0]);
            }
        }
        assert_eq!(cover.independence_number(&g), 1);
    }

    #[test]
    fn mixed_rank_disks_cover() {
        // Two rank-0 disks and one rank-1 disk (size exactly 1/8 of the
        // largest); the graph is a triangle.
        let inst = GeometricInstance::Disks {
            disks: vec![disk(0, 0, 4, 1), disk(5, 0, 4, 1), disk(1, 1, 1, 2)],
        };
        let g = intersection_graph(&inst);
        assert_eq!(g.edge_count(), 3);
        let profile = fatness_constant(FatKind::Balls, 2, &rat_int(1)).unwrap();
        let cover = fat_cover(&inst, &profile, 2).unwrap();
        cover.validate(&g).unwrap();
        assert_eq!(cover.elements.len(), 16);
        for el in &cover.elements {
            assert!(el.decomposition.n_nodes() <= g.n() + 1);
        }
        let bound = profile.c.checked_pow(1).unwrap() as usize * 8usize.pow(4);
        assert!(cover.independence_number(&g) <= bound);
    }

    #[test]
    fn mixed_rank_rectangles_cover() {
        let inst = GeometricInstance::Rectangles {
            rects: vec![
                RectI { x1: 0, y1: 0, x2: 8, y2: 8 },
                RectI { x1: 1, y1: 1, x2: 2, y2: 2 },
                RectI { x1: 3, y1: 1, x2: 4, y2: 2 },
            ],
        };
        let g = intersection_graph(&inst);
        assert_eq!(g.edge_count(), 2);
        let profile = fatness_constant(FatKind::Boxes, 2, &rat_int(1)).unwrap();
        let cover = fat_cover(&inst, &profile, 3).unwrap();
        cover.validate(&g).unwrap();
        assert_eq!(cover.elements.len(), 36);
        assert_eq!(cover.beta, rat(2, 3));
    }

    #[test]
    fn rejects_bad_inputs() {
        let inst = GeometricInstance::UnitDisks {
            radius: rat_int(1),
            centers: vec![Point2::new(rat_int(0), rat_int(0))],
        };
        let profile = fatness_constant(FatKind::Balls, 2, &rat_int(1)).unwrap();
        assert!(matches!(
            fat_cover(&inst, &profile, 1),
            Err(Error::InvalidParameter(_))
        ));
        let wrong = fatness_constant(FatKind::Balls, 3, &rat_int(1)).unwrap();
        assert!(matches!(
            fat_cover(&inst, &wrong, 2),
            Err(Error::InvalidParameter(_))
        ));
        let paths = GeometricInstance::GridPaths {
            mode: crate::geometry::ContactMode::Vertex,
            paths: vec![],
        };
        assert!(fat_cover(&paths, &profile, 2).is_err());
    }
}
