//! Geometric instances with exact rational coordinates.
//!
//! Five kinds of objects are supported: unit disks (one shared radius),
//! disks of arbitrary radii, axis-aligned rectangles with integer corners,
//! axis-parallel grid paths (vertex- or edge-contact), and axis-aligned
//! boxes in `d` dimensions. All predicates are exact — closed objects,
//! rational arithmetic, no epsilons — so tangent disks intersect and
//! rectangles sharing a boundary point intersect.

pub(crate) mod fat;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::graph::Graph;
use crate::rational::{pow_u32, rat, rat_u, Rational};
use crate::Result;

/// A point in the rational plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point2 {
    /// Horizontal coordinate.
    pub x: Rational,
    /// Vertical coordinate.
    pub y: Rational,
}

impl Point2 {
    /// Builds a point.
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }
}

/// A closed disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disk {
    /// Center.
    pub center: Point2,
    /// Radius (nonnegative).
    pub radius: Rational,
}

/// A closed axis-aligned rectangle with integer corners
/// (`x1 <= x2`, `y1 <= y2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RectI {
    /// Left edge.
    pub x1: i64,
    /// Bottom edge.
    pub y1: i64,
    /// Right edge.
    pub x2: i64,
    /// Top edge.
    pub y2: i64,
}

impl RectI {
    /// Width (`x2 - x1`).
    pub fn width(&self) -> i64 {
        self.x2 - self.x1
    }

    /// Height (`y2 - y1`).
    pub fn height(&self) -> i64 {
        self.y2 - self.y1
    }
}

/// How grid paths make contact: sharing a grid point, or sharing a full
/// grid edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContactMode {
    /// Two paths intersect when they share a grid point.
    Vertex,
    /// Two paths intersect when they share a unit grid edge.
    Edge,
}

/// One maximal axis-parallel segment of a grid path.
///
/// `horizontal` segments run along `y = fixed` from `x = lo` to `x = hi`;
/// vertical ones along `x = fixed` from `y = lo` to `y = hi`. Degenerate
/// (single-point) paths are stored as one segment with `lo == hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    /// Orientation.
    pub horizontal: bool,
    /// The fixed coordinate (row for horizontal, column for vertical).
    pub fixed: i64,
    /// Smaller varying coordinate.
    pub lo: i64,
    /// Larger varying coordinate.
    pub hi: i64,
}

/// An axis-parallel path on the integer grid.
///
/// Stored as its polyline vertices; maximal segments are computed once at
/// construction. Consecutive vertices must differ in exactly one
/// coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPath {
    points: Vec<(i64, i64)>,
    segments: Vec<Segment>,
}

impl GridPath {
    /// Builds a path from polyline vertices, validating axis-parallel steps
    /// and decomposing into maximal segments.
    pub fn new(points: Vec<(i64, i64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidParameter("a grid path needs at least one point"));
        }
        for w in points.windows(2) {
            let ((ax, ay), (bx, by)) = (w[0], w[1]);
            let dx = ax != bx;
            let dy = ay != by;
            if dx == dy {
                // Both differ (diagonal) or neither (repeated point).
                return Err(Error::InvalidParameter(
                    "consecutive path points must differ in exactly one coordinate",
                ));
            }
        }
        let mut segments: Vec<Segment> = Vec::new();
        if points.len() == 1 {
            segments.push(Segment {
                horizontal: true,
                fixed: points[0].1,
                lo: points[0].0,
                hi: points[0].0,
            });
        }
        for w in points.windows(2) {
            let ((ax, ay), (bx, by)) = (w[0], w[1]);
            let horizontal = ay == by;
            let (fixed, lo, hi) = if horizontal {
                (ay, ax.min(bx), ax.max(bx))
            } else {
                (ax, ay.min(by), ay.max(by))
            };
            // Merge into the previous segment when collinear and touching.
            if let Some(last) = segments.last_mut() {
                if last.horizontal == horizontal
                    && last.fixed == fixed
                    && lo <= last.hi
                    && last.lo <= hi
                {
                    last.lo = last.lo.min(lo);
                    last.hi = last.hi.max(hi);
                    continue;
                }
            }
            segments.push(Segment { horizontal, fixed, lo, hi });
        }
        Ok(GridPath { points, segments })
    }

    /// The polyline vertices.
    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    /// Maximal axis-parallel segments.
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Whether the path contains at least one unit grid edge.
    pub fn has_edge(&self) -> bool {
        self.segments.iter().any(|s| s.lo < s.hi)
    }

    /// All grid points on the path, sorted.
    pub fn grid_points(&self) -> Vec<(i64, i64)> {
        let mut set = BTreeSet::new();
        for s in &self.segments {
            for c in s.lo..=s.hi {
                if s.horizontal {
                    set.insert((c, s.fixed));
                } else {
                    set.insert((s.fixed, c));
                }
            }
        }
        set.into_iter().collect()
    }

    /// All unit grid edges on the path, sorted; an edge is keyed by its
    /// smaller endpoint plus orientation.
    pub fn unit_edges(&self) -> Vec<((i64, i64), bool)> {
        let mut set = BTreeSet::new();
        for s in &self.segments {
            for c in s.lo..s.hi {
                if s.horizontal {
                    set.insert(((c, s.fixed), true));
                } else {
                    set.insert(((s.fixed, c), false));
                }
            }
        }
        set.into_iter().collect()
    }

    /// Smallest and largest row (`y`) touched by the path.
    pub fn row_span(&self) -> (i64, i64) {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for &(_, y) in &self.points {
            lo = lo.min(y);
            hi = hi.max(y);
        }
        (lo, hi)
    }
}

/// The horizontal part of a grid path: the smallest and largest column
/// (`x` coordinate) it touches.
pub fn horizontal_part(path: &GridPath) -> (i64, i64) {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for &(x, _) in path.points() {
        lo = lo.min(x);
        hi = hi.max(x);
    }
    (lo, hi)
}

/// An axis-aligned box in `d` dimensions, given by center and per-axis side
/// lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxD {
    /// Center coordinates (`d` entries).
    pub center: Vec<Rational>,
    /// Side lengths (`d` entries, nonnegative).
    pub sides: Vec<Rational>,
}

/// A collection of same-kind geometric objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometricInstance {
    /// Disks sharing one radius.
    UnitDisks {
        /// The common radius (positive).
        radius: Rational,
        /// Disk centers; object `i` is `centers[i]`.
        centers: Vec<Point2>,
    },
    /// Disks with individual radii.
    Disks {
        /// The disks.
        disks: Vec<Disk>,
    },
    /// Axis-aligned rectangles with integer corners.
    Rectangles {
        /// The rectangles.
        rects: Vec<RectI>,
    },
    /// Axis-parallel grid paths under a contact mode.
    GridPaths {
        /// Contact mode shared by the instance.
        mode: ContactMode,
        /// The paths.
        paths: Vec<GridPath>,
    },
    /// Axis-aligned boxes in `d` dimensions.
    Boxes {
        /// Dimension (`>= 1`).
        d: usize,
        /// The boxes.
        boxes: Vec<BoxD>,
    },
}

impl GeometricInstance {
    /// Number of objects.
    pub fn len(&self) -> usize {
        match self {
            GeometricInstance::UnitDisks { centers, .. } => centers.len(),
            GeometricInstance::Disks { disks } => disks.len(),
            GeometricInstance::Rectangles { rects } => rects.len(),
            GeometricInstance::GridPaths { paths, .. } => paths.len(),
            GeometricInstance::Boxes { boxes, .. } => boxes.len(),
        }
    }

    /// Whether the instance has no objects.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// A short name for the object kind.
    pub fn kind_name(&self) -> &'static str {
        match self {
            GeometricInstance::UnitDisks { .. } => "unit_disks",
            GeometricInstance::Disks { .. } => "disks",
            GeometricInstance::Rectangles { .. } => "rectangles",
            GeometricInstance::GridPaths { .. } => "grid_paths",
            GeometricInstance::Boxes { .. } => "boxes",
        }
    }

    /// Validates coordinate-level invariants (nonnegative radii and sides,
    /// ordered rectangle corners, consistent box dimensions).
    pub fn validate(&self) -> Result<()> {
        match self {
            GeometricInstance::UnitDisks { radius, .. } => {
                if radius.is_negative() {
                    return Err(Error::InvalidParameter("disk radius must be nonnegative"));
                }
            }
            GeometricInstance::Disks { disks } => {
                for d in disks {
                    if d.radius.is_negative() {
                        return Err(Error::InvalidParameter("disk radius must be nonnegative"));
                    }
                }
            }
            GeometricInstance::Rectangles { rects } => {
                for r in rects {
                    if r.x1 > r.x2 || r.y1 > r.y2 {
                        return Err(Error::InvalidParameter(
                            "rectangle corners must satisfy x1 <= x2 and y1 <= y2",
                        ));
                    }
                }
            }
            GeometricInstance::GridPaths { .. } => {
                // Paths validate at construction.
            }
            GeometricInstance::Boxes { d, boxes } => {
                if *d == 0 {
                    return Err(Error::InvalidParameter("box dimension must be at least 1"));
                }
                for b in boxes {
                    if b.center.len() != *d || b.sides.len() != *d {
                        return Err(Error::InvalidParameter(
                            "box center and sides must have exactly d entries",
                        ));
                    }
                    if b.sides.iter().any(Signed::is_negative) {
                        return Err(Error::InvalidParameter("box sides must be nonnegative"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether objects `i` and `j` intersect (closed objects, exact
    /// arithmetic; for grid paths, under the instance's contact mode).
    pub fn pair_intersects(&self, i: usize, j: usize) -> bool {
        match self {
            GeometricInstance::UnitDisks { radius, centers } => {
                disks_intersect(&centers[i], radius, &centers[j], radius)
            }
            GeometricInstance::Disks { disks } => disks_intersect(
                &disks[i].center,
                &disks[i].radius,
                &disks[j].center,
                &disks[j].radius,
            ),
            GeometricInstance::Rectangles { rects } => rects_intersect(&rects[i], &rects[j]),
            GeometricInstance::GridPaths { mode, paths } => {
                paths_intersect(&paths[i], &paths[j], *mode)
            }
            GeometricInstance::Boxes { boxes, .. } => boxes_intersect(&boxes[i], &boxes[j]),
        }
    }

    /// The size of object `i`: diameter for disks, largest side for
    /// rectangles and boxes. Grid paths have no size in this sense.
    pub fn object_size(&self, i: usize) -> Result<Rational> {
        match self {
            GeometricInstance::UnitDisks { radius, .. } => Ok(radius * rat(2, 1)),
            GeometricInstance::Disks { disks } => Ok(&disks[i].radius * rat(2, 1)),
            GeometricInstance::Rectangles { rects } => {
                Ok(rat(rects[i].width().max(rects[i].height()), 1))
            }
            GeometricInstance::Boxes { boxes, .. } => {
                let mut best = Rational::zero();
                for s in &boxes[i].sides {
                    if *s > best {
                        best = s.clone();
                    }
                }
                Ok(best)
            }
            GeometricInstance::GridPaths { .. } => {
                Err(Error::UnsupportedKind { op: "object_size", kind: "grid_paths" })
            }
        }
    }
}

/// Whether two closed disks intersect: squared center distance at most the
/// squared radius sum, so tangent disks do intersect.
pub fn disks_intersect(c1: &Point2, r1: &Rational, c2: &Point2, r2: &Rational) -> bool {
    let dx = &c1.x - &c2.x;
    let dy = &c1.y - &c2.y;
    let rr = r1 + r2;
    &dx * &dx + &dy * &dy <= &rr * &rr
}

/// Whether two closed rectangles intersect (boundary contact counts).
pub fn rects_intersect(a: &RectI, b: &RectI) -> bool {
    a.x1 <= b.x2 && b.x1 <= a.x2 && a.y1 <= b.y2 && b.y1 <= a.y2
}

/// Whether two closed boxes intersect: per-axis center distance at most
/// half the side sum on every axis.
pub fn boxes_intersect(a: &BoxD, b: &BoxD) -> bool {
    debug_assert_eq!(a.center.len(), b.center.len());
    for j in 0..a.center.len() {
        let gap = (&a.center[j] - &b.center[j]).abs() * rat(2, 1);
        if gap > &a.sides[j] + &b.sides[j] {
            return false;
        }
    }
    true
}

/// Whether two grid paths make contact under `mode`: a shared grid point
/// (vertex mode) or a shared unit grid edge (edge mode).
pub fn paths_intersect(a: &GridPath, b: &GridPath, mode: ContactMode) -> bool {
    match mode {
        ContactMode::Vertex => sorted_share(&a.grid_points(), &b.grid_points()),
        ContactMode::Edge => sorted_share(&a.unit_edges(), &b.unit_edges()),
    }
}

fn sorted_share<T: Ord>(a: &[T], b: &[T]) -> bool {
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

/// A borrowed view of one object, for kind-checked pairwise tests across
/// instance boundaries.
#[derive(Debug, Clone)]
pub enum GeomObject<'a> {
    /// A disk (from either disk kind).
    Disk(&'a Point2, &'a Rational),
    /// A rectangle.
    Rect(&'a RectI),
    /// A grid path.
    Path(&'a GridPath),
    /// A box.
    Box(&'a BoxD),
}

/// Kind-checked intersection of two object views. `mode` applies to paths
/// and is ignored for other kinds; mixing kinds is an error, except that
/// the two disk kinds are compatible.
pub fn objects_intersect(a: &GeomObject<'_>, b: &GeomObject<'_>, mode: ContactMode) -> Result<bool> {
    match (a, b) {
        (GeomObject::Disk(c1, r1), GeomObject::Disk(c2, r2)) => {
            Ok(disks_intersect(c1, r1, c2, r2))
        }
        (GeomObject::Rect(r1), GeomObject::Rect(r2)) => Ok(rects_intersect(r1, r2)),
        (GeomObject::Path(p1), GeomObject::Path(p2)) => Ok(paths_intersect(p1, p2, mode)),
        (GeomObject::Box(b1), GeomObject::Box(b2)) => {
            if b1.center.len() != b2.center.len() {
                return Err(Error::KindMismatch);
            }
            Ok(boxes_intersect(b1, b2))
        }
        _ => Err(Error::KindMismatch),
    }
}

/// The intersection graph: one vertex per object, an edge for every
/// intersecting pair.
pub fn intersection_graph(inst: &GeometricInstance) -> Graph {
    let n = inst.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if inst.pair_intersects(i, j) {
                edges.push((i, j));
            }
        }
    }
    Graph::build(n, &edges).expect("indices in range by construction")
}

/// Rescales an instance so its largest object has size exactly 1, returning
/// the rescaled instance and the scale factor applied to all coordinates.
///
/// Rectangles come back as 2-dimensional boxes, since scaled corners are no
/// longer integral. Grid paths cannot be rescaled. Errors when the instance
/// is empty or contains a zero-size object.
pub fn rescale_to_unit(inst: &GeometricInstance) -> Result<(GeometricInstance, Rational)> {
    if inst.is_empty() {
        return Err(Error::EmptyInstance);
    }
    if matches!(inst, GeometricInstance::GridPaths { .. }) {
        return Err(Error::UnsupportedKind { op: "rescale_to_unit", kind: "grid_paths" });
    }
    let mut max_size = Rational::zero();
    for i in 0..inst.len() {
        let s = inst.object_size(i)?;
        if s.is_zero() {
            return Err(Error::ZeroSizeObject { index: i });
        }
        if s > max_size {
            max_size = s;
        }
    }
    let scale = max_size.recip();
    let out = match inst {
        GeometricInstance::UnitDisks { radius, centers } => GeometricInstance::UnitDisks {
            radius: radius * &scale,
            centers: centers
                .iter()
                .map(|p| Point2::new(&p.x * &scale, &p.y * &scale))
                .collect(),
        },
        GeometricInstance::Disks { disks } => GeometricInstance::Disks {
            disks: disks
                .iter()
                .map(|d| Disk {
                    center: Point2::new(&d.center.x * &scale, &d.center.y * &scale),
                    radius: &d.radius * &scale,
                })
                .collect(),
        },
        GeometricInstance::Rectangles { rects } => GeometricInstance::Boxes {
            d: 2,
            boxes: rects
                .iter()
                .map(|r| BoxD {
                    center: alloc::vec![
                        rat(r.x1 + r.x2, 2) * &scale,
                        rat(r.y1 + r.y2, 2) * &scale,
                    ],
                    sides: alloc::vec![rat(r.width(), 1) * &scale, rat(r.height(), 1) * &scale],
                })
                .collect(),
        },
        GeometricInstance::Boxes { d, boxes } => GeometricInstance::Boxes {
            d: *d,
            boxes: boxes
                .iter()
                .map(|b| BoxD {
                    center: b.center.iter().map(|c| c * &scale).collect(),
                    sides: b.sides.iter().map(|s| s * &scale).collect(),
                })
                .collect(),
        },
        GeometricInstance::GridPaths { .. } => unreachable!("rejected above"),
    };
    Ok((out, scale))
}

/// Families of fat objects the cover construction supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FatKind {
    /// Balls in `d` dimensions.
    Balls,
    /// Axis-aligned boxes in `d` dimensions with bounded aspect ratio.
    Boxes,
}

/// Fatness data for a family of objects: the dimension and the *stabbing
/// constant* `c` — an upper bound on how many pairwise-disjoint objects of
/// size at least `s` can meet an axis-aligned cube of side `s`.
///
/// Produced by [`fatness_constant`] for balls and boxes; custom object
/// families can supply their own profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FatnessProfile {
    /// Ambient dimension.
    pub d: usize,
    /// Stabbing constant.
    pub c: u64,
}

/// The fatness profile of a standard family.
///
/// For balls the constant is `3^d * d!`; for boxes of aspect ratio at most
/// `t` it is `ceil((3 t sqrt(d))^d)`, computed exactly as the ceiling of
/// the square root of `(9 t^2 d)^d`. The aspect bound `t` must be at least
/// 1 and is ignored for balls.
pub fn fatness_constant(kind: FatKind, d: usize, t: &Rational) -> Result<FatnessProfile> {
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1"));
    }
    let c = match kind {
        FatKind::Balls => {
            let mut c: u64 = 1;
            for i in 1..=d as u64 {
                c = c
                    .checked_mul(3)
                    .and_then(|c| c.checked_mul(i))
                    .ok_or(Error::Overflow("fatness constant"))?;
            }
            c
        }
        FatKind::Boxes => {
            if *t < rat(1, 1) {
                return Err(Error::InvalidParameter("aspect ratio t must be at least 1"));
            }
            let base = t * t * rat_u(9) * rat_u(d as u64);
            let c = crate::rational::ceil_sqrt(&pow_u32(&base, d as u32));
            num_traits::ToPrimitive::to_u64(&c).ok_or(Error::Overflow("fatness constant"))?
        }
    };
    Ok(FatnessProfile { d, c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::new(rat_int(x), rat_int(y))
    }

    #[test]
    fn disk_predicates_are_exact() {
        // Tangent unit-radius disks at distance 2 intersect...
        assert!(disks_intersect(&pt(0, 0), &rat_int(1), &pt(2, 0), &rat_int(1)));
        // ...and the tiniest rational separation breaks contact.
        let eps = Point2::new(rat_int(2) + rat(1, 1_000_000_000), rat_int(0));
        assert!(!disks_intersect(&pt(0, 0), &rat_int(1), &eps, &rat_int(1)));
        // Diagonal tangency at irrational distance stays exact: disks of
        // radius 1 at (0,0) and (1,1) overlap since dist^2 = 2 <= 4.
        assert!(disks_intersect(&pt(0, 0), &rat_int(1), &pt(1, 1), &rat_int(1)));
    }

    #[test]
    fn rect_and_box_contact() {
        let a = RectI { x1: 0, y1: 0, x2: 2, y2: 2 };
        let b = RectI { x1: 2, y1: 1, x2: 4, y2: 3 };
        let c = RectI { x1: 3, y1: 3, x2: 5, y2: 5 };
        assert!(rects_intersect(&a, &b)); // shared edge x = 2
        assert!(!rects_intersect(&a, &c));
        assert!(rects_intersect(&b, &c)); // corner contact at (3, 3)

        let bx = |cx: i64, cy: i64, s: i64| BoxD {
            center: alloc::vec![rat_int(cx), rat_int(cy)],
            sides: alloc::vec![rat_int(s), rat_int(s)],
        };
        assert!(boxes_intersect(&bx(0, 0, 2), &bx(2, 0, 2)));
        assert!(!boxes_intersect(&bx(0, 0, 2), &bx(3, 0, 1)));
    }

    #[test]
    fn grid_path_segments_and_contacts() {
        // L-shaped path: right then up, with a collinear middle vertex.
        let p = GridPath::new(alloc::vec![(0, 0), (2, 0), (3, 0), (3, 2)]).unwrap();
        assert_eq!(p.segments().len(), 2);
        assert_eq!(horizontal_part(&p), (0, 3));
        assert_eq!(p.row_span(), (0, 2));
        assert!(p.has_edge());

        let q = GridPath::new(alloc::vec![(3, 1), (5, 1)]).unwrap();
        // p and q share the grid point (3, 1) on p's vertical leg...
        assert!(paths_intersect(&p, &q, ContactMode::Vertex));
        // ...but no unit edge (p is vertical there, q horizontal).
        assert!(!paths_intersect(&p, &q, ContactMode::Edge));

        let r = GridPath::new(alloc::vec![(1, 0), (2, 0)]).unwrap();
        assert!(paths_intersect(&p, &r, ContactMode::Vertex));
        assert!(paths_intersect(&p, &r, ContactMode::Edge));

        // A single point is a valid path without edges.
        let s = GridPath::new(alloc::vec![(7, 7)]).unwrap();
        assert!(!s.has_edge());
        assert!(!paths_intersect(&p, &s, ContactMode::Vertex));
        assert!(paths_intersect(&s, &s, ContactMode::Vertex));

        assert!(GridPath::new(alloc::vec![]).is_err());
        assert!(GridPath::new(alloc::vec![(0, 0), (1, 1)]).is_err());
        assert!(GridPath::new(alloc::vec![(0, 0), (0, 0)]).is_err());
    }

    #[test]
    fn intersection_graph_of_tangent_chain() {
        // Disks of radius 1/2 at (0,0), (1,0), (2,0): consecutive tangency.
        let inst = GeometricInstance::UnitDisks {
            radius: rat(1, 2),
            centers: alloc::vec![pt(0, 0), pt(1, 0), pt(2, 0)],
        };
        let g = intersection_graph(&inst);
        assert_eq!(g.edges(), alloc::vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rescaling_divides_by_max_size() {
        let inst = GeometricInstance::Disks {
            disks: alloc::vec![
                Disk { center: pt(0, 0), radius: rat_int(1) },
                Disk { center: pt(10, 0), radius: rat_int(2) },
            ],
        };
        let (scaled, scale) = rescale_to_unit(&inst).unwrap();
        assert_eq!(scale, rat(1, 4));
        match &scaled {
            GeometricInstance::Disks { disks } => {
                assert_eq!(disks[1].radius, rat(1, 2));
                assert_eq!(disks[1].center.x, rat(10, 4));
            }
            _ => panic!("kind preserved"),
        }
        // Intersection graphs are invariant under rescaling.
        assert_eq!(intersection_graph(&inst), intersection_graph(&scaled));

        // Rectangles become boxes.
        let rects = GeometricInstance::Rectangles {
            rects: alloc::vec![RectI { x1: 0, y1: 0, x2: 4, y2: 2 }],
        };
        let (as_boxes, scale) = rescale_to_unit(&rects).unwrap();
        assert_eq!(scale, rat(1, 4));
        match &as_boxes {
            GeometricInstance::Boxes { d: 2, boxes } => {
                assert_eq!(boxes[0].sides, alloc::vec![rat_int(1), rat(1, 2)]);
            }
            _ => panic!("rectangles rescale to 2-boxes"),
        }

        let zero = GeometricInstance::Rectangles {
            rects: alloc::vec![RectI { x1: 0, y1: 0, x2: 0, y2: 0 }],
        };
        assert!(matches!(rescale_to_unit(&zero), Err(Error::ZeroSizeObject { index: 0 })));
    }

    #[test]
    fn fatness_constants() {
        let c = |kind, d, t: &Rational| fatness_constant(kind, d, t).unwrap().c;
        assert_eq!(c(FatKind::Balls, 2, &rat_int(1)), 18);
        assert_eq!(c(FatKind::Balls, 3, &rat_int(1)), 162);
        assert_eq!(c(FatKind::Boxes, 2, &rat_int(1)), 18);
        // Boxes, d = 3, t = 1: ceil((3 sqrt 3)^3) = ceil(sqrt(19683)) = 141.
        assert_eq!(c(FatKind::Boxes, 3, &rat_int(1)), 141);
        // Aspect ratio scales in: d = 2, t = 2 gives (6 sqrt 2)^2 = 72.
        assert_eq!(c(FatKind::Boxes, 2, &rat_int(2)), 72);
        assert_eq!(fatness_constant(FatKind::Balls, 2, &rat_int(1)).unwrap().d, 2);
        assert!(fatness_constant(FatKind::Boxes, 2, &rat(1, 2)).is_err());
        assert!(fatness_constant(FatKind::Balls, 0, &rat_int(1)).is_err());
    }

    #[test]
    fn kind_checked_views() {
        let p = pt(0, 0);
        let r = rat_int(1);
        let rect = RectI { x1: 0, y1: 0, x2: 1, y2: 1 };
        let a = GeomObject::Disk(&p, &r);
        let b = GeomObject::Rect(&rect);
        assert!(matches!(objects_intersect(&a, &b, ContactMode::Vertex), Err(Error::KindMismatch)));
        assert!(objects_intersect(&a, &a, ContactMode::Vertex).unwrap());
    }
}
