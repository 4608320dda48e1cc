//! Decompositions with bounded independence for instances confined to a
//! narrow vertical strip.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::constructions::grid_paths::{paths_row_decomposition, rows_decomposition};
use crate::error::Error;
use crate::geometry::{horizontal_part, rects_intersect, GeometricInstance, RectI};
use crate::rational::{ceil_i64, floor_i64, rat_int, rat_u, Rational};
use crate::treedec::TreeDecomposition;
use crate::Result;

/// A path decomposition with bounded bag independence number for instances
/// that fit in a narrow vertical strip, dispatched on the object kind.
///
/// - **Grid paths** spanning at most `ell` grid columns overall: the
///   contact-row decomposition. Every bag member touches the bag's row, and
///   the row meets at most `ell` grid points and `3*ell - 1` grid edges, so
///   bags have independence number at most `ell` under vertex contact and
///   at most `3*ell - 1` under edge contact (the latter provided every
///   path contains a grid edge).
/// - **Rectangles** spanning at most `ell` grid columns overall: the
///   contact-row decomposition with pair contacts at the lexicographically
///   smallest shared grid point `(max x1, max y1)` and self-contacts at
///   `(x1, y1)`. When every rectangle has width at least 1 it covers at
///   least two of the row's at most `ell` grid points, bounding bag
///   independence numbers by `floor(ell / 2)`.
/// - **Equal disks** of radius `c >= 1` whose union fits in a rectangle of
///   width `ell - 1`: bags collect the disks meeting each horizontal strip
///   `c*(j-1) <= y <= c*j`, giving independence numbers at most
///   `2 * ceil(ell / c)`.
///
/// Errors: [`Error::InvalidParameter`] when `ell == 0` or the kind's width
/// precondition fails, [`Error::UnsupportedKind`] for other kinds.
pub fn narrow_strip_decomposition(
    inst: &GeometricInstance,
    ell: u64,
) -> Result<TreeDecomposition> {
    if ell == 0 {
        return Err(Error::InvalidParameter("the strip width ell must be at least 1"));
    }
    match inst {
        GeometricInstance::GridPaths { mode, paths } => {
            let ell = i64::try_from(ell).map_err(|_| Error::Overflow("strip width"))?;
            let mut lo = i64::MAX;
            let mut hi = i64::MIN;
            for p in paths {
                let (a, b) = horizontal_part(p);
                lo = lo.min(a);
                hi = hi.max(b);
            }
            if !paths.is_empty() && hi - lo + 1 > ell {
                return Err(Error::InvalidParameter(
                    "the grid paths span more than ell columns",
                ));
            }
            Ok(paths_row_decomposition(paths, *mode))
        }
        GeometricInstance::Rectangles { rects } => {
            inst.validate()?;
            let ell = i64::try_from(ell).map_err(|_| Error::Overflow("strip width"))?;
            let lo = rects.iter().map(|r| r.x1).min();
            let hi = rects.iter().map(|r| r.x2).max();
            if let (Some(lo), Some(hi)) = (lo, hi) {
                if hi - lo + 1 > ell {
                    return Err(Error::InvalidParameter(
                        "the rectangles span more than ell columns",
                    ));
                }
            }
            Ok(rects_row_decomposition(rects))
        }
        GeometricInstance::UnitDisks { radius, centers } => {
            if *radius < Rational::one() {
                return Err(Error::InvalidParameter(
                    "the strip construction needs a disk radius of at least 1",
                ));
            }
            if let (Some(min_x), Some(max_x)) = (
                centers.iter().map(|p| p.x.clone()).min(),
                centers.iter().map(|p| p.x.clone()).max(),
            ) {
                // The union of the disks spans (max_x - min_x) + 2c.
                if max_x - min_x + radius * rat_int(2) > rat_u(ell) - rat_int(1) {
                    return Err(Error::InvalidParameter(
                        "the disks do not fit in a rectangle of width ell - 1",
                    ));
                }
            }
            // Disk i meets the horizontal strip c*(j-1) <= y <= c*j exactly
            // when c*(j-2) <= y_i <= c*(j+1).
            let mut strips: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
            for (i, p) in centers.iter().enumerate() {
                let q = &p.y / radius;
                let lo = ceil_i64(&q, "strip index")? - 1;
                let hi = floor_i64(&q, "strip index")? + 2;
                for j in lo..=hi {
                    strips.entry(j).or_default().push(i);
                }
            }
            let bags: Vec<Vec<usize>> = strips.into_values().collect();
            if bags.is_empty() {
                return TreeDecomposition::new(alloc::vec![Vec::new()], &[]);
            }
            let edges: Vec<(usize, usize)> = (1..bags.len()).map(|t| (t - 1, t)).collect();
            TreeDecomposition::new(bags, &edges)
        }
        other => Err(Error::UnsupportedKind {
            op: "narrow_strip_decomposition",
            kind: other.kind_name(),
        }),
    }
}

/// The contact-row decomposition of a rectangle family.
fn rects_row_decomposition(rects: &[RectI]) -> TreeDecomposition {
    let n = rects.len();
    let mut rows: Vec<i64> = Vec::new();
    let mut spans: Vec<(i64, i64)> = Vec::with_capacity(n);
    for r in rects {
        rows.push(r.y1);
        spans.push((r.y1, r.y1));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !rects_intersect(&rects[u], &rects[v]) {
                continue;
            }
            // The lexicographically smallest grid point of the intersection.
            let y = rects[u].y1.max(rects[v].y1);
            rows.push(y);
            for w in [u, v] {
                spans[w].0 = spans[w].0.min(y);
                spans[w].1 = spans[w].1.max(y);
            }
        }
    }
    rows_decomposition(rows, &spans)
}
