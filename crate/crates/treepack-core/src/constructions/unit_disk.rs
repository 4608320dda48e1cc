//! Strip decomposition of unit-disk intersection graphs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::Error;
use crate::geometry::{GeometricInstance, Point2};
use crate::rational::{ceil_i64, floor_i64, rat, rat_int};
use crate::treedec::{Layering, TreeDecomposition};
use crate::Result;

/// A path decomposition plus layering for the intersection graph of equal
/// disks, built from vertical strips.
///
/// The instance is rescaled so the common radius is `1/2` (making disk
/// centers at distance at most 1 exactly the intersecting pairs) and
/// translated so all centers have `x >= 0` and `y >= 1`. Node `j` of the
/// path holds every disk whose center lies in the closed window
/// `[j - 1/2, j + 3/2]` — the disks meeting the vertical strip
/// `[j, j + 1]` — with empty strips skipped. The layer of a disk is
/// `ceil(y) - 1` for its center's `y` coordinate: the strip of height 1
/// containing the center, where a center exactly on a boundary joins the
/// lower layer.
///
/// Any set of pairwise disjoint equal disks whose centers share one bag
/// window and one layer fits in a `2 x 1` box, so each bag-layer cell has
/// independence number at most 8.
///
/// Errors: [`Error::EmptyInstance`] when there are no disks,
/// [`Error::InvalidParameter`] when the radius is not positive, and
/// [`Error::UnsupportedKind`] for any other instance kind.
pub fn unit_disk_layered_decomposition(
    inst: &GeometricInstance,
) -> Result<(TreeDecomposition, Layering)> {
    let (radius, centers) = match inst {
        GeometricInstance::UnitDisks { radius, centers } => (radius, centers),
        other => {
            return Err(Error::UnsupportedKind {
                op: "unit_disk_layered_decomposition",
                kind: other.kind_name(),
            })
        }
    };
    if centers.is_empty() {
        return Err(Error::EmptyInstance);
    }
    if !radius.is_positive() {
        return Err(Error::InvalidParameter("disk radius must be positive"));
    }

    // Rescale so the radius becomes 1/2, then translate all centers into
    // x >= 0, y >= 1.
    let scale = rat(1, 2) / radius;
    let scaled: Vec<Point2> =
        centers.iter().map(|p| Point2::new(&p.x * &scale, &p.y * &scale)).collect();
    let min_x = scaled.iter().map(|p| p.x.clone()).min().expect("nonempty");
    let min_y = scaled.iter().map(|p| p.y.clone()).min().expect("nonempty");
    let centers: Vec<Point2> =
        scaled.iter().map(|p| Point2::new(&p.x - &min_x, &p.y - &min_y + rat_int(1))).collect();

    // Disk i meets strip [j, j+1] exactly when x_i lies in [j - 1/2, j + 3/2].
    let mut strips: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, p) in centers.iter().enumerate() {
        let lo = ceil_i64(&(&p.x - rat(3, 2)), "strip index")?;
        let hi = floor_i64(&(&p.x + rat(1, 2)), "strip index")?;
        debug_assert!(lo <= hi, "a disk always meets at least one strip");
        for j in lo..=hi {
            strips.entry(j).or_default().push(i);
        }
    }

    let bags: Vec<Vec<usize>> = strips.into_values().collect();
    let edges: Vec<(usize, usize)> = (1..bags.len()).map(|t| (t - 1, t)).collect();
    let td = TreeDecomposition::new(bags, &edges)?;

    let mut layer_of = Vec::with_capacity(centers.len());
    for p in &centers {
        let layer = ceil_i64(&p.y, "layer index")? - 1;
        debug_assert!(layer >= 0, "translation put every center at y >= 1");
        layer_of.push(layer as usize);
    }
    Ok((td, Layering::new(layer_of)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::intersection_graph;
    use crate::rational::{rat_u, Rational};
    use crate::treedec::{layered_independence_number, validate_decomposition};

    fn disks(radius: Rational, pts: &[(i64, i64)]) -> GeometricInstance {
        GeometricInstance::UnitDisks {
            radius,
            centers: pts.iter().map(|&(x, y)| Point2::new(rat_int(x), rat_int(y))).collect(),
        }
    }

    #[test]
    fn grid_of_disks_is_valid_and_layered() {
        // 5x5 grid of unit-radius disks at even coordinates: tangent to the
        // four axis neighbors.
        let mut pts = Vec::new();
        for x in 0..5 {
            for y in 0..5 {
                pts.push((2 * x, 2 * y));
            }
        }
        let inst = disks(rat_int(1), &pts);
        let g = intersection_graph(&inst);
        assert_eq!(g.edge_count(), 2 * 5 * 4);
        let (td, lay) = unit_disk_layered_decomposition(&inst).unwrap();
        assert!(validate_decomposition(&g, &td).into_result().is_ok());
        lay.validate_for(&g).unwrap();
        let li = layered_independence_number(&g, &td, &lay).unwrap();
        assert!(li <= 8, "layered independence {li} exceeds the strip bound");
    }

    #[test]
    fn boundary_center_joins_lower_layer() {
        // After rescaling by 1/(2r) = 1/2 and translating, centers sit at
        // y = 1 and y = 2; integer y joins the lower layer, so the layers
        // are 0 and 1.
        let inst = disks(rat_int(1), &[(0, 0), (0, 2)]);
        let (_, lay) = unit_disk_layered_decomposition(&inst).unwrap();
        assert_eq!(lay.as_slice(), &[0, 1]);
    }

    #[test]
    fn tangent_pair_shares_a_bag() {
        let inst = disks(rat_int(1), &[(0, 0), (2, 0)]);
        let g = intersection_graph(&inst);
        assert!(g.has_edge(0, 1));
        let (td, _) = unit_disk_layered_decomposition(&inst).unwrap();
        assert!(validate_decomposition(&g, &td).into_result().is_ok());
    }

    #[test]
    fn sparse_columns_skip_empty_strips() {
        // Two far-apart groups: the strip path must still be a valid tree
        // decomposition even though intermediate strips are empty.
        let inst = disks(rat(1, 2), &[(0, 0), (1, 0), (40, 0), (41, 0)]);
        let g = intersection_graph(&inst);
        let (td, lay) = unit_disk_layered_decomposition(&inst).unwrap();
        assert!(validate_decomposition(&g, &td).into_result().is_ok());
        lay.validate_for(&g).unwrap();
    }

    #[test]
    fn rejects_bad_inputs() {
        let empty = disks(rat_int(1), &[]);
        assert!(matches!(unit_disk_layered_decomposition(&empty), Err(Error::EmptyInstance)));
        let zero = disks(rat_u(0), &[(0, 0)]);
        assert!(matches!(
            unit_disk_layered_decomposition(&zero),
            Err(Error::InvalidParameter(_))
        ));
        let rects = GeometricInstance::Rectangles { rects: alloc::vec![] };
        assert!(matches!(
            unit_disk_layered_decomposition(&rects),
            Err(Error::UnsupportedKind { .. })
        ));
    }
}
