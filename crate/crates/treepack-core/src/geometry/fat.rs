//! Internal fat-object view used by the hierarchical cover construction.
//!
//! Balls and boxes share the operations the construction needs: a size
//! (diameter, or longest side), per-axis extents, exact membership tests
//! against axis-aligned hyperplanes and closed boxes, and an interior
//! point for locating the unique grid cell that swallows a small object.

use alloc::vec::Vec;

#[cfg(test)]
use num_traits::Signed;
use num_traits::Zero;

use crate::error::Error;
use crate::geometry::GeometricInstance;
use crate::rational::{rat, Rational};
use crate::Result;

#[derive(Debug, Clone)]
pub(crate) enum FatObject {
    Ball { center: Vec<Rational>, radius: Rational },
    AxisBox { lo: Vec<Rational>, hi: Vec<Rational> },
}

impl FatObject {
    pub(crate) fn dim(&self) -> usize {
        match self {
            FatObject::Ball { center, .. } => center.len(),
            FatObject::AxisBox { lo, .. } => lo.len(),
        }
    }

    /// Diameter for balls, longest side for boxes.
    pub(crate) fn size(&self) -> Rational {
        match self {
            FatObject::Ball { radius, .. } => radius * rat(2, 1),
            FatObject::AxisBox { lo, hi } => {
                let mut best = Rational::zero();
                for j in 0..lo.len() {
                    let side = &hi[j] - &lo[j];
                    if side > best {
                        best = side;
                    }
                }
                best
            }
        }
    }

    /// An interior point (the center), used to locate the cell containing
    /// an object that avoids every grid hyperplane.
    pub(crate) fn center_coord(&self, j: usize) -> Rational {
        match self {
            FatObject::Ball { center, .. } => center[j].clone(),
            FatObject::AxisBox { lo, hi } => (&lo[j] + &hi[j]) / rat(2, 1),
        }
    }

    /// Whether the object meets the hyperplane `x_j = coord` (closed).
    #[cfg(test)]
    pub(crate) fn meets_coord(&self, j: usize, coord: &Rational) -> bool {
        match self {
            FatObject::Ball { center, radius } => {
                let d = (&center[j] - coord).abs();
                d <= *radius
            }
            FatObject::AxisBox { lo, hi } => &lo[j] <= coord && coord <= &hi[j],
        }
    }

    /// The closed projection of the object onto axis `j`. An axis-aligned
    /// hyperplane `x_j = t` meets the object exactly when `t` lies in this
    /// interval.
    pub(crate) fn extent(&self, j: usize) -> (Rational, Rational) {
        match self {
            FatObject::Ball { center, radius } => (&center[j] - radius, &center[j] + radius),
            FatObject::AxisBox { lo, hi } => (lo[j].clone(), hi[j].clone()),
        }
    }

    /// Whether the object meets the closed box with corners `lo`, `hi`.
    pub(crate) fn meets_closed_box(&self, lo: &[Rational], hi: &[Rational]) -> bool {
        match self {
            FatObject::Ball { center, radius } => {
                // Squared distance from the center to the box (clamping
                // each coordinate) at most the squared radius.
                let mut dist2 = Rational::zero();
                for j in 0..center.len() {
                    let c = &center[j];
                    let delta = if c < &lo[j] {
                        &lo[j] - c
                    } else if c > &hi[j] {
                        c - &hi[j]
                    } else {
                        Rational::zero()
                    };
                    dist2 += &delta * &delta;
                }
                dist2 <= radius * radius
            }
            FatObject::AxisBox { lo: blo, hi: bhi } => {
                for j in 0..blo.len() {
                    if &bhi[j] < &lo[j] || &blo[j] > &hi[j] {
                        return false;
                    }
                }
                true
            }
        }
    }
}

/// Converts an instance into fat objects, with its dimension.
///
/// Disks become 2-balls, rectangles and boxes become axis boxes; grid
/// paths are not fat objects.
pub(crate) fn to_fat_objects(inst: &GeometricInstance) -> Result<(usize, Vec<FatObject>)> {
    match inst {
        GeometricInstance::UnitDisks { radius, centers } => Ok((
            2,
            centers
                .iter()
                .map(|c| FatObject::Ball {
                    center: alloc::vec![c.x.clone(), c.y.clone()],
                    radius: radius.clone(),
                })
                .collect(),
        )),
        GeometricInstance::Disks { disks } => Ok((
            2,
            disks
                .iter()
                .map(|d| FatObject::Ball {
                    center: alloc::vec![d.center.x.clone(), d.center.y.clone()],
                    radius: d.radius.clone(),
                })
                .collect(),
        )),
        GeometricInstance::Rectangles { rects } => Ok((
            2,
            rects
                .iter()
                .map(|r| FatObject::AxisBox {
                    lo: alloc::vec![rat(r.x1, 1), rat(r.y1, 1)],
                    hi: alloc::vec![rat(r.x2, 1), rat(r.y2, 1)],
                })
                .collect(),
        )),
        GeometricInstance::Boxes { d, boxes } => Ok((
            *d,
            boxes
                .iter()
                .map(|b| {
                    let half = rat(1, 2);
                    let lo = (0..*d).map(|j| &b.center[j] - &b.sides[j] * &half).collect();
                    let hi = (0..*d).map(|j| &b.center[j] + &b.sides[j] * &half).collect();
                    FatObject::AxisBox { lo, hi }
                })
                .collect(),
        )),
        GeometricInstance::GridPaths { .. } => {
            Err(Error::UnsupportedKind { op: "fat cover", kind: "grid_paths" })
        }
    }
}
