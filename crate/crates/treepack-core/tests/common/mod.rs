//! Shared helpers for the integration suites: seeded samplers and builders
//! for instances confined to narrow vertical strips, which the public
//! generators do not constrain tightly enough.

#![allow(dead_code)] // each integration test binary uses a subset

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use treepack_core::geometry::{
    ContactMode, GeometricInstance, GridPath, Point2, RectI,
};
use treepack_core::graph::Graph;
use treepack_core::rational::rat;

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub fn below(rng: &mut ChaCha20Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}

pub fn range_i(rng: &mut ChaCha20Rng, lo: i64, hi: i64) -> i64 {
    debug_assert!(lo <= hi);
    lo + below(rng, (hi - lo) as u64 + 1) as i64
}

pub fn range_u(rng: &mut ChaCha20Rng, lo: u64, hi: u64) -> u64 {
    lo + below(rng, hi - lo + 1)
}

/// Paths confined to columns `0..=ell-1` (so the family fits a strip of
/// `ell` columns), with rows free in `0..=extent_y`. Every path gets at
/// least one unit edge.
pub fn narrow_paths(
    seed: u64,
    n: usize,
    ell: i64,
    extent_y: i64,
    mode: ContactMode,
) -> GeometricInstance {
    let mut r = rng(seed);
    let mut paths = Vec::with_capacity(n);
    for _ in 0..n {
        let x0 = range_i(&mut r, 0, ell - 1);
        let y0 = range_i(&mut r, 0, extent_y);
        let mut pts = vec![(x0, y0)];
        let mut horizontal = below(&mut r, 2) == 0;
        for _ in 0..4 {
            let (cx, cy) = *pts.last().unwrap();
            if horizontal {
                let tx = range_i(&mut r, 0, ell - 1);
                if tx != cx {
                    pts.push((tx, cy));
                }
            } else {
                let ty = range_i(&mut r, 0, extent_y);
                if ty != cy {
                    pts.push((cx, ty));
                }
            }
            horizontal = !horizontal;
        }
        if pts.len() == 1 {
            let last = *pts.last().unwrap();
            pts.push((last.0, last.1 + 1));
        }
        paths.push(GridPath::new(pts).unwrap());
    }
    GeometricInstance::GridPaths { mode, paths }
}

/// Rectangles with integer corners, width in `[1, max_w]`, confined so the
/// whole family spans at most `ell` columns (`x1 >= 0`, `x2 <= ell - 1`).
pub fn narrow_rects(
    seed: u64,
    n: usize,
    ell: i64,
    extent_y: i64,
    max_w: i64,
) -> GeometricInstance {
    assert!(ell >= 2, "a width-1 rectangle already spans two columns");
    let mut r = rng(seed);
    let mut rects = Vec::with_capacity(n);
    for _ in 0..n {
        let w = range_i(&mut r, 1, max_w.min(ell - 1));
        let x1 = range_i(&mut r, 0, ell - 1 - w);
        let y1 = range_i(&mut r, 0, extent_y);
        let h = range_i(&mut r, 1, 3);
        rects.push(RectI { x1, y1, x2: x1 + w, y2: y1 + h });
    }
    GeometricInstance::Rectangles { rects }
}

/// Equal disks of integer radius `c >= 1` whose union fits in a rectangle
/// of width `ell - 1`: centers have `max_x - min_x + 2c <= ell - 1`.
/// Coordinates are snapped to halves to stay exact but non-trivial.
pub fn narrow_disks(
    seed: u64,
    n: usize,
    ell: i64,
    c: i64,
    extent_y: i64,
) -> GeometricInstance {
    let span = ell - 1 - 2 * c;
    assert!(span >= 0, "need ell >= 2c + 1 for a nonempty strip");
    let mut r = rng(seed);
    let mut centers = Vec::with_capacity(n);
    for _ in 0..n {
        // x in [0, span], y in [0, extent_y], both in half-integer steps.
        let x = rat(range_i(&mut r, 0, 2 * span), 2);
        let y = rat(range_i(&mut r, 0, 2 * extent_y), 2);
        centers.push(Point2::new(x, y));
    }
    GeometricInstance::UnitDisks { radius: rat(c, 1), centers }
}

/// A family of distinct members of one or two vertices (every vertex as a
/// singleton candidate, every edge as a pair candidate), sampled without
/// replacement down to at most `cap` members.
pub fn k1k2_family(g: &Graph, r: &mut ChaCha20Rng, cap: usize) -> Vec<Vec<usize>> {
    let mut pool: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    for (u, v) in g.edges() {
        pool.push(vec![u, v]);
    }
    // Fisher-Yates, then truncate.
    for i in (1..pool.len()).rev() {
        let j = below(r, (i + 1) as u64) as usize;
        pool.swap(i, j);
    }
    pool.truncate(cap.max(1));
    pool
}
