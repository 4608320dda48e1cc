//! Seeded validity and bound sweeps for all six constructions: every
//! emitted decomposition/layering must validate, and the advertised
//! independence bounds must hold exactly, or the run fails.

mod common;

use common::{narrow_disks, narrow_paths, narrow_rects};
use treepack_core::constructions::{
    cover_from_layering, fat_cover, grid_path_layered_decomposition, grid_ratio,
    narrow_strip_decomposition, power_decomposition, unit_disk_layered_decomposition,
};
use treepack_core::generators::{bfs_layering, generate, random_graph, GenKind, GenSpec};
use treepack_core::geometry::{
    fatness_constant, intersection_graph, ContactMode, FatKind,
};
use treepack_core::rational::{rat, rat_u};
use treepack_core::treedec::{
    independence_number, layered_independence_number, validate_decomposition,
};

const SEEDS: u64 = 100;

fn mode_for(seed: u64) -> ContactMode {
    if seed % 2 == 0 {
        ContactMode::Vertex
    } else {
        ContactMode::Edge
    }
}

#[test]
fn unit_disk_layered_is_valid_and_bounded_by_eight() {
    for seed in 0..SEEDS {
        let n = 10 + (seed as usize * 7) % 91; // up to 100
        let spec = GenSpec {
            kind: GenKind::UnitDisks { radius: rat(1 + (seed % 3) as i64, 2) },
            n,
            extent: (n as u64) / 2 + 4,
            seed,
        };
        let inst = generate(&spec).unwrap();
        let g = intersection_graph(&inst);
        let (td, lay) = unit_disk_layered_decomposition(&inst).unwrap();
        validate_decomposition(&g, &td).into_result().unwrap();
        lay.validate_for(&g).unwrap();
        let cell = layered_independence_number(&g, &td, &lay).unwrap();
        assert!(cell <= 8, "seed {}: cell independence {} > 8", seed, cell);
    }
}

#[test]
fn grid_path_layered_is_valid_and_bounded() {
    for seed in 0..SEEDS {
        let ell = 1 + (seed % 3); // 1, 2, 3
        let n = 10 + (seed as usize * 11) % 91;
        let spec = GenSpec {
            kind: GenKind::GridPaths {
                mode: mode_for(seed),
                max_bends: if ell == 1 { 0 } else { 4 },
                horizontal_budget: ell - 1,
                require_edge: true,
            },
            n,
            extent: (n as u64) / 2 + 6,
            seed,
        };
        let inst = generate(&spec).unwrap();
        let g = intersection_graph(&inst);
        let (td, lay) = grid_path_layered_decomposition(&inst, ell).unwrap();
        validate_decomposition(&g, &td).into_result().unwrap();
        lay.validate_for(&g).unwrap();
        let cell = layered_independence_number(&g, &td, &lay).unwrap();
        let bound = (4 * ell - 1) as usize;
        assert!(cell <= bound, "seed {}: ell {}: {} > {}", seed, ell, cell, bound);
    }
}

#[test]
fn narrow_strip_paths_are_valid_and_bounded() {
    for seed in 0..SEEDS {
        let ell = 1 + (seed % 3) as i64; // 1, 2, 3
        let n = 8 + (seed as usize * 5) % 53;
        let mode = mode_for(seed);
        let inst = narrow_paths(seed, n, ell, 30, mode);
        let g = intersection_graph(&inst);
        let td = narrow_strip_decomposition(&inst, ell as u64).unwrap();
        validate_decomposition(&g, &td).into_result().unwrap();
        let alpha = independence_number(&g, &td).unwrap();
        let bound = match mode {
            ContactMode::Vertex => ell as usize,
            ContactMode::Edge => (3 * ell - 1) as usize,
        };
        assert!(alpha <= bound, "seed {}: ell {}: {} > {}", seed, ell, alpha, bound);
    }
}

#[test]
fn narrow_strip_rects_are_valid_and_bounded() {
    for seed in 0..SEEDS {
        let ell = 2 + (seed % 3) as i64; // 2, 3, 4
        let n = 8 + (seed as usize * 5) % 53;
        let inst = narrow_rects(seed, n, ell, 40, 3);
        let g = intersection_graph(&inst);
        let td = narrow_strip_decomposition(&inst, ell as u64).unwrap();
        validate_decomposition(&g, &td).into_result().unwrap();
        let alpha = independence_number(&g, &td).unwrap();
        let bound = (ell / 2) as usize;
        assert!(alpha <= bound, "seed {}: ell {}: {} > {}", seed, ell, alpha, bound);
    }
}

#[test]
fn narrow_strip_disks_are_valid_and_bounded() {
    for seed in 0..SEEDS {
        let (ell, c) = [(8, 1), (8, 2), (12, 2)][(seed % 3) as usize];
        let n = 8 + (seed as usize * 5) % 53;
        let inst = narrow_disks(seed, n, ell, c, 40);
        let g = intersection_graph(&inst);
        let td = narrow_strip_decomposition(&inst, ell as u64).unwrap();
        validate_decomposition(&g, &td).into_result().unwrap();
        let alpha = independence_number(&g, &td).unwrap();
        // ceil(ell / c) via integer arithmetic.
        let bound = 2 * ((ell + c - 1) / c) as usize;
        assert!(alpha <= bound, "seed {}: ell {} c {}: {} > {}", seed, ell, c, alpha, bound);
    }
}

#[test]
fn power_decomposition_is_valid_and_bounded() {
    for seed in 0..SEEDS {
        let d = 1 + (seed as usize % 2); // 1, 2
        let n = 10 + (seed as usize * 3) % 51;
        let spec = GenSpec {
            kind: GenKind::UnitDisks { radius: rat(1, 1) },
            n,
            extent: (n as u64) / 2 + 4,
            seed,
        };
        let inst = generate(&spec).unwrap();
        let g = intersection_graph(&inst);
        let (td, lay) = unit_disk_layered_decomposition(&inst).unwrap();
        let k = layered_independence_number(&g, &td, &lay).unwrap();
        let (pg, ptd, play) = power_decomposition(&g, &td, &lay, d).unwrap();
        validate_decomposition(&pg, &ptd).into_result().unwrap();
        play.validate_for(&pg).unwrap();
        let cell = layered_independence_number(&pg, &ptd, &play).unwrap();
        let bound = (1 + 4 * d) * k;
        assert!(cell <= bound, "seed {}: d {}: {} > {}", seed, d, cell, bound);
    }
}

#[test]
fn cover_from_layering_is_valid_bounded_and_covers_exactly() {
    for seed in 0..SEEDS {
        let r = 2 + (seed as usize % 5); // 2..=6
        let n = 10 + (seed as usize * 3) % 51;
        let spec = GenSpec {
            kind: GenKind::UnitDisks { radius: rat(1, 1) },
            n,
            extent: (n as u64) / 2 + 4,
            seed,
        };
        let inst = generate(&spec).unwrap();
        let g = intersection_graph(&inst);
        let (td, lay) = unit_disk_layered_decomposition(&inst).unwrap();
        let ell = layered_independence_number(&g, &td, &lay).unwrap();
        let cover = cover_from_layering(&g, &td, &lay, r).unwrap();
        cover.validate(&g).unwrap();
        assert_eq!(cover.elements.len(), r, "seed {}", seed);
        assert_eq!(cover.beta, rat((r - 1) as i64, r as i64), "seed {}", seed);
        // Membership: every vertex sits in exactly r - 1 of the r elements.
        for v in 0..g.n() {
            let count = cover
                .elements
                .iter()
                .filter(|el| el.vertices.binary_search(&v).is_ok())
                .count();
            assert_eq!(count, r - 1, "seed {}: vertex {}", seed, v);
        }
        let alpha = cover.independence_number(&g);
        let bound = ell * (r - 1);
        assert!(alpha <= bound, "seed {}: r {}: {} > {}", seed, r, alpha, bound);
    }
}

#[test]
fn cover_from_layering_covers_abstract_graphs_too() {
    // The layering cover is purely graph-theoretic; exercise it away from
    // geometry with BFS layerings of random graphs.
    for seed in 0..SEEDS {
        let r = 2 + (seed as usize % 5);
        let n = 8 + (seed as usize) % 33;
        let g = random_graph(n, &rat(1, 4), seed).unwrap();
        let td = treepack_core::generators::random_tree_decomposition(&g, seed + 999).unwrap();
        let lay = bfs_layering(&g).unwrap();
        let cover = cover_from_layering(&g, &td, &lay, r).unwrap();
        cover.validate(&g).unwrap();
        for v in 0..g.n() {
            let count = cover
                .elements
                .iter()
                .filter(|el| el.vertices.binary_search(&v).is_ok())
                .count();
            assert_eq!(count, r - 1, "seed {}: vertex {}", seed, v);
        }
    }
}

#[test]
fn fat_cover_is_valid_bounded_and_covers_enough() {
    for seed in 0..SEEDS {
        let r0 = 2 + (seed % 2); // 2, 3
        let n = 6 + (seed as usize * 3) % 45;
        // Alternate between disks (balls) and rectangles (boxes, aspect <= 3:
        // widths and heights in [1, 3]).
        let use_disks = seed % 2 == 0;
        let (inst, profile) = if use_disks {
            let spec = GenSpec {
                kind: GenKind::Disks { min_radius: rat(1, 2), max_radius: rat(3, 2) },
                n,
                extent: (n as u64) + 4,
                seed,
            };
            (generate(&spec).unwrap(), fatness_constant(FatKind::Balls, 2, &rat(1, 1)).unwrap())
        } else {
            let spec = GenSpec {
                kind: GenKind::Rectangles { min_width: 1, max_width: 3, max_height: 3 },
                n,
                extent: (n as u64) + 4,
                seed,
            };
            (generate(&spec).unwrap(), fatness_constant(FatKind::Boxes, 2, &rat(3, 1)).unwrap())
        };
        let g = intersection_graph(&inst);
        let cover = fat_cover(&inst, &profile, r0).unwrap();
        cover.validate(&g).unwrap();
        assert_eq!(cover.beta, rat((r0 - 1) as i64, r0 as i64), "seed {}", seed);
        // Coverage fraction >= 1 - 1/r0 for every vertex.
        let total = cover.elements.len();
        for v in 0..g.n() {
            let count = cover
                .elements
                .iter()
                .filter(|el| el.vertices.binary_search(&v).is_ok())
                .count();
            assert!(
                rat_u(count as u64) >= &cover.beta * rat_u(total as u64),
                "seed {}: vertex {} in {}/{} elements",
                seed,
                v,
                count,
                total
            );
        }
        // Independence bound c * f(r0)^(2d) with d = 2.
        let f = grid_ratio(r0, 2).unwrap();
        let bound = profile.c as usize * (f as usize).pow(4);
        let alpha = cover.independence_number(&g);
        assert!(alpha <= bound, "seed {}: {} > {}", seed, alpha, bound);
        // Every element's decomposition has at most n + 1 nodes.
        for el in &cover.elements {
            assert!(el.decomposition.n_nodes() <= g.n() + 1, "seed {}", seed);
        }
    }
}
