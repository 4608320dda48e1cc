//! Contact-row decompositions for axis-parallel grid paths.

use alloc::vec::Vec;

use crate::error::Error;
use crate::geometry::{paths_intersect, ContactMode, GeometricInstance, GridPath};
use crate::treedec::{Layering, TreeDecomposition};
use crate::Result;

/// Builds a path decomposition from contact rows.
///
/// `rows` lists every contact row (duplicates allowed); `spans[v]` is the
/// smallest and largest contact row of vertex `v`. The tree is a path over
/// the distinct rows sorted by decreasing value, and the bag of a row `y`
/// holds every vertex `v` with `spans[v].0 <= y <= spans[v].1` — each
/// vertex fills the whole interval of rows between its extreme contacts,
/// which makes traces contiguous and puts both endpoints of every edge in
/// the bag of their shared contact row.
pub(super) fn rows_decomposition(mut rows: Vec<i64>, spans: &[(i64, i64)]) -> TreeDecomposition {
    rows.sort_unstable_by(|a, b| b.cmp(a));
    rows.dedup();
    if rows.is_empty() {
        return TreeDecomposition::new(alloc::vec![Vec::new()], &[])
            .expect("a single node is a tree");
    }
    let bags: Vec<Vec<usize>> = rows
        .iter()
        .map(|&y| {
            (0..spans.len()).filter(|&v| spans[v].0 <= y && y <= spans[v].1).collect()
        })
        .collect();
    let edges: Vec<(usize, usize)> = (1..bags.len()).map(|t| (t - 1, t)).collect();
    TreeDecomposition::new(bags, &edges).expect("a path over rows is a tree")
}

/// The lexicographically smallest grid point shared by two sorted point
/// lists, if any.
fn first_common(a: &[(i64, i64)], b: &[(i64, i64)]) -> Option<(i64, i64)> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

/// The contact-row decomposition of a set of grid paths under a contact
/// mode.
///
/// Every adjacent pair `{u, v}` contributes the contact point `p_uv`, the
/// lexicographically smallest grid point the two paths share; every path
/// contributes a self-contact at its lexicographically smallest point. The
/// decomposition is the row decomposition of these contacts (see
/// [`rows_decomposition`]), with at most one node per ordered contact —
/// `O(n^2)` nodes.
pub(super) fn paths_row_decomposition(paths: &[GridPath], mode: ContactMode) -> TreeDecomposition {
    let n = paths.len();
    let points: Vec<Vec<(i64, i64)>> = paths.iter().map(GridPath::grid_points).collect();
    let mut rows: Vec<i64> = Vec::new();
    let mut spans: Vec<(i64, i64)> = Vec::with_capacity(n);
    for v in 0..n {
        let self_row = points[v][0].1;
        rows.push(self_row);
        spans.push((self_row, self_row));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !paths_intersect(&paths[u], &paths[v], mode) {
                continue;
            }
            let p = first_common(&points[u], &points[v])
                .expect("adjacent paths share a grid point in either mode");
            rows.push(p.1);
            for w in [u, v] {
                spans[w].0 = spans[w].0.min(p.1);
                spans[w].1 = spans[w].1.max(p.1);
            }
        }
    }
    rows_decomposition(rows, &spans)
}

/// A path decomposition plus layering for the intersection graph of grid
/// paths whose horizontal parts span at most `ell` columns each.
///
/// The decomposition is the contact-row construction
/// ([`paths_row_decomposition`]); the layer of a path is
/// `floor(min_x / (2 * ell))` for its smallest column `min_x`, shifted so
/// the smallest layer in use is 0. Two adjacent paths share a grid point,
/// so their smallest columns differ by less than `2 * ell` and the layering
/// is valid.
///
/// Within one bag and one layer, every path meets the contact row's
/// horizontal line inside a window of fewer than `3 * ell` columns, which
/// caps the independence number of each such cell at `4 * ell - 1` (for
/// vertex contact, and for edge contact when every path has at least one
/// grid edge).
///
/// Errors: [`Error::InvalidParameter`] when `ell == 0` or some path spans
/// more than `ell` columns, [`Error::UnsupportedKind`] for non-path
/// instances.
pub fn grid_path_layered_decomposition(
    inst: &GeometricInstance,
    ell: u64,
) -> Result<(TreeDecomposition, Layering)> {
    let (mode, paths) = match inst {
        GeometricInstance::GridPaths { mode, paths } => (*mode, paths),
        other => {
            return Err(Error::UnsupportedKind {
                op: "grid_path_layered_decomposition",
                kind: other.kind_name(),
            })
        }
    };
    if ell == 0 {
        return Err(Error::InvalidParameter("the column bound ell must be at least 1"));
    }
    let ell = i64::try_from(ell).map_err(|_| Error::Overflow("column bound"))?;
    let mut min_cols = Vec::with_capacity(paths.len());
    for p in paths {
        let (lo, hi) = crate::geometry::horizontal_part(p);
        if hi - lo > ell - 1 {
            return Err(Error::InvalidParameter(
                "a path's horizontal part spans more than ell columns",
            ));
        }
        min_cols.push(lo);
    }
    let td = paths_row_decomposition(paths, mode);
    let raw: Vec<i64> = min_cols.iter().map(|c| c.div_euclid(2 * ell)).collect();
    let offset = raw.iter().copied().min().unwrap_or(0);
    let layer_of = raw.iter().map(|&r| (r - offset) as usize).collect();
    Ok((td, Layering::new(layer_of)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::intersection_graph;
    use crate::treedec::{layered_independence_number, validate_decomposition};

    fn path(pts: &[(i64, i64)]) -> GridPath {
        GridPath::new(pts.to_vec()).unwrap()
    }

    fn instance(mode: ContactMode, paths: Vec<GridPath>) -> GeometricInstance {
        GeometricInstance::GridPaths { mode, paths }
    }

    #[test]
    fn crossing_paths_vertex_mode() {
        // A horizontal path crossed by three vertical ones.
        let paths = alloc::vec![
            path(&[(0, 0), (6, 0)]),
            path(&[(1, -2), (1, 2)]),
            path(&[(3, -1), (3, 3)]),
            path(&[(5, -2), (5, 1)]),
        ];
        let inst = instance(ContactMode::Vertex, paths);
        let g = intersection_graph(&inst);
        assert_eq!(g.edge_count(), 3);
        let (td, lay) = grid_path_layered_decomposition(&inst, 7).unwrap();
        assert!(validate_decomposition(&g, &td).into_result().is_ok());
        lay.validate_for(&g).unwrap();
        let li = layered_independence_number(&g, &td, &lay).unwrap();
        assert!(li <= 4 * 7 - 1);
    }

    #[test]
    fn edge_mode_distinguishes_point_contact() {
        // Two L-shaped paths sharing only a corner point: adjacent in
        // vertex mode, independent in edge mode.
        let a = path(&[(0, 0), (2, 0), (2, 2)]);
        let b = path(&[(2, 0), (4, 0)]);
        let c = path(&[(2, 2), (2, 4)]);
        let vertex_inst = instance(ContactMode::Vertex, alloc::vec![a.clone(), c.clone()]);
        let edge_inst = instance(ContactMode::Edge, alloc::vec![a.clone(), b, c]);
        assert_eq!(intersection_graph(&vertex_inst).edge_count(), 1);
        let ge = intersection_graph(&edge_inst);
        // `a` shares the edge (2,0)-(3,0)? No: `b` runs (2,0)..(4,0) and `a`
        // only touches (2,0); `a`-`c` share the edge (2,2)-(2,3)? `c` starts
        // at (2,2) going up, `a` ends at (2,2): no shared unit edge either.
        assert_eq!(ge.edge_count(), 0);
        for inst in [&vertex_inst, &edge_inst] {
            let g = intersection_graph(inst);
            let (td, lay) = grid_path_layered_decomposition(inst, 5).unwrap();
            assert!(validate_decomposition(&g, &td).into_result().is_ok());
            lay.validate_for(&g).unwrap();
        }
    }

    #[test]
    fn layers_follow_min_column() {
        // ell = 1: only vertical paths allowed; layers are floor(x / 2).
        let paths = alloc::vec![
            path(&[(0, 0), (0, 3)]),
            path(&[(1, 0), (1, 3)]),
            path(&[(2, 0), (2, 3)]),
            path(&[(5, 0), (5, 3)]),
        ];
        let inst = instance(ContactMode::Vertex, paths);
        let (_, lay) = grid_path_layered_decomposition(&inst, 1).unwrap();
        assert_eq!(lay.as_slice(), &[0, 0, 1, 2]);
    }

    #[test]
    fn negative_columns_shift_layers_to_zero() {
        let paths = alloc::vec![path(&[(-7, 0), (-7, 2)]), path(&[(3, 0), (3, 2)])];
        let inst = instance(ContactMode::Vertex, paths);
        let (_, lay) = grid_path_layered_decomposition(&inst, 2).unwrap();
        // Raw layers floor(-7/4) = -2 and floor(3/4) = 0 shift to 0 and 2.
        assert_eq!(lay.as_slice(), &[0, 2]);
    }

    #[test]
    fn rejects_wide_paths_and_bad_parameters() {
        let wide = instance(ContactMode::Vertex, alloc::vec![path(&[(0, 0), (3, 0)])]);
        assert!(matches!(
            grid_path_layered_decomposition(&wide, 3),
            Err(Error::InvalidParameter(_))
        ));
        assert!(grid_path_layered_decomposition(&wide, 4).is_ok());
        assert!(matches!(
            grid_path_layered_decomposition(&wide, 0),
            Err(Error::InvalidParameter(_))
        ));
        let rects = GeometricInstance::Rectangles { rects: alloc::vec![] };
        assert!(matches!(
            grid_path_layered_decomposition(&rects, 3),
            Err(Error::UnsupportedKind { .. })
        ));
    }

    #[test]
    fn empty_instance_gives_single_empty_bag() {
        let inst = instance(ContactMode::Vertex, alloc::vec![]);
        let (td, lay) = grid_path_layered_decomposition(&inst, 2).unwrap();
        assert_eq!(td.n_nodes(), 1);
        assert!(td.bag(0).is_empty());
        assert!(lay.is_empty());
    }

    #[test]
    fn shared_tail_paths_edge_mode() {
        // Paths overlapping along a whole segment: adjacent in both modes.
        let a = path(&[(0, 0), (4, 0)]);
        let b = path(&[(2, 0), (6, 0), (6, 2)]);
        let inst = instance(ContactMode::Edge, alloc::vec![a, b]);
        let g = intersection_graph(&inst);
        assert_eq!(g.edge_count(), 1);
        let (td, _) = grid_path_layered_decomposition(&inst, 7).unwrap();
        assert!(validate_decomposition(&g, &td).into_result().is_ok());
    }
}
