//! Lifting a layered decomposition to an odd graph power.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::treedec::{Layering, TreeDecomposition};
use crate::Result;

/// Lifts a tree decomposition and layering of `g` to the odd power
/// `g^(1+2d)`.
///
/// Returns the power graph (edges between vertices at distance at most
/// `1 + 2d` in `g`), the decomposition whose bag at node `t` is
/// `{v : dist_g(v, X_t) <= d}` for the input bag `X_t`, and the layering
/// that groups every `1 + 2d` consecutive input layers into one.
///
/// If each input bag-layer cell has independence number at most `k`, each
/// output cell measured in the power graph has independence number at most
/// `(1 + 4d) * k`.
///
/// Errors: `d == 0` is rejected, and the inputs must validate against `g`.
pub fn power_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
    lay: &Layering,
    d: usize,
) -> Result<(Graph, TreeDecomposition, Layering)> {
    if d == 0 {
        return Err(Error::InvalidParameter("the ball radius d must be positive"));
    }
    crate::treedec::validate_decomposition(g, td).into_result()?;
    lay.validate_for(g)?;

    let power = g.power(1 + 2 * d);

    let bags: Vec<Vec<usize>> = td
        .bags()
        .iter()
        .map(|bag| {
            let dist = g.multi_source_distances(bag);
            (0..g.n()).filter(|&v| matches!(dist[v], Some(x) if x <= d)).collect()
        })
        .collect();
    let new_td = TreeDecomposition::new(bags, &td.tree_edges())?;

    let layer_of: Vec<usize> = (0..g.n()).map(|v| lay.layer_of(v) / (1 + 2 * d)).collect();
    Ok((power, new_td, Layering::new(layer_of)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedec::{layered_independence_number, validate_decomposition};

    fn path_graph(n: usize) -> Graph {
        Graph::build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn path_setup(n: usize) -> (Graph, TreeDecomposition, Layering) {
        let g = path_graph(n);
        let bags: Vec<Vec<usize>> = (0..n - 1).map(|i| alloc::vec![i, i + 1]).collect();
        let edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
        let td = TreeDecomposition::new(bags, &edges).unwrap();
        let lay = Layering::new((0..n).collect());
        (g, td, lay)
    }

    #[test]
    fn path_power_is_valid_and_bounded() {
        let (g, td, lay) = path_setup(10);
        let k = layered_independence_number(&g, &td, &lay).unwrap();
        assert_eq!(k, 1);
        for d in [1, 2] {
            let (gp, tdp, layp) = power_decomposition(&g, &td, &lay, d).unwrap();
            // Distance-(1+2d) closure of a path.
            for u in 0..10usize {
                for v in (u + 1)..10 {
                    assert_eq!(gp.has_edge(u, v), v - u <= 1 + 2 * d);
                }
            }
            assert!(validate_decomposition(&gp, &tdp).into_result().is_ok());
            layp.validate_for(&gp).unwrap();
            let kp = layered_independence_number(&gp, &tdp, &layp).unwrap();
            assert!(kp <= (1 + 4 * d) * k, "cell bound violated: {kp} > {}", (1 + 4 * d) * k);
        }
    }

    #[test]
    fn bags_grow_by_balls() {
        let (g, td, lay) = path_setup(6);
        let (_, tdp, _) = power_decomposition(&g, &td, &lay, 1).unwrap();
        // Input bag {2, 3} inflates to its radius-1 ball {1, 2, 3, 4}.
        assert_eq!(td.bag(2), &[2, 3]);
        assert_eq!(tdp.bag(2), &[1, 2, 3, 4]);
    }

    #[test]
    fn large_d_swallows_everything() {
        let (g, td, lay) = path_setup(5);
        let (gp, tdp, layp) = power_decomposition(&g, &td, &lay, 4).unwrap();
        // 1 + 2*4 = 9 is at least the diameter: the power is complete and
        // every bag is everything.
        assert_eq!(gp.edge_count(), 5 * 4 / 2);
        for t in 0..tdp.n_nodes() {
            assert_eq!(tdp.bag(t), &[0, 1, 2, 3, 4]);
        }
        assert_eq!(layp.used_layers(), alloc::vec![0]);
        assert_eq!(
            layered_independence_number(&gp, &tdp, &layp).unwrap(),
            1,
            "complete graph has unit independence"
        );
    }

    #[test]
    fn rejects_zero_d_and_bad_inputs() {
        let (g, td, lay) = path_setup(5);
        assert!(matches!(
            power_decomposition(&g, &td, &lay, 0),
            Err(Error::InvalidParameter(_))
        ));
        let short = Layering::new(alloc::vec![0, 0]);
        assert!(power_decomposition(&g, &td, &short, 1).is_err());
    }
}
