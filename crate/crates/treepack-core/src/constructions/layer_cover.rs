//! General covers obtained by deleting every `r`-th layer.

use alloc::vec::Vec;

use crate::constructions::{CoverElement, GeneralCover};
use crate::error::Error;
use crate::graph::Graph;
use crate::rational::rat;
use crate::treedec::{merge_components, Layering, TreeDecomposition};
use crate::Result;

/// Builds the `(1 - 1/r)`-general cover whose `m`-th element keeps the
/// vertices in layers with index not congruent to `m` modulo `r`.
///
/// Every vertex is dropped from exactly one of the `r` elements, so it
/// belongs to exactly `r - 1 = (1 - 1/r) * r` of them. Within one element,
/// each connected component of the induced subgraph spans at most `r - 1`
/// consecutive layers; the element's decomposition restricts the input
/// decomposition's bags to each component separately, prunes empty leaves,
/// and joins the parts under a fresh empty-bag root. If each bag-layer cell
/// of the input has independence number at most `ell`, every element bag
/// then has independence number at most `ell * (r - 1)`.
///
/// Errors: `r < 2` is rejected, and the inputs must validate against `g`.
pub fn cover_from_layering(
    g: &Graph,
    td: &TreeDecomposition,
    lay: &Layering,
    r: usize,
) -> Result<GeneralCover> {
    if r < 2 {
        return Err(Error::InvalidParameter("the cover parameter r must be at least 2"));
    }
    crate::treedec::validate_decomposition(g, td).into_result()?;
    lay.validate_for(g)?;

    let mut elements = Vec::with_capacity(r);
    for m in 0..r {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| lay.layer_of(v) % r != m).collect();
        let (sub, back) = g.induced(&keep)?;
        let parts: Vec<(Vec<usize>, TreeDecomposition)> = sub
            .connected_components()
            .into_iter()
            .map(|comp| {
                let host: Vec<usize> = comp.iter().map(|&v| back[v]).collect();
                let part = td.restrict_bags(&host).prune_empty_leaves();
                (host, part)
            })
            .collect();
        let decomposition = merge_components(&parts)?;
        elements.push(CoverElement { vertices: keep, decomposition });
    }
    Ok(GeneralCover { elements, beta: rat((r - 1) as i64, r as i64) })
}
