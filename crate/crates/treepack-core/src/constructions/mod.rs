//! Concrete decompositions and covers for geometric intersection graphs.
//!
//! Every function here builds a [`TreeDecomposition`] (possibly with a
//! [`Layering`], possibly bundled into a [`GeneralCover`]) for the
//! intersection graph of a geometric instance, by direct geometric
//! construction rather than search. Each construction guarantees a bound on
//! the (layered) independence number of its bags; the bounds are stated on
//! the individual functions.

mod fat_cover;
mod grid_paths;
mod layer_cover;
mod narrow_strip;
mod power;
mod unit_disk;

pub use fat_cover::{fat_cover, fat_shift_count, grid_ratio, RankedGridSystem};
pub use grid_paths::grid_path_layered_decomposition;
pub use layer_cover::cover_from_layering;
pub use narrow_strip::narrow_strip_decomposition;
pub use power::power_decomposition;
pub use unit_disk::unit_disk_layered_decomposition;

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::rational::{rat_u, Rational};
use crate::treedec::{validate_on_subset, TreeDecomposition};
use crate::Result;

/// One element of a general cover: a vertex subset together with a tree
/// decomposition of the subgraph it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverElement {
    /// The vertices of the element, sorted and deduplicated.
    pub vertices: Vec<usize>,
    /// A tree decomposition of the subgraph induced on `vertices`. Bags are
    /// written in the host graph's vertex ids.
    pub decomposition: TreeDecomposition,
}

/// A β-general cover of a graph: a multiset of cover elements such that
/// every vertex belongs to at least `beta * |elements|` of them.
///
/// Elements with empty vertex sets are kept — the count `|elements|` in the
/// coverage condition deliberately includes them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralCover {
    /// The elements, in construction order.
    pub elements: Vec<CoverElement>,
    /// The coverage fraction β in `[0, 1]`.
    pub beta: Rational,
}

impl GeneralCover {
    /// Largest independence number over all bags of all elements, measured
    /// on the host graph.
    pub fn independence_number(&self, g: &Graph) -> usize {
        let mut best = 0;
        for el in &self.elements {
            for bag in el.decomposition.bags() {
                best = best.max(crate::treedec::mis_size_subset(g, bag));
            }
        }
        best
    }

    /// Checks the cover against its host graph: every element's
    /// decomposition must be a valid decomposition of the subgraph induced
    /// on its vertex set, and every vertex of `g` must belong to at least
    /// `beta * |elements|` elements.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for el in &self.elements {
            for w in el.vertices.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidParameter(
                        "cover element vertices must be sorted and distinct",
                    ));
                }
            }
            if let Some(&v) = el.vertices.last() {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
                }
            }
            validate_on_subset(g, &el.vertices, &el.decomposition).into_result()?;
        }
        let required = &self.beta * rat_u(self.elements.len() as u64);
        let mut count = alloc::vec![0usize; g.n()];
        for el in &self.elements {
            for &v in &el.vertices {
                count[v] += 1;
            }
        }
        for (v, &c) in count.iter().enumerate() {
            if rat_u(c as u64) < required {
                return Err(Error::InvalidCover { vertex: v, count: c, required });
            }
        }
        Ok(())
    }
}
