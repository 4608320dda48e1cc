//! Hand-built fixture instances with verified facts, for tests and demos.
//!
//! Each fixture carries a small list of named integer facts (vertex counts,
//! optimum weights under unit weights, edge counts) that were checked by
//! hand and are frozen by the test suite against independent solvers.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::Result;
use crate::geometry::{intersection_graph, ContactMode, GeometricInstance, GridPath, Point2};
use crate::graph::Graph;
use crate::rational::rat;

/// Payload of a fixture: an abstract graph or a geometric instance.
#[derive(Debug, Clone)]
pub enum FixtureData {
    /// A bare graph.
    Graph(Graph),
    /// A geometric instance; its graph is the intersection graph.
    Instance(GeometricInstance),
}

/// A named test case with hand-verified facts.
#[derive(Debug, Clone)]
pub struct Fixture {
    /// Registry name.
    pub name: &'static str,
    /// The object itself.
    pub data: FixtureData,
    /// `(key, value)` facts, e.g. `("mwis_unit", 2)`.
    pub facts: Vec<(&'static str, i64)>,
}

impl Fixture {
    /// The fixture's graph (the intersection graph for geometric data).
    pub fn graph(&self) -> Graph {
        match &self.data {
            FixtureData::Graph(g) => g.clone(),
            FixtureData::Instance(inst) => intersection_graph(inst),
        }
    }

    /// Looks up a fact by key.
    pub fn fact(&self, key: &str) -> Option<i64> {
        self.facts.iter().find(|(k, _)| *k == key).map(|&(_, v)| v)
    }
}

/// Names accepted by [`fixture`], in registry order.
pub fn fixture_names() -> &'static [&'static str] {
    &["c5", "k33", "p4", "p6", "p10", "tangent_chain_10", "k44_vpg"]
}

/// Returns the named fixture.
pub fn fixture(name: &str) -> Result<Fixture> {
    match name {
        "c5" => {
            let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?;
            Ok(Fixture {
                name: "c5",
                data: FixtureData::Graph(g),
                facts: vec![("n", 5), ("edges", 5), ("mwis_unit", 2)],
            })
        }
        "k33" => {
            let mut edges = Vec::new();
            for a in 0..3 {
                for b in 3..6 {
                    edges.push((a, b));
                }
            }
            let g = Graph::build(6, &edges)?;
            Ok(Fixture {
                name: "k33",
                data: FixtureData::Graph(g),
                facts: vec![("n", 6), ("edges", 9), ("mwis_unit", 3)],
            })
        }
        "p4" => path_fixture("p4", 4, 2),
        "p6" => path_fixture("p6", 6, 3),
        "p10" => path_fixture("p10", 10, 5),
        "tangent_chain_10" => {
            // Ten unit-radius disks centered at (0,0), (2,0), ..., (18,0):
            // consecutive disks touch, others stay apart, so the graph is a
            // ten-vertex path and the unit-weight optimum is 5.
            let centers = (0..10)
                .map(|i| Point2::new(rat(2 * i, 1), rat(0, 1)))
                .collect();
            let inst = GeometricInstance::UnitDisks { radius: rat(1, 1), centers };
            Ok(Fixture {
                name: "tangent_chain_10",
                data: FixtureData::Instance(inst),
                facts: vec![("n", 10), ("edges", 9), ("mwis_unit", 5)],
            })
        }
        "k44_vpg" => {
            // Four horizontal row paths (y = 0..3) and four vertical column
            // paths (x = 0..3) on a 4x4 grid. Every row crosses every column
            // at one grid point, rows never meet rows, columns never meet
            // columns: under vertex contact this is exactly K_{4,4}.
            let mut paths = Vec::new();
            for y in 0..4 {
                paths.push(GridPath::new(vec![(0, y), (3, y)])?);
            }
            for x in 0..4 {
                paths.push(GridPath::new(vec![(x, 0), (x, 3)])?);
            }
            let inst = GeometricInstance::GridPaths { mode: ContactMode::Vertex, paths };
            Ok(Fixture {
                name: "k44_vpg",
                data: FixtureData::Instance(inst),
                facts: vec![("n", 8), ("edges", 16), ("mwis_unit", 4)],
            })
        }
        _ => Err(Error::InvalidParameter("unknown fixture name")),
    }
}

/// A path graph on `n` vertices with its unit-weight optimum.
fn path_fixture(name: &'static str, n: usize, opt: i64) -> Result<Fixture> {
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    let g = Graph::build(n, &edges)?;
    Ok(Fixture {
        name,
        data: FixtureData::Graph(g),
        facts: vec![("n", n as i64), ("edges", (n - 1) as i64), ("mwis_unit", opt)],
    })
}
