//! Error type shared by every module in the crate.

use alloc::boxed::Box;
use alloc::string::String;

use crate::rational::Rational;
use crate::treedec::ValidationReport;

/// Everything that can go wrong in this crate.
///
/// Operations that merely *measure* how broken an input is (such as
/// [`crate::treedec::validate_decomposition`]) return a report instead of an
/// error; `Error` is reserved for inputs an operation cannot meaningfully
/// proceed with.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// A vertex id is `>= n` for the graph it should index into.
    VertexOutOfRange {
        /// Offending vertex id.
        vertex: usize,
        /// Number of vertices in the graph.
        n: usize,
    },
    /// An edge `(v, v)` was supplied; graphs here are simple.
    SelfLoop {
        /// The looped vertex.
        vertex: usize,
    },
    /// Tree-decomposition node id out of range.
    NodeOutOfRange {
        /// Offending node id.
        node: usize,
        /// Number of nodes in the tree.
        n_nodes: usize,
    },
    /// The supplied node/edge set is not a tree (connected, acyclic).
    NotATree,
    /// A decomposition failed validation; the report lists every violation.
    InvalidDecomposition(Box<ValidationReport>),
    /// An edge of the graph spans more than adjacent layers.
    InvalidLayering {
        /// The offending edge.
        edge: (usize, usize),
        /// The two layer indices, which differ by more than one.
        layers: (usize, usize),
    },
    /// A bag exceeds the solver's bitmask capacity.
    BagTooLarge {
        /// Size of the offending bag.
        size: usize,
        /// Maximum supported size.
        limit: usize,
    },
    /// An exhaustive routine was asked to search a space above its guard
    /// rail and the caller did not opt in to overriding it.
    SizeGuard {
        /// What was being counted.
        what: &'static str,
        /// Observed count.
        actual: usize,
        /// Guard limit.
        limit: usize,
    },
    /// A family member is empty.
    EmptyMember {
        /// Index of the member in the family.
        index: usize,
    },
    /// A family member does not induce a connected subgraph.
    DisconnectedMember {
        /// Index of the member in the family.
        index: usize,
    },
    /// Weight vector length does not match the universe it weights.
    WeightCount {
        /// Expected length.
        expected: usize,
        /// Observed length.
        actual: usize,
    },
    /// Weights must be nonnegative.
    NegativeWeight {
        /// Index of the offending weight.
        index: usize,
    },
    /// A geometric instance with no objects where at least one is required.
    EmptyInstance,
    /// An object has zero extent and cannot be ranked or rescaled.
    ZeroSizeObject {
        /// Index of the offending object.
        index: usize,
    },
    /// Two geometric objects of different kinds were compared.
    KindMismatch,
    /// The operation is not defined for this instance kind.
    UnsupportedKind {
        /// The operation that was attempted.
        op: &'static str,
        /// The instance kind it was attempted on.
        kind: &'static str,
    },
    /// Distance-`d` packing with odd `d >= 3` is intractable on the graph
    /// classes this crate targets, so the driver refuses it.
    HardDistance {
        /// The requested odd distance.
        d: usize,
    },
    /// A cover element fails coverage or validity requirements.
    InvalidCover {
        /// A vertex covered too few times, if that is the failure.
        vertex: usize,
        /// How many elements contain it.
        count: usize,
        /// How many were required (may be fractional).
        required: Rational,
    },
    /// Vertex sets that must be pairwise disjoint overlap.
    OverlappingParts {
        /// A vertex present in two parts.
        vertex: usize,
    },
    /// A string did not parse as an exact rational.
    InvalidRational(String),
    /// Arithmetic left the supported range.
    Overflow(&'static str),
    /// Catch-all for parameter combinations the operation rejects; the
    /// message says which requirement failed.
    InvalidParameter(&'static str),
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::NodeOutOfRange { node, n_nodes } => {
                write!(f, "tree node {node} out of range for {n_nodes} nodes")
            }
            Error::NotATree => write!(f, "node/edge set does not form a tree"),
            Error::InvalidDecomposition(report) => {
                write!(f, "invalid tree decomposition: {report}")
            }
            Error::InvalidLayering { edge, layers } => write!(
                f,
                "edge ({}, {}) spans layers {} and {}, which are not adjacent",
                edge.0, edge.1, layers.0, layers.1
            ),
            Error::BagTooLarge { size, limit } => {
                write!(f, "bag of size {size} exceeds solver limit {limit}")
            }
            Error::SizeGuard { what, actual, limit } => write!(
                f,
                "{what} count {actual} exceeds exhaustive-search guard {limit} \
                 (pass the override to search anyway)"
            ),
            Error::EmptyMember { index } => write!(f, "family member {index} is empty"),
            Error::DisconnectedMember { index } => {
                write!(f, "family member {index} does not induce a connected subgraph")
            }
            Error::WeightCount { expected, actual } => {
                write!(f, "expected {expected} weights, got {actual}")
            }
            Error::NegativeWeight { index } => write!(f, "weight {index} is negative"),
            Error::EmptyInstance => write!(f, "instance contains no objects"),
            Error::ZeroSizeObject { index } => {
                write!(f, "object {index} has zero size")
            }
            Error::KindMismatch => write!(f, "objects of different kinds cannot intersect"),
            Error::UnsupportedKind { op, kind } => {
                write!(f, "{op} is not defined for {kind} instances")
            }
            Error::HardDistance { d } => write!(
                f,
                "distance-{d} packing is refused: for odd distances >= 3 the problem \
                 is as hard as the general case on these graph classes"
            ),
            Error::InvalidCover { vertex, count, required } => write!(
                f,
                "cover is invalid: vertex {vertex} lies in {count} elements, \
                 but at least {required} are required"
            ),
            Error::OverlappingParts { vertex } => {
                write!(f, "vertex {vertex} appears in more than one part")
            }
            Error::InvalidRational(s) => write!(f, "cannot parse {s:?} as a rational p/q"),
            Error::Overflow(what) => write!(f, "arithmetic overflow computing {what}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
