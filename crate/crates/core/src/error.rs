use thiserror::Error;

use crate::vertex_set::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} outside the ground set [1, {n}]")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("universe size {0} exceeds the supported maximum of {max}", max = crate::vertex_set::MAX_VERTICES)]
    UniverseTooLarge(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("circuit {circuit} has {size} vertices, expected {d}")]
    WrongCircuitSize { circuit: VertexSet, size: usize, d: usize },

    #[error("duplicate set {0}")]
    Duplicate(VertexSet),

    #[error("circuit {0} is not contained in the clutter's vertex set")]
    CircuitOutsideVertexSet(VertexSet),

    #[error("facet {0} is contained in facet {1}")]
    NotAnAntichain(VertexSet, VertexSet),

    #[error("{set} is not a (d-1)-set (d = {d})")]
    NotSubcircuitSize { set: VertexSet, d: usize },

    #[error("element {index} ({element}) is not simplicial over the residual clutter")]
    NotSimplicialElement { index: usize, element: VertexSet },

    #[error("step {index}: {element} is not simplicial")]
    StepNotSimplicial { index: usize, element: VertexSet },

    #[error("step {index}: removed circuit {circuit} does not contain {element} or is not present")]
    StepBadRemoval { index: usize, element: VertexSet, circuit: VertexSet },

    #[error("not a subclutter: {0}")]
    NotASubclutter(String),

    #[error("glue rejected: {0}")]
    GlueRejected(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("monomial ideal is not squarefree")]
    NotSquarefree,

    #[error("monomial ideal is not equigenerated")]
    NotEquigenerated,

    #[error("generators are not minimal: {0}")]
    NotMinimal(String),

    #[error("order is not a permutation of the facets")]
    NotAPermutation,

    #[error("{0} is not a facet")]
    NotAFacet(VertexSet),

    #[error("complex is not a quasi-forest")]
    NotAQuasiForest,

    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("ring dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}
