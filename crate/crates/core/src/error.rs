use alloc::string::String;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a simplicial complex needs at least one vertex")]
    EmptyComplex,
    #[error("complexes are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("vertex {vertex} is outside 1..={vertex_count}")]
    VertexOutOfRange { vertex: u32, vertex_count: usize },
    #[error("facet list contains an empty facet")]
    EmptyFacet,
    #[error("vertex {0} appears in no facet")]
    GhostVertex(u32),
    #[error("full subcomplex requested on the empty vertex set")]
    EmptySubset,
    #[error("vertex {0} is dominating; the pushout step would not shrink the complex")]
    DominatingVertex(u32),
    #[error("complex is {actual}-neighbourly but {required}-neighbourly is required")]
    NeighbourlinessHypothesisNotMet { required: usize, actual: usize },
    #[error("the deficit is undefined for a simplex")]
    SimplexExcluded,
    #[error("oracle limited to {max} vertices, got {got}")]
    OracleScaleExceeded { got: usize, max: usize },
    #[error("connectivity {connectivity} exceeds dimension {dimension}")]
    ConnectivityExceedsDimension { dimension: usize, connectivity: usize },
    #[error("Hall basis limited to {max} letters, got {got}")]
    TooManyLetters { got: usize, max: usize },
    #[error("degree cutoff {got} exceeds the maximum {max}")]
    DegreeCutoffTooLarge { got: usize, max: usize },
    #[error("letter weights must be positive")]
    NonPositiveWeight,
    #[error("enumeration would produce more than {limit} elements")]
    EnumerationTooLarge { limit: usize },
    #[error("invalid space atom: {0}")]
    InvalidAtom(String),
    #[error("the wedge has no letters")]
    EmptyWedge,
    #[error("the smash word is empty")]
    EmptyWord,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("coefficients in F_{field} are incompatible with {found}-primary torsion")]
    IncompatibleField { field: u64, found: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;
