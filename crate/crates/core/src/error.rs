use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension {0} out of range (supported: 1..=64)")]
    AmbientOutOfRange(usize),

    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("invalid sign vector entry {0}")]
    InvalidEntry(i64),

    #[error("face dimension {k} out of range 0..={max}")]
    DimensionOutOfRange { k: usize, max: usize },

    #[error("vertex {vertex} outside vertex range 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is already a vertex of the complex")]
    VertexPresent(usize),

    #[error("complex is not pure")]
    NotPure,

    #[error("complex is empty")]
    EmptyComplex,

    #[error("complex too large: {0}")]
    TooLarge(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("fissure precondition violated: {0}")]
    Fissure(String),

    #[error("{0} is not a vertex of the complex")]
    NotAVertex(String),

    #[error("{0} is not an edge of the complex")]
    NotAnEdge(String),

    #[error("face count {count} exceeds homology cap {cap}")]
    HomologyCapExceeded { count: usize, cap: usize },

    #[error("isomorphism search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),

    #[error("not a closed surface: {0}")]
    NotASurface(String),

    #[error("genus mismatch: closed form {closed_form}, from Euler characteristic {from_euler}")]
    GenusMismatch { closed_form: i128, from_euler: i128 },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Bbc(#[from] BbcError),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Violations reported by BBC sequence validation. The index is the `i` of
/// the offending ball `T_i`, where `T_i` lives on the vertices `1..=i`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BbcError {
    #[error("APEX_MISSING({0}): some facet of T_{0} does not contain its apex")]
    ApexMissing(usize),

    #[error("B_NOT_IN_BOUNDARY({0}): the base of T_{0} is not contained in the boundary of its predecessor")]
    BNotInBoundary(usize),

    #[error("NOT_PURE({0}): T_{0} is not pure of the expected dimension")]
    NotPure(usize),

    #[error("WRONG_VERTEX_RANGE({0}): T_{0} does not live on exactly its vertex range")]
    WrongVertexRange(usize),

    #[error("BBC sequences need n > d > 2 (got d = {d}, n = {n})")]
    BadParameters { d: usize, n: usize },
}
