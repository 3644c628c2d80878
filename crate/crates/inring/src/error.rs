use thiserror::Error;

/// Everything that can go wrong in this crate. Kept as a single enum; the
/// crate is small and callers mostly just print these.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty ring spec")]
    EmptySpec,

    #[error("bad ring spec near `{0}`: expected F or C<k> with k >= 1")]
    Syntax(String),

    #[error("spec describes {got} ideals, above the limit of {limit}")]
    OverflowingSpec { got: u128, limit: u64 },

    #[error("ideal vectors disagree on component count")]
    LengthMismatch,

    #[error("vector is not a vertex of this ring's graph")]
    BadVertex,

    #[error("vertex index {0} out of range")]
    BadIndex(usize),

    #[error("complement would be a trivial ideal, which is not a vertex")]
    NoComplementVertex,

    #[error("component {0} is not a field")]
    NotAField(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is a member of the landmark set")]
    VertexInSet(usize),

    #[error("work budget exceeded")]
    BudgetExceeded,

    #[error("spec is not covered by any closed form")]
    OutOfTheoremScope,

    #[error("bad graph json: {0}")]
    BadGraphJson(String),
}
