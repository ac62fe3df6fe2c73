use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generators have mismatched degrees ({expected} vs {found})")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("image list is not a permutation of 0..{degree}")]
    NotAPermutation { degree: usize },

    #[error("group order exceeds the configured cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("unknown catalog group `{0}`")]
    UnknownCatalogName(String),

    #[error("invalid parameters for catalog group `{name}`: {reason}")]
    InvalidCatalogParams { name: String, reason: String },

    #[error("{relation} orthogonality violated at ({i}, {j})")]
    OrthogonalityViolation {
        relation: &'static str,
        i: usize,
        j: usize,
    },

    #[error("conjugate of Irr(N) row {row} under generator {generator} matches no row")]
    ActionInconsistent { row: usize, generator: usize },

    #[error("row {row} is not in block {block}")]
    BadRepresentative { row: usize, block: usize },

    #[error("expected {expected} representatives, got {found}")]
    RepresentativeCount { expected: usize, found: usize },

    #[error("relation for block {block} is not integral: {what}")]
    NonIntegralRelation { block: usize, what: String },

    #[error("no (e, t, d) solution for block {block}")]
    NoSolution { block: usize },

    #[error("block {block} matches no orbit of Irr(N)")]
    BlockOrbitMismatch { block: usize },

    #[error("{0} is singular")]
    Singular(&'static str),

    #[error("action is not compatible with the invariant table: {0}")]
    IncompatibleAction(String),

    #[error("unknown normal subgroup `{0}`")]
    UnknownNormal(String),

    #[error("cannot parse cyclotomic `{0}`")]
    CyclotomicParse(String),

    #[error("cache entry does not match the group: {0}")]
    CacheMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
